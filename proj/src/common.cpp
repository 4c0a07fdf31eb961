#include "bellrand/common.hpp"

#include <cmath>
#include <cstdio>

namespace bellrand {

std::string format9(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

double SplitMix64::gaussian() {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
}

SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mixer(seed ^ (0x9e3779b97f4a7c15ULL + index * 0xbf58476d1ce4e5b9ULL));
    // Burn one output so adjacent indices decorrelate even for tiny seeds.
    mixer.next();
    return mixer;
}

}  // namespace bellrand
