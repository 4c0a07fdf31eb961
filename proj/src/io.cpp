#include "bellrand/io.hpp"

#include <fstream>

namespace bellrand {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void require_format(const json& j, const std::string& tag) {
    if (!j.is_object()) throw ValidationError("expected a JSON object");
    if (!j.contains("format") || !j["format"].is_string() || j["format"] != tag)
        throw ValidationError("missing or wrong format tag, expected \"" + tag + "\"");
}

template <std::size_t N>
std::array<double, N> number_array(const json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_array() || j[key].size() != N)
        throw ValidationError("field \"" + key + "\" must be an array of " + std::to_string(N) +
                              " numbers");
    std::array<double, N> out;
    for (std::size_t i = 0; i < N; ++i) {
        if (!j[key][i].is_number())
            throw ValidationError("field \"" + key + "\" must contain numbers only");
        out[i] = j[key][i].get<double>();
    }
    return out;
}

}  // namespace

ProbTable table_from_json(const json& j) {
    require_format(j, "behavior-2222/v1");
    if (!j.contains("p") || !j["p"].is_array() || j["p"].size() != 4)
        throw ValidationError("field \"p\" must be an array of 4 rows");
    ProbTable p;
    for (int s = 0; s < 4; ++s) {
        const json& row = j["p"][s];
        if (!row.is_array() || row.size() != 4)
            throw ValidationError("each row of \"p\" must hold 4 numbers");
        for (int o = 0; o < 4; ++o) {
            if (!row[o].is_number()) throw ValidationError("\"p\" must contain numbers only");
            p[s][o] = row[o].get<double>();
        }
    }
    return p;
}

Behavior behavior_from_json(const json& j) {
    Behavior beh{table_from_json(j)};
    validate_behavior(beh);
    return beh;
}

ordered_json behavior_to_json(const Behavior& beh) {
    ordered_json j;
    j["format"] = "behavior-2222/v1";
    j["p"] = beh.p;
    return j;
}

BellExpression expression_from_json(const json& j) {
    require_format(j, "bell-expr/v1");
    BellExpression e;
    e.ga = number_array<2>(j, "gA");
    e.gb = number_array<2>(j, "gB");
    e.gc = number_array<4>(j, "gC");
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw ValidationError("field \"name\" must be a string");
        e.name = j["name"].get<std::string>();
    }
    return e;
}

ordered_json expression_to_json(const BellExpression& expr) {
    ordered_json j;
    j["format"] = "bell-expr/v1";
    j["gA"] = expr.ga;
    j["gB"] = expr.gb;
    j["gC"] = expr.gc;
    j["name"] = expr.name;
    return j;
}

QubitRealization realization_from_json(const json& j) {
    require_format(j, "qubit-real/v1");
    if (!j.contains("theta") || !j["theta"].is_number())
        throw ValidationError("field \"theta\" must be a number");
    QubitRealization r;
    r.theta = j["theta"].get<double>();
    auto vec = [&j](const char* key) {
        const std::array<double, 3> v = number_array<3>(j, key);
        return Vec3{v[0], v[1], v[2]};
    };
    r.a1 = vec("a1");
    r.a2 = vec("a2");
    r.b1 = vec("b1");
    r.b2 = vec("b2");
    validate_realization(r);
    return r;
}

ordered_json realization_to_json(const QubitRealization& r) {
    ordered_json j;
    j["format"] = "qubit-real/v1";
    j["theta"] = r.theta;
    auto arr = [](const Vec3& v) { return std::array<double, 3>{v.x, v.y, v.z}; };
    j["a1"] = arr(r.a1);
    j["a2"] = arr(r.a2);
    j["b1"] = arr(r.b1);
    j["b2"] = arr(r.b2);
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    // Unreadable path is a usage error, not a content problem, hence not a
    // ValidationError.
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return json::parse(in);
}

void save_json_file(const std::string& path, const ordered_json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << j.dump(2) << '\n';
}

}  // namespace bellrand
