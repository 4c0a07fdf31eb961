#include "bellrand/cmatrix.hpp"

#include <cmath>
#include <stdexcept>

namespace bellrand {

CMatrix CMatrix::identity(int n) {
    CMatrix id(n, n);
    for (int i = 0; i < n; ++i) id(i, i) = 1.0;
    return id;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
    CMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

CMatrix adjoint(const CMatrix& a) {
    CMatrix out(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
    return out;
}

CMatrix transpose(const CMatrix& a) {
    CMatrix out(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
    return out;
}

Complex trace(const CMatrix& a) {
    Complex t{};
    for (int i = 0; i < a.rows() && i < a.cols(); ++i) t += a(i, i);
    return t;
}

bool is_unitary(const CMatrix& a, double tol) {
    if (a.rows() != a.cols()) return false;
    const CMatrix g = adjoint(a) * a;
    for (int i = 0; i < g.rows(); ++i) {
        for (int j = 0; j < g.cols(); ++j) {
            const Complex want = i == j ? Complex{1.0} : Complex{};
            if (std::abs(g(i, j) - want) > tol) return false;
        }
    }
    return true;
}

}  // namespace bellrand
