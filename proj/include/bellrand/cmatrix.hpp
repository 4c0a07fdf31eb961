#pragma once

#include <complex>
#include <vector>

namespace bellrand {

using Complex = std::complex<double>;

// Dense complex matrix, just big enough for the degenerate-block states
// (dimensions up to 2d x 2d with small d).
class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(int rows, int cols) : rows_(rows), cols_(cols), m_(rows * cols) {}

    static CMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Complex& operator()(int i, int j) { return m_[i * cols_ + j]; }
    const Complex& operator()(int i, int j) const { return m_[i * cols_ + j]; }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Complex> m_;
};

CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix adjoint(const CMatrix& a);
CMatrix transpose(const CMatrix& a);
Complex trace(const CMatrix& a);
bool is_unitary(const CMatrix& a, double tol = 1e-12);

}  // namespace bellrand
