#pragma once
// Small dense complex matrices; enough linear algebra for the dense oracle
// checks of the symbolic layer (multiply, adjoint, trace, comparisons).

#include <complex>
#include <vector>

namespace qps {

using cplx = std::complex<double>;

class CMat {
public:
    CMat() = default;
    explicit CMat(int n) : n_(n), a_(size_t(n) * size_t(n)) {}
    static CMat identity(int n);

    int dim() const { return n_; }
    cplx& at(int r, int c) { return a_[size_t(r) * n_ + size_t(c)]; }
    const cplx& at(int r, int c) const { return a_[size_t(r) * n_ + size_t(c)]; }

    CMat operator*(const CMat& rhs) const;
    CMat& operator+=(const CMat& rhs);
    CMat& axpy(cplx s, const CMat& rhs);  // *this += s * rhs
    CMat scaled(cplx s) const;
    CMat adjoint() const;
    cplx trace() const;

    double max_abs_diff(const CMat& rhs) const;
    double frobenius_dist(const CMat& rhs) const;
    bool approx_equal(const CMat& rhs, double tol) const;
    bool is_hermitian(double tol) const;

private:
    int n_ = 0;
    std::vector<cplx> a_;
};

cplx inner(const std::vector<cplx>& a, const std::vector<cplx>& b);  // <a|b>
std::vector<cplx> apply(const CMat& m, const std::vector<cplx>& v);

}  // namespace qps
