#include "qps/dense.hpp"

#include <cmath>
#include <stdexcept>

namespace qps {

CMat CMat::identity(int n) {
    CMat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

CMat CMat::operator*(const CMat& rhs) const {
    if (n_ != rhs.n_) throw std::invalid_argument("matrix dimension mismatch");
    CMat out(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const cplx v = at(i, k);
            if (v == cplx{}) continue;
            for (int j = 0; j < n_; ++j) out.at(i, j) += v * rhs.at(k, j);
        }
    return out;
}

CMat& CMat::operator+=(const CMat& rhs) {
    if (n_ != rhs.n_) throw std::invalid_argument("matrix dimension mismatch");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
    return *this;
}

CMat& CMat::axpy(cplx s, const CMat& rhs) {
    if (n_ != rhs.n_) throw std::invalid_argument("matrix dimension mismatch");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += s * rhs.a_[i];
    return *this;
}

CMat CMat::scaled(cplx s) const {
    CMat out(n_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = s * a_[i];
    return out;
}

CMat CMat::adjoint() const {
    CMat out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out.at(j, i) = std::conj(at(i, j));
    return out;
}

cplx CMat::trace() const {
    cplx t{};
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

double CMat::max_abs_diff(const CMat& rhs) const {
    if (n_ != rhs.n_) throw std::invalid_argument("matrix dimension mismatch");
    double m = 0.0;
    for (size_t i = 0; i < a_.size(); ++i) m = std::max(m, std::abs(a_[i] - rhs.a_[i]));
    return m;
}

double CMat::frobenius_dist(const CMat& rhs) const {
    if (n_ != rhs.n_) throw std::invalid_argument("matrix dimension mismatch");
    double s = 0.0;
    for (size_t i = 0; i < a_.size(); ++i) s += std::norm(a_[i] - rhs.a_[i]);
    return std::sqrt(s);
}

bool CMat::approx_equal(const CMat& rhs, double tol) const { return max_abs_diff(rhs) <= tol; }

bool CMat::is_hermitian(double tol) const {
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j)
            if (std::abs(at(i, j) - std::conj(at(j, i))) > tol) return false;
    return true;
}

cplx inner(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
    cplx s{};
    for (size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

std::vector<cplx> apply(const CMat& m, const std::vector<cplx>& v) {
    if (size_t(m.dim()) != v.size()) throw std::invalid_argument("vector dimension mismatch");
    std::vector<cplx> out(v.size());
    for (int i = 0; i < m.dim(); ++i) {
        cplx s{};
        for (int j = 0; j < m.dim(); ++j) s += m.at(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

}  // namespace qps
