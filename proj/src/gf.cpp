#include "qps/gf.hpp"

#include <algorithm>
#include <stdexcept>

namespace qps {
namespace {

int poly_degree(uint32_t p) {
    int d = -1;
    for (int i = 0; i < 32; ++i)
        if (p >> i & 1u) d = i;
    return d;
}

// Remainder of a modulo m over GF(2).
uint32_t poly_mod(uint64_t a, uint32_t m) {
    const int dm = poly_degree(m);
    for (int i = 63; i >= dm; --i)
        if (a >> i & 1u) a ^= uint64_t(m) << (i - dm);
    return uint32_t(a);
}

bool poly_irreducible(uint32_t p, int degree) {
    if (degree == 1) return true;
    if ((p & 1u) == 0) return false;  // divisible by x
    for (int d = 1; 2 * d <= degree; ++d)
        for (uint32_t q = 1u << d; q < (2u << d); ++q)
            if (poly_mod(p, q) == 0 && q != p) return false;
    return true;
}

}  // namespace

Gf2Field::Gf2Field(int degree, uint32_t modulus) : degree_(degree), modulus_(modulus) {
    if (degree < 1 || degree > 16) throw std::invalid_argument("field degree must be in [1, 16]");
    if (poly_degree(modulus) != degree)
        throw std::invalid_argument("modulus degree does not match field degree");
    if (!poly_irreducible(modulus, degree)) throw std::invalid_argument("modulus not irreducible");

    order_ = 1u << degree;
    sigma_ = {poly_mod(2u, modulus)};
    log_.assign(order_, -1);
    antilog_.assign(order_ - 1, GfElem{});

    // Walk the powers of x; an early return to 1 means x does not generate
    // the multiplicative group.
    uint32_t b = sigma_.bits;
    if (b == 0) throw std::invalid_argument("modulus not primitive");
    antilog_[0] = one();
    log_[1] = 0;
    for (uint32_t k = 1; k <= order_ - 2; ++k) {
        if (b == 1 || log_[b] != -1) throw std::invalid_argument("modulus not primitive");
        antilog_[k] = {b};
        log_[b] = int(k);
        b = b << 1;
        if (b & order_) b ^= modulus;
    }
    if (b != 1) throw std::invalid_argument("modulus not primitive");

    power_order_.reserve(order_);
    power_order_.push_back(zero());
    for (uint32_t k = 1; k < order_; ++k) power_order_.push_back(antilog_[k % (order_ - 1)]);
}

uint32_t Gf2Field::default_modulus(int degree) {
    if (degree < 1 || degree > 16) throw std::invalid_argument("field degree must be in [1, 16]");
    for (uint32_t m = (1u << degree) + 1; m < (2u << degree); m += 2) {
        if (!poly_irreducible(m, degree)) continue;
        try {
            Gf2Field probe(degree, m);
            return m;
        } catch (const std::invalid_argument&) {
        }
    }
    throw std::logic_error("no primitive modulus found");  // unreachable for degree <= 16
}

Gf2Field Gf2Field::with_default_modulus(int degree) {
    return Gf2Field(degree, default_modulus(degree));
}

GfElem Gf2Field::element(uint32_t bits) const {
    if (bits >= order_) throw std::invalid_argument("element out of field range");
    return {bits};
}

GfElem Gf2Field::sigma_pow(int64_t k) const {
    const int64_t period = order_ - 1;
    int64_t r = k % period;
    if (r < 0) r += period;
    return antilog_[size_t(r)];
}

int Gf2Field::log(GfElem a) const {
    if (a.bits == 0) throw std::invalid_argument("zero has no logarithm");
    return log_[a.bits];
}

GfElem Gf2Field::mul(GfElem a, GfElem b) const {
    if (a.bits == 0 || b.bits == 0) return zero();
    int e = log_[a.bits] + log_[b.bits];
    const int period = int(order_) - 1;
    if (e >= period) e -= period;
    return antilog_[size_t(e)];
}

GfElem Gf2Field::inv(GfElem a) const {
    if (a.bits == 0) throw std::invalid_argument("zero has no inverse");
    const int period = int(order_) - 1;
    return antilog_[size_t((period - log_[a.bits]) % period)];
}

GfElem Gf2Field::pow(GfElem a, int64_t k) const {
    if (a.bits == 0) {
        if (k > 0) return zero();
        if (k == 0) return one();
        throw std::invalid_argument("zero has no inverse");
    }
    const int64_t period = order_ - 1;
    int64_t r = (int64_t(log_[a.bits]) * (k % period)) % period;
    if (r < 0) r += period;
    return antilog_[size_t(r)];
}

int Gf2Field::trace(GfElem a) const {
    GfElem acc = a;
    GfElem t = a;
    for (int i = 1; i < degree_; ++i) {
        t = mul(t, t);
        acc = add(acc, t);
    }
    if (acc.bits > 1) throw std::logic_error("trace left the prime field");
    return int(acc.bits);
}

int Gf2Field::power_order_index(GfElem a) const {
    if (a.bits == 0) return 0;
    const int e = log_[a.bits];
    return e == 0 ? int(order_) - 1 : e;
}

std::string Gf2Field::label(GfElem a) const {
    if (a.bits == 0) return "0";
    const int e = log_[a.bits];
    if (e == 0) return "1";
    return "s" + std::to_string(e);
}

GfElem Gf2Field::parse_label(std::string_view text) const {
    if (text == "0") return zero();
    if (text == "1") return one();
    if (!text.empty() && text.front() == 's') {
        std::string_view digits = text.substr(1);
        if (!digits.empty() && digits.front() == '^') digits = digits.substr(1);
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string_view::npos) {
            long k = std::stol(std::string(digits));
            return sigma_pow(k);
        }
    }
    throw std::invalid_argument("bad element label '" + std::string(text) + "'");
}

GfBasis Gf2Field::make_basis(std::vector<GfElem> elems, BasisKind kind) const {
    if (int(elems.size()) != degree_) throw std::invalid_argument("not a basis: wrong element count");
    // Rank over GF(2) by Gaussian elimination on the coefficient rows.
    std::vector<uint32_t> rows;
    for (GfElem e : elems) rows.push_back(e.bits);
    int rank = 0;
    for (int bit = degree_ - 1; bit >= 0; --bit) {
        int pivot = -1;
        for (int r = rank; r < int(rows.size()); ++r)
            if (rows[r] >> bit & 1u) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = 0; r < int(rows.size()); ++r)
            if (r != rank && (rows[r] >> bit & 1u)) rows[r] ^= rows[rank];
        ++rank;
    }
    if (rank != degree_) throw std::invalid_argument("not a basis: elements are dependent");
    return GfBasis{std::move(elems), kind};
}

GfBasis Gf2Field::polynomial_basis() const {
    std::vector<GfElem> elems;
    for (int i = 0; i < degree_; ++i) elems.push_back(sigma_pow(i));
    return make_basis(std::move(elems), BasisKind::polynomial);
}

bool Gf2Field::is_self_dual(const GfBasis& b) const {
    for (int i = 0; i < degree_; ++i)
        for (int j = 0; j < degree_; ++j)
            if (trace(mul(b.elements[i], b.elements[j])) != (i == j ? 1 : 0)) return false;
    return true;
}

GfBasis Gf2Field::dual_basis(const GfBasis& b) const {
    const int n = degree_;
    // Invert the Gram matrix G_ij = tr(theta_i theta_j) over GF(2); rows held
    // as bit masks with the identity appended in the upper bits.
    std::vector<uint64_t> rows(n);
    for (int i = 0; i < n; ++i) {
        uint64_t r = 0;
        for (int j = 0; j < n; ++j)
            if (trace(mul(b.elements[i], b.elements[j]))) r |= uint64_t(1) << j;
        r |= uint64_t(1) << (n + i);
        rows[i] = r;
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (rows[r] >> col & 1u) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::runtime_error("dual basis unavailable");
        std::swap(rows[col], rows[pivot]);
        for (int r = 0; r < n; ++r)
            if (r != col && (rows[r] >> col & 1u)) rows[r] ^= rows[col];
    }
    std::vector<GfElem> dual(n);
    for (int j = 0; j < n; ++j) {
        GfElem acc = zero();
        for (int k = 0; k < n; ++k)
            if (rows[j] >> (n + k) & 1u) acc = add(acc, b.elements[k]);
        dual[j] = acc;
    }
    GfBasis d{std::move(dual), BasisKind::custom};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (trace(mul(b.elements[i], d.elements[j])) != (i == j ? 1 : 0))
                throw std::runtime_error("dual basis unavailable");
    return d;
}

std::vector<int> Gf2Field::expand_in_basis(GfElem x, const GfBasis& b) const {
    if (int(b.elements.size()) != degree_)
        throw std::invalid_argument("basis size does not match field degree");
    std::vector<int> coeffs(degree_);
    if (b.kind == BasisKind::self_dual || is_self_dual(b)) {
        for (int i = 0; i < degree_; ++i) coeffs[i] = trace(mul(x, b.elements[i]));
        return coeffs;
    }
    const GfBasis dual = dual_basis(b);
    for (int i = 0; i < degree_; ++i) coeffs[i] = trace(mul(x, dual.elements[i]));
    return coeffs;
}

namespace {

bool sd_search(const Gf2Field& f, const std::vector<int>& candidates, size_t start,
               std::vector<GfElem>& chosen) {
    if (int(chosen.size()) == f.degree()) return true;
    for (size_t c = start; c < candidates.size(); ++c) {
        const GfElem e = f.sigma_pow(candidates[c]);
        bool ok = true;
        for (GfElem prev : chosen)
            if (f.trace(f.mul(e, prev)) != 0) {
                ok = false;
                break;
            }
        if (!ok) continue;
        chosen.push_back(e);
        if (sd_search(f, candidates, c + 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

GfBasis find_self_dual_basis(const Gf2Field& f) {
    // Depth-first over ascending exponents yields the lexicographically
    // smallest exponent list. tr(theta^2) = tr(theta), so diagonal entries
    // force tr(theta) = 1.
    std::vector<int> candidates;
    for (uint32_t e = 0; e + 1 < f.order(); ++e)
        if (f.trace(f.sigma_pow(e)) == 1) candidates.push_back(int(e));
    std::vector<GfElem> chosen;
    if (!sd_search(f, candidates, 0, chosen)) throw std::logic_error("no self-dual basis found");
    return GfBasis{std::move(chosen), BasisKind::self_dual};
}

}  // namespace qps
