#pragma once
// Exact arithmetic in GF(2^N), 1 <= N <= 16: polynomial-coefficient bit
// vectors with log/antilog tables, trace and additive character, basis
// expansion, and a deterministic self-dual basis search.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qps {

// Element of GF(2^N) in polynomial representation: bit i of `bits` is the
// coefficient of x^i. The zero element is bits == 0.
struct GfElem {
    uint32_t bits = 0;
    friend constexpr auto operator<=>(const GfElem&, const GfElem&) = default;
};

enum class BasisKind { polynomial, normal, self_dual, custom };

// Ordered GF(2)-basis of the field. Construct through Gf2Field::make_basis
// or find_self_dual_basis, which check linear independence.
struct GfBasis {
    std::vector<GfElem> elements;
    BasisKind kind = BasisKind::custom;
};

class Gf2Field {
public:
    // Builds the tables for GF(2^degree) with the given modulus polynomial
    // (bit i = coefficient of x^i). Throws std::invalid_argument with
    // "not irreducible" / "not primitive" when the modulus is unusable.
    Gf2Field(int degree, uint32_t modulus);

    // Smallest primitive modulus (as an integer bit pattern) for the degree.
    static uint32_t default_modulus(int degree);
    static Gf2Field with_default_modulus(int degree);

    int degree() const { return degree_; }
    uint32_t order() const { return order_; }  // 2^N
    uint32_t modulus() const { return modulus_; }

    GfElem zero() const { return {}; }
    GfElem one() const { return {1}; }
    GfElem sigma() const { return sigma_; }  // the class of x; primitive

    GfElem element(uint32_t bits) const;  // range-checked
    GfElem sigma_pow(int64_t k) const;
    int log(GfElem a) const;  // exponent in [0, 2^N-2]; throws on zero

    GfElem add(GfElem a, GfElem b) const { return {a.bits ^ b.bits}; }
    GfElem mul(GfElem a, GfElem b) const;
    GfElem inv(GfElem a) const;  // throws on zero
    GfElem pow(GfElem a, int64_t k) const;

    int trace(GfElem a) const;  // in {0, 1}
    int character(GfElem a) const { return trace(a) ? -1 : 1; }

    // All elements in power order: 0, sigma, sigma^2, ..., sigma^{2^N-1} = 1.
    const std::vector<GfElem>& elements_power_order() const { return power_order_; }
    int power_order_index(GfElem a) const;

    // "0", "1", or "s<k>" for sigma^k. parse_label also accepts "s^<k>".
    std::string label(GfElem a) const;
    GfElem parse_label(std::string_view text) const;

    GfBasis make_basis(std::vector<GfElem> elems, BasisKind kind = BasisKind::custom) const;
    GfBasis polynomial_basis() const;  // {1, sigma, ..., sigma^{N-1}}

    bool is_self_dual(const GfBasis& b) const;
    GfBasis dual_basis(const GfBasis& b) const;

    // Coefficients a_i with x = sum a_i theta_i.
    std::vector<int> expand_in_basis(GfElem x, const GfBasis& b) const;

    friend bool operator==(const Gf2Field& a, const Gf2Field& b) {
        return a.degree_ == b.degree_ && a.modulus_ == b.modulus_;
    }

private:
    int degree_ = 0;
    uint32_t order_ = 0;
    uint32_t modulus_ = 0;
    GfElem sigma_;
    std::vector<int> log_;         // element bits -> exponent; -1 for zero
    std::vector<GfElem> antilog_;  // exponent -> element, 2^N - 1 entries
    std::vector<GfElem> power_order_;
};

// Deterministic: lexicographically smallest exponent list satisfying
// tr(theta_i theta_j) = delta_ij.
GfBasis find_self_dual_basis(const Gf2Field& f);

}  // namespace qps
