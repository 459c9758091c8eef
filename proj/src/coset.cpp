#include "qps/coset.hpp"

#include <algorithm>
#include <stdexcept>

namespace qps {
namespace {

// Coset listing order: zero first, then ascending exponent (so the unit
// element, sigma^0, leads the nonzero part).
void sort_coset_order(const Gf2Field& f, std::vector<GfElem>& v) {
    std::sort(v.begin(), v.end(), [&](GfElem a, GfElem b) {
        const int ka = a.bits == 0 ? -1 : f.log(a);
        const int kb = b.bits == 0 ? -1 : f.log(b);
        return ka < kb;
    });
}

// Shared tail: build the coset lists from C_0 and the offsets, then check
// that they tile the whole field.
void finish_partition(CosetPartition& pt) {
    const Gf2Field& f = pt.field;
    pt.cosets.clear();
    std::vector<int> owner(f.order(), -1);
    for (int i = 0; i < pt.coset_count(); ++i) {
        std::vector<GfElem> coset;
        for (GfElem c : pt.initial_coset) {
            GfElem e = f.add(pt.representatives[i], c);
            if (owner[e.bits] != -1) throw std::invalid_argument("not a relative basis");
            owner[e.bits] = i;
            coset.push_back(e);
        }
        pt.cosets.push_back(std::move(coset));
    }
    for (int o : owner)
        if (o == -1) throw std::invalid_argument("not a relative basis");
    // C_0 must be an additive subgroup.
    for (GfElem a : pt.initial_coset)
        for (GfElem b : pt.initial_coset)
            if (owner[f.add(a, b).bits] != 0) throw std::logic_error("initial coset not closed");
}

}  // namespace

int CosetPartition::coset_index_of(GfElem a) const {
    for (int i = 0; i < coset_count(); ++i)
        for (GfElem e : cosets[i])
            if (e == a) return i;
    throw std::logic_error("element not covered by partition");
}

bool CosetPartition::subfield_contains(GfElem a) const {
    return std::find(subfield.begin(), subfield.end(), a) != subfield.end();
}

std::vector<GfElem> embedded_subfield(const Gf2Field& f, int m) {
    if (m < 1 || f.degree() % m != 0) throw std::invalid_argument("m must divide the field degree");
    const int64_t e = (int64_t(f.order()) - 1) / ((int64_t(1) << m) - 1);
    std::vector<GfElem> sub;
    sub.push_back(f.zero());
    for (int64_t k = 1; k < (int64_t(1) << m); ++k) sub.push_back(f.sigma_pow(k * e));
    return sub;
}

CosetPartition coset_decompose_general(const Gf2Field& f, int m,
                                       const std::vector<GfElem>& relative_basis) {
    if (m < 1 || f.degree() % m != 0) throw std::invalid_argument("m must divide the field degree");
    const int n = f.degree() / m;
    if (int(relative_basis.size()) != n)
        throw std::invalid_argument("not a relative basis: expected " + std::to_string(n) +
                                    " elements");

    CosetPartition pt{f, PartitionMode::general, m, n, relative_basis,
                      embedded_subfield(f, m),  {},                    {}, {}};

    // C_0 = all GF(2^m)-combinations of mu_1, ..., mu_{n-1}.
    std::vector<GfElem> coset{f.zero()};
    for (int j = 1; j < n; ++j) {
        std::vector<GfElem> grown;
        for (GfElem tau : pt.subfield)
            for (GfElem c : coset) grown.push_back(f.add(c, f.mul(tau, relative_basis[size_t(j)])));
        coset = std::move(grown);
    }
    std::sort(coset.begin(), coset.end());
    coset.erase(std::unique(coset.begin(), coset.end()), coset.end());
    const size_t expected = size_t(1) << (m * (n - 1));
    if (coset.size() != expected) throw std::invalid_argument("not a relative basis");
    sort_coset_order(f, coset);
    pt.initial_coset = std::move(coset);

    for (GfElem tau : pt.subfield) pt.representatives.push_back(f.mul(tau, relative_basis[0]));
    finish_partition(pt);
    return pt;
}

CosetPartition coset_decompose_subfield(const Gf2Field& f, int m) {
    if (f.degree() != 2 * m) throw std::invalid_argument("not a quadratic extension");

    CosetPartition pt{f, PartitionMode::subfield, m, 2,
                      {f.sigma(), f.one()},  // C_tau = tau * sigma + C_0
                      embedded_subfield(f, m), {}, {}, {}};
    pt.initial_coset = pt.subfield;
    sort_coset_order(f, pt.initial_coset);

    // Representatives tau_i = sigma^{2^m (i-1) + i}.
    pt.representatives.push_back(f.zero());
    for (int64_t i = 1; i < (int64_t(1) << m); ++i)
        pt.representatives.push_back(f.sigma_pow((int64_t(1) << m) * (i - 1) + i));
    finish_partition(pt);
    return pt;
}

}  // namespace qps
