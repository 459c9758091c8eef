#pragma once
// Decomposition of GF(2^{mn}) into additive cosets of an initial
// GF(2^m)-subspace, either from a general relative basis or from the
// embedded subfield of a quadratic extension.

#include "qps/gf.hpp"

namespace qps {

enum class PartitionMode { general, subfield };

struct CosetPartition {
    Gf2Field field;
    PartitionMode mode = PartitionMode::general;
    int m = 1, n = 1;                    // field degree N = m * n
    std::vector<GfElem> relative_basis;  // {mu_0, ..., mu_{n-1}}, basis over GF(2^m)
    std::vector<GfElem> subfield;        // embedded GF(2^m) in power order: 0, s^e, ..., 1
    std::vector<GfElem> initial_coset;   // C_0; zero first, then by ascending exponent
    std::vector<GfElem> representatives; // coset offsets; representatives[0] == 0
    std::vector<std::vector<GfElem>> cosets;  // cosets[i] = representatives[i] + C_0

    int coset_size() const { return int(initial_coset.size()); }
    int coset_count() const { return int(representatives.size()); }
    int coset_index_of(GfElem a) const;
    bool subfield_contains(GfElem a) const;
};

// Embedded copy of GF(2^m) inside GF(2^N) for m | N, in power order.
std::vector<GfElem> embedded_subfield(const Gf2Field& f, int m);

CosetPartition coset_decompose_general(const Gf2Field& f, int m,
                                       const std::vector<GfElem>& relative_basis);
CosetPartition coset_decompose_subfield(const Gf2Field& f, int m);

}  // namespace qps
