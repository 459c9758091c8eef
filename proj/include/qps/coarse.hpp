#pragma once
// Thick lines of the coarse-grained grid: the survivor rule that selects
// the displacement operators retained by a coset partition, and the coarse
// line projectors built two independent ways.

#include "qps/coset.hpp"
#include "qps/phase_space.hpp"

namespace qps {

struct CoarseLine {
    Slope slope;          // in the embedded subfield, or infinite
    int coset_index = 0;  // intercept coset, by partition order
};

// sum_{gamma in C_0} chi(gamma x); always 0 or |C_0|.
int coset_character_sum(const CosetPartition& pt, GfElem x);

// Non-identity labels (alpha, lambda alpha) whose bracketed character sum
// is nonzero; (0, beta) with chi(gamma beta) for the infinite slope.
std::vector<DisplacementLabel> survivors(const CosetPartition& pt, Slope s);

struct SurvivorRow {
    Slope slope;
    std::vector<DisplacementLabel> labels;
    std::vector<PauliString> ops;
};

struct SurvivorTable {
    CosetPartition partition;
    std::vector<SurvivorRow> rows;  // subfield slopes in power order, then infinite
};

SurvivorTable survivor_table(const PhaseSpace& ps, const CosetPartition& pt);
SurvivorTable conjugated(SurvivorTable table, const std::vector<CnotGate>& gates);

// Sum of the thin-line projectors with intercepts in the coset.
CMat coarse_line_projector(const PhaseSpace& ps, const CosetPartition& pt, const CoarseLine& line);
// The same operator from the survivor rule:
// 2^-N sum_a chi(r a) [sum_{gamma in C_0} chi(gamma a)] D(a, lambda a).
CMat coarse_line_projector_survivor_sum(const PhaseSpace& ps, const CosetPartition& pt,
                                        const CoarseLine& line);

}  // namespace qps
