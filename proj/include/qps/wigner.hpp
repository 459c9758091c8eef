#pragma once
// Discrete Wigner kernel, the fine Wigner function and its inverse, and the
// coarse kernel / coarse Wigner function over a coset partition.

#include "qps/coarse.hpp"
#include "qps/state.hpp"

namespace qps {

struct WignerTable {
    bool coarse = false;
    int dim = 0;                      // 2^N points per axis (fine) or 2^m cosets (coarse)
    std::vector<std::string> labels;  // computational kets (fine) or coset offsets (coarse)
    // values[row][col] with col indexing the horizontal (alpha) axis and row
    // the vertical (beta / Fourier) axis.
    std::vector<std::vector<double>> values;

    double sum() const;
};

// Delta(alpha, beta) = 2^-N sum chi(alpha a' + beta b') D(a', b').
// (Characteristic 2: the kernel's alpha a' - beta b' is the same sum.)
CMat kernel_dense(const PhaseSpace& ps, GfElem alpha, GfElem beta);

WignerTable wigner_of_state(const PhaseSpace& ps, const QuantumState& state);
QuantumState reconstruct_state(const PhaseSpace& ps, const WignerTable& w);

// Sum of the kernels over the coset rectangle C_tau x C_xi.
CMat coarse_kernel(const PhaseSpace& ps, const CosetPartition& pt, int tau_index, int xi_index);
WignerTable coarse_wigner(const PhaseSpace& ps, const CosetPartition& pt,
                          const QuantumState& state);
// Independent route: aggregate an existing fine table over the coset blocks.
WignerTable coarse_by_block_sum(const PhaseSpace& ps, const CosetPartition& pt,
                                const WignerTable& fine);

}  // namespace qps
