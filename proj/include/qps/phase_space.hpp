#pragma once
// The 2^N x 2^N phase-space grid: dense Z/X/displacement operators and the
// finite Fourier transform in a fixed self-dual basis, rays and shifted
// lines with their rank-one projectors, MUB tables, and eigensystems.

#include <utility>

#include "qps/coset.hpp"
#include "qps/dense.hpp"
#include "qps/pauli.hpp"

namespace qps {

struct Slope {
    bool infinite = false;
    GfElem value;  // meaningful when !infinite

    static Slope finite(GfElem v) { return {false, v}; }
    static Slope inf() { return {true, {}}; }
    friend bool operator==(const Slope&, const Slope&) = default;
};

struct LineId {
    Slope slope;
    GfElem intercept;
};

struct MubColumn {
    Slope slope;
    std::vector<DisplacementLabel> labels;  // the 2^N - 1 non-identity ray operators
};

struct MubTable {
    std::vector<MubColumn> columns;  // finite slopes in power order, then infinite
};

struct EigenSystem {
    Slope slope;
    // vectors[k] is the common eigenvector for intercept elements_power_order()[k];
    // signs[k][g] is its D(alpha_g, lambda alpha_g) eigenvalue (+1/-1), with
    // alpha_g running over the nonzero elements in power order (beta_g for the
    // infinite slope).
    std::vector<std::vector<cplx>> vectors;
    std::vector<std::vector<int>> signs;
};

class PhaseSpace {
public:
    PhaseSpace(Gf2Field field, GfBasis sd_basis);
    explicit PhaseSpace(const Gf2Field& field);  // uses find_self_dual_basis

    const Gf2Field& field() const { return field_; }
    const GfBasis& sd_basis() const { return sd_; }
    int qubits() const { return field_.degree(); }
    int dim() const { return int(field_.order()); }

    // Computational index of |nu>: bits tr(nu theta_i) with qubit 1 as the
    // most significant bit.
    int index_of(GfElem nu) const { return idx_of_[nu.bits]; }
    GfElem element_at(int index) const { return elem_at_[size_t(index)]; }
    std::string ket_label(int index) const;  // e.g. "0101"

    PauliString displacement_string(GfElem alpha, GfElem beta) const;

    CMat z_dense(GfElem alpha) const;
    CMat x_dense(GfElem beta) const;
    CMat displacement_dense(GfElem alpha, GfElem beta) const;
    CMat fourier_dense() const;
    CMat pauli_dense(const PauliString& p) const;
    CMat cnot_dense(const CnotGate& g) const;

    std::vector<Slope> all_slopes() const;  // 2^N + 1 of them
    std::vector<std::pair<GfElem, GfElem>> ray_points(Slope s) const;
    std::vector<DisplacementLabel> ray_labels(Slope s) const;  // non-identity, power order

    // Rank-one projector of the line; intercepts != 0 are obtained by
    // conjugating the ray projector with D(0, gamma) (finite slope) or
    // D(gamma, 0) (infinite slope).
    CMat line_projector(const LineId& line) const;
    // Same operator as the character-weighted sum 2^-N sum_a chi(gamma a) D(a, la).
    CMat line_projector_weighted(const LineId& line) const;

    MubTable mub_table() const;
    EigenSystem eigensystem(Slope s) const;

private:
    void require_dense_dim(int cap) const;

    Gf2Field field_;
    GfBasis sd_;
    std::vector<int> idx_of_;
    std::vector<GfElem> elem_at_;
};

}  // namespace qps
