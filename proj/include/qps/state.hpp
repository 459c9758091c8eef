#pragma once
// Quantum states for the dense oracle: unit vectors or density matrices,
// plus the JSON state-file format
//   {"dim": 2^N, "kind": "vector"|"density", "data": [[re, im], ...]}.

#include <string>

#include "qps/dense.hpp"

namespace qps {

class QuantumState {
public:
    static QuantumState pure(std::vector<cplx> amplitudes);
    static QuantumState density(CMat rho);
    static QuantumState maximally_mixed(int dim);

    int dim() const { return dim_; }
    bool is_pure() const { return pure_; }
    const std::vector<cplx>& amplitudes() const;
    CMat density_matrix() const;  // |psi><psi| for pure states

private:
    QuantumState() = default;
    int dim_ = 0;
    bool pure_ = false;
    std::vector<cplx> amps_;
    CMat rho_;
};

QuantumState parse_state_json(const std::string& text);
QuantumState parse_state_file(const std::string& path);

}  // namespace qps
