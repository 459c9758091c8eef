#pragma once
// Symbolic N-qubit Pauli strings with an i^k global phase, their text
// format, CNOT conjugation, and the Hermitizing displacement phase Phi.

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "qps/gf.hpp"

namespace qps {

enum class Pauli : uint8_t { I, X, Y, Z };

char pauli_char(Pauli p);

struct PauliString {
    std::vector<Pauli> letters;
    int phase_power = 0;  // global phase i^phase_power, kept in [0, 3]

    int size() const { return int(letters.size()); }
    // Phase prefix in {"", "i", "-", "-i"} followed by the letters, e.g. "iZX".
    std::string str() const;
    static PauliString parse(std::string_view text);

    bool commutes_with(const PauliString& other) const;
    bool same_letters(const PauliString& other) const;

    friend bool operator==(const PauliString&, const PauliString&) = default;
};

struct CnotGate {
    int control = 0;  // 1-based qubit indices; qubit 1 is the leftmost letter
    int target = 0;
};

// U p U^dag with the gates applied left to right.
PauliString cnot_conjugate(PauliString p, const std::vector<CnotGate>& gates);

// "c:t,c:t,..." with 1-based indices; qubit_count > 0 enables range checks.
std::vector<CnotGate> parse_cnot_list(std::string_view text, int qubit_count);

struct DisplacementLabel {
    GfElem alpha, beta;
    friend bool operator==(const DisplacementLabel&, const DisplacementLabel&) = default;
};

// Phi(alpha, beta) = i^{tr(ab)} (-1)^{f(ab)} with f(x) = sum_{j<i} x^{2^i + 2^j};
// returned as the exponent k of i^k. Phi(alpha, 0) = Phi(0, beta) = 1 and
// Phi^2 = chi(alpha beta).
int phase_phi_power(const Gf2Field& f, GfElem alpha, GfElem beta);
std::complex<double> phase_phi(const Gf2Field& f, GfElem alpha, GfElem beta);

// Tensor-factor form of D(alpha, beta) = Phi Z_alpha X_beta in a self-dual
// basis; the dense realization of the result equals Phi Z_alpha X_beta exactly.
PauliString displacement_string(const Gf2Field& f, const GfBasis& sd_basis, GfElem alpha,
                                GfElem beta);

}  // namespace qps
