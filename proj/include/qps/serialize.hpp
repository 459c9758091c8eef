#pragma once
// Deterministic text / JSON / CSV renderers for field, partition, MUB,
// survivor and Wigner artifacts. UTF-8, LF line endings, reals with 12
// significant digits.

#include <string>

#include "qps/coarse.hpp"
#include "qps/wigner.hpp"

namespace qps {

std::string slope_label(const Gf2Field& f, Slope s);  // element label or "inf"

// {"degree": N, "modulus": [c0..cN], "cosets": [[exponents]]} with -1 as the
// exponent label of the zero element; "cosets" is present only with a
// partition.
std::string field_json(const Gf2Field& f, const CosetPartition* pt, bool pretty);

std::string mub_text(const PhaseSpace& ps, const MubTable& table);
std::string mub_json(const PhaseSpace& ps, const MubTable& table);

std::string survivor_text(const SurvivorTable& table);
std::string survivor_json(const SurvivorTable& table);

std::string wigner_csv(const WignerTable& w);
std::string wigner_json(const WignerTable& w);

std::string pauli_list_text(const std::vector<PauliString>& ops);
std::string pauli_list_json(const std::vector<PauliString>& ops);

std::string format_real(double v);  // %.12g, "-0" normalized to "0"

}  // namespace qps
