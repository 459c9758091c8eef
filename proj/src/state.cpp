#include "qps/state.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qps {
namespace {

constexpr double kNormTol = 1e-8;

bool is_power_of_two(long v) { return v >= 1 && (v & (v - 1)) == 0; }

cplx parse_pair(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::invalid_argument("state data entries must be [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

QuantumState QuantumState::pure(std::vector<cplx> amplitudes) {
    QuantumState s;
    s.dim_ = int(amplitudes.size());
    s.pure_ = true;
    double norm = 0.0;
    for (const cplx& a : amplitudes) norm += std::norm(a);
    if (std::abs(norm - 1.0) > kNormTol) throw std::invalid_argument("state not normalized");
    s.amps_ = std::move(amplitudes);
    return s;
}

QuantumState QuantumState::density(CMat rho) {
    QuantumState s;
    s.dim_ = rho.dim();
    s.pure_ = false;
    if (std::abs(rho.trace() - cplx{1.0, 0.0}) > kNormTol)
        throw std::invalid_argument("state not normalized");
    if (!rho.is_hermitian(1e-8)) throw std::invalid_argument("density matrix not Hermitian");
    // Symmetrize away representable round-off.
    CMat sym = rho;
    sym += rho.adjoint();
    s.rho_ = sym.scaled(0.5);
    return s;
}

QuantumState QuantumState::maximally_mixed(int dim) {
    return density(CMat::identity(dim).scaled(1.0 / double(dim)));
}

const std::vector<cplx>& QuantumState::amplitudes() const {
    if (!pure_) throw std::logic_error("density state has no amplitude vector");
    return amps_;
}

CMat QuantumState::density_matrix() const {
    if (!pure_) return rho_;
    CMat rho(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) rho.at(i, j) = amps_[size_t(i)] * std::conj(amps_[size_t(j)]);
    return rho;
}

QuantumState parse_state_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("parse error: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("state file must be a JSON object");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer())
        throw std::invalid_argument("state file needs an integer \"dim\"");
    const long dim = doc["dim"].get<long>();
    if (!is_power_of_two(dim)) throw std::invalid_argument("dimension must be 2^N");
    const std::string kind = doc.value("kind", std::string{});
    if (kind != "vector" && kind != "density")
        throw std::invalid_argument("state kind must be \"vector\" or \"density\"");
    if (!doc.contains("data") || !doc["data"].is_array())
        throw std::invalid_argument("state file needs a \"data\" array");
    const nlohmann::json& data = doc["data"];

    if (kind == "vector") {
        if (long(data.size()) != dim)
            throw std::invalid_argument("vector data length does not match dim");
        std::vector<cplx> amps;
        for (const auto& entry : data) amps.push_back(parse_pair(entry));
        return QuantumState::pure(std::move(amps));
    }
    if (long(data.size()) != dim) throw std::invalid_argument("density data must be dim x dim");
    CMat rho(static_cast<int>(dim));
    for (long r = 0; r < dim; ++r) {
        const auto& row = data[size_t(r)];
        if (!row.is_array() || long(row.size()) != dim)
            throw std::invalid_argument("density data must be dim x dim");
        for (long c = 0; c < dim; ++c) rho.at(int(r), int(c)) = parse_pair(row[size_t(c)]);
    }
    return QuantumState::density(std::move(rho));
}

QuantumState parse_state_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open state file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_state_json(buf.str());
}

}  // namespace qps
