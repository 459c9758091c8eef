#include "qps/coarse.hpp"

#include <stdexcept>

namespace qps {
namespace {

void check_slope(const CosetPartition& pt, Slope s) {
    if (!s.infinite && !pt.subfield_contains(s.value))
        throw std::invalid_argument("slope not in subfield");
}

void check_line(const CosetPartition& pt, const CoarseLine& line) {
    check_slope(pt, line.slope);
    if (line.coset_index < 0 || line.coset_index >= pt.coset_count())
        throw std::invalid_argument("coset index out of range");
}

}  // namespace

int coset_character_sum(const CosetPartition& pt, GfElem x) {
    int sum = 0;
    for (GfElem gamma : pt.initial_coset) sum += pt.field.character(pt.field.mul(gamma, x));
    if (sum != 0 && sum != pt.coset_size())
        throw std::logic_error("coset character sum outside {0, |C0|}");
    return sum;
}

std::vector<DisplacementLabel> survivors(const CosetPartition& pt, Slope s) {
    check_slope(pt, s);
    const Gf2Field& f = pt.field;
    std::vector<DisplacementLabel> out;
    for (GfElem e : f.elements_power_order()) {
        if (e.bits == 0) continue;  // identity label is disregarded
        if (coset_character_sum(pt, e) == 0) continue;
        if (s.infinite)
            out.push_back({f.zero(), e});
        else
            out.push_back({e, f.mul(s.value, e)});
    }
    return out;
}

SurvivorTable survivor_table(const PhaseSpace& ps, const CosetPartition& pt) {
    if (!(ps.field() == pt.field)) throw std::invalid_argument("partition/field mismatch");
    SurvivorTable table{pt, {}};
    std::vector<Slope> slopes;
    for (GfElem lambda : pt.subfield) slopes.push_back(Slope::finite(lambda));
    slopes.push_back(Slope::inf());
    for (Slope s : slopes) {
        SurvivorRow row{s, survivors(pt, s), {}};
        for (const DisplacementLabel& lab : row.labels)
            row.ops.push_back(ps.displacement_string(lab.alpha, lab.beta));
        table.rows.push_back(std::move(row));
    }
    return table;
}

SurvivorTable conjugated(SurvivorTable table, const std::vector<CnotGate>& gates) {
    for (SurvivorRow& row : table.rows)
        for (PauliString& op : row.ops) op = cnot_conjugate(op, gates);
    return table;
}

CMat coarse_line_projector(const PhaseSpace& ps, const CosetPartition& pt,
                           const CoarseLine& line) {
    if (!(ps.field() == pt.field)) throw std::invalid_argument("partition/field mismatch");
    check_line(pt, line);
    CMat sum(ps.dim());
    for (GfElem gamma : pt.cosets[size_t(line.coset_index)])
        sum += ps.line_projector({line.slope, gamma});
    return sum;
}

CMat coarse_line_projector_survivor_sum(const PhaseSpace& ps, const CosetPartition& pt,
                                        const CoarseLine& line) {
    if (!(ps.field() == pt.field)) throw std::invalid_argument("partition/field mismatch");
    check_line(pt, line);
    const Gf2Field& f = pt.field;
    const GfElem offset = pt.representatives[size_t(line.coset_index)];
    CMat sum(ps.dim());
    const double scale = 1.0 / double(ps.dim());
    for (auto [alpha, beta] : ps.ray_points(line.slope)) {
        const GfElem arg = line.slope.infinite ? beta : alpha;
        const int bracket = coset_character_sum(pt, arg);
        if (bracket == 0) continue;
        const double w = scale * bracket * f.character(f.mul(offset, arg));
        sum.axpy(w, ps.displacement_dense(alpha, beta));
    }
    return sum;
}

}  // namespace qps
