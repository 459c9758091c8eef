#include "qps/serialize.hpp"

#include <cstdio>
#include <cstdlib>

#include <json.hpp>

namespace qps {
namespace {

using ordered_json = nlohmann::ordered_json;

int exponent_label(const Gf2Field& f, GfElem e) { return e.bits == 0 ? -1 : f.log(e); }

ordered_json partition_cosets_json(const CosetPartition& pt) {
    ordered_json cosets = ordered_json::array();
    for (const auto& coset : pt.cosets) {
        ordered_json entry = ordered_json::array();
        for (GfElem e : coset) entry.push_back(exponent_label(pt.field, e));
        cosets.push_back(std::move(entry));
    }
    return cosets;
}

ordered_json field_doc(const Gf2Field& f, const CosetPartition* pt) {
    ordered_json doc;
    doc["degree"] = f.degree();
    ordered_json modulus = ordered_json::array();
    for (int i = 0; i <= f.degree(); ++i) modulus.push_back(int(f.modulus() >> i & 1u));
    doc["modulus"] = std::move(modulus);
    if (pt) doc["cosets"] = partition_cosets_json(*pt);
    return doc;
}

std::string dump(const ordered_json& j, bool pretty) {
    return (pretty ? j.dump(2) : j.dump()) + "\n";
}

// Round through the 12-significant-digit text form so that CSV and JSON
// exports carry identical numeric values.
double quantize_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

}  // namespace

std::string slope_label(const Gf2Field& f, Slope s) { return s.infinite ? "inf" : f.label(s.value); }

std::string format_real(double v) {
    if (v == 0.0) v = 0.0;  // drop the sign of -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string field_json(const Gf2Field& f, const CosetPartition* pt, bool pretty) {
    return dump(field_doc(f, pt), pretty);
}

std::string mub_text(const PhaseSpace& ps, const MubTable& table) {
    std::string out;
    for (const MubColumn& col : table.columns) {
        out += "slope " + slope_label(ps.field(), col.slope) + ":";
        for (const DisplacementLabel& lab : col.labels)
            out += " " + ps.displacement_string(lab.alpha, lab.beta).str();
        out += "\n";
    }
    return out;
}

std::string mub_json(const PhaseSpace& ps, const MubTable& table) {
    ordered_json doc = ordered_json::array();
    for (const MubColumn& col : table.columns) {
        ordered_json entry;
        entry["slope"] = slope_label(ps.field(), col.slope);
        ordered_json ops = ordered_json::array();
        for (const DisplacementLabel& lab : col.labels)
            ops.push_back(ps.displacement_string(lab.alpha, lab.beta).str());
        entry["operators"] = std::move(ops);
        doc.push_back(std::move(entry));
    }
    return dump(doc, false);
}

std::string survivor_text(const SurvivorTable& table) {
    std::string out;
    for (const SurvivorRow& row : table.rows) {
        out += "slope " + slope_label(table.partition.field, row.slope);
        if (row.slope.infinite) out += " (vertical ray)";
        out += ":";
        for (const PauliString& op : row.ops) out += " " + op.str();
        out += "\n";
    }
    return out;
}

std::string survivor_json(const SurvivorTable& table) {
    ordered_json doc;
    doc["m"] = table.partition.m;
    doc["n"] = table.partition.n;
    doc["partition"] = field_doc(table.partition.field, &table.partition);
    ordered_json slopes = ordered_json::array();
    for (const SurvivorRow& row : table.rows) {
        ordered_json entry;
        entry["slope"] = slope_label(table.partition.field, row.slope);
        ordered_json ops = ordered_json::array();
        for (const PauliString& op : row.ops) ops.push_back(op.str());
        entry["survivors"] = std::move(ops);
        slopes.push_back(std::move(entry));
    }
    doc["slopes"] = std::move(slopes);
    return dump(doc, false);
}

std::string wigner_csv(const WignerTable& w) {
    std::string out;
    for (const std::string& label : w.labels) out += "," + label;
    out += "\n";
    for (size_t r = 0; r < w.values.size(); ++r) {
        out += w.labels[r];
        for (double v : w.values[r]) out += "," + format_real(v);
        out += "\n";
    }
    return out;
}

std::string wigner_json(const WignerTable& w) {
    ordered_json doc;
    doc["dim"] = w.dim;
    doc["coarse"] = w.coarse;
    doc["labels"] = w.labels;
    ordered_json values = ordered_json::array();
    for (const auto& row : w.values) {
        ordered_json jrow = ordered_json::array();
        for (double v : row) jrow.push_back(quantize_real(v == 0.0 ? 0.0 : v));
        values.push_back(std::move(jrow));
    }
    doc["values"] = std::move(values);
    return dump(doc, false);
}

std::string pauli_list_text(const std::vector<PauliString>& ops) {
    std::string out;
    for (const PauliString& op : ops) out += op.str() + "\n";
    return out;
}

std::string pauli_list_json(const std::vector<PauliString>& ops) {
    ordered_json doc = ordered_json::array();
    for (const PauliString& op : ops) doc.push_back(op.str());
    return dump(doc, false);
}

}  // namespace qps
