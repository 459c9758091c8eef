#include "qps.h"

#include <cstring>
#include <new>
#include <string>

#include "qps/serialize.hpp"
#include "qps/state.hpp"
#include "qps/wigner.hpp"

struct qps_field {
    qps::Gf2Field field;
};

struct qps_partition {
    qps::CosetPartition partition;
};

struct qps_state {
    qps::QuantumState state;
};

namespace {

thread_local std::string g_last_error;

qps_status fail(qps_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

// Uniform exception-to-status translation for every entry point.
template <typename Fn>
qps_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        return fail(QPS_ERR_VALIDATION, e.what());
    } catch (const std::runtime_error& e) {
        return fail(QPS_ERR_IO, e.what());
    } catch (const std::bad_alloc&) {
        return fail(QPS_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(QPS_ERR_INTERNAL, e.what());
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::vector<qps::GfElem> parse_basis_labels(const qps::Gf2Field& f, const char* labels) {
    std::vector<qps::GfElem> out;
    std::string_view text(labels);
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view item = text.substr(pos, end - pos);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (!item.empty()) out.push_back(f.parse_label(item));
        pos = end + 1;
    }
    return out;
}

qps_status render_wigner(const qps::WignerTable& w, const std::string& fmt, char** out) {
    if (fmt != "csv" && fmt != "json")
        return fail(QPS_ERR_INVALID_ARGUMENT, "format must be \"csv\" or \"json\"");
    *out = copy_string(fmt == "csv" ? qps::wigner_csv(w) : qps::wigner_json(w));
    return QPS_OK;
}

std::vector<qps::PauliString> parse_pauli_list(const char* paulis) {
    std::vector<qps::PauliString> out;
    std::string_view text(paulis);
    std::string item;
    auto flush = [&] {
        if (!item.empty()) {
            out.push_back(qps::PauliString::parse(item));
            item.clear();
        }
    };
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r')
            flush();
        else
            item += c;
    }
    flush();
    return out;
}

}  // namespace

extern "C" {

const char* qps_last_error(void) { return g_last_error.c_str(); }

void qps_string_free(char* s) { delete[] s; }

qps_status qps_field_create(int degree, uint32_t modulus, qps_field** out) {
    if (!out) return fail(QPS_ERR_INVALID_ARGUMENT, "out is NULL");
    *out = nullptr;
    return guarded([&] {
        const uint32_t mod = modulus ? modulus : qps::Gf2Field::default_modulus(degree);
        *out = new qps_field{qps::Gf2Field(degree, mod)};
        return QPS_OK;
    });
}

void qps_field_destroy(qps_field* f) { delete f; }

int qps_field_degree(const qps_field* f) { return f ? f->field.degree() : 0; }

uint32_t qps_field_modulus(const qps_field* f) { return f ? f->field.modulus() : 0; }

qps_status qps_field_json(const qps_field* f, int pretty, char** out) {
    if (!f || !out) return fail(QPS_ERR_INVALID_ARGUMENT, "field or out is NULL");
    return guarded([&] {
        *out = copy_string(qps::field_json(f->field, nullptr, pretty != 0));
        return QPS_OK;
    });
}

qps_status qps_partition_create_general(const qps_field* f, int m, const char* basis_labels,
                                        qps_partition** out) {
    if (!f || !basis_labels || !out)
        return fail(QPS_ERR_INVALID_ARGUMENT, "field, basis_labels or out is NULL");
    *out = nullptr;
    return guarded([&] {
        const auto basis = parse_basis_labels(f->field, basis_labels);
        *out = new qps_partition{qps::coset_decompose_general(f->field, m, basis)};
        return QPS_OK;
    });
}

qps_status qps_partition_create_subfield(const qps_field* f, int m, qps_partition** out) {
    if (!f || !out) return fail(QPS_ERR_INVALID_ARGUMENT, "field or out is NULL");
    *out = nullptr;
    return guarded([&] {
        *out = new qps_partition{qps::coset_decompose_subfield(f->field, m)};
        return QPS_OK;
    });
}

void qps_partition_destroy(qps_partition* p) { delete p; }

qps_status qps_partition_json(const qps_partition* p, int pretty, char** out) {
    if (!p || !out) return fail(QPS_ERR_INVALID_ARGUMENT, "partition or out is NULL");
    return guarded([&] {
        *out = copy_string(qps::field_json(p->partition.field, &p->partition, pretty != 0));
        return QPS_OK;
    });
}

qps_status qps_mub_table(const qps_field* f, const char* format, char** out) {
    if (!f || !format || !out)
        return fail(QPS_ERR_INVALID_ARGUMENT, "field, format or out is NULL");
    const std::string fmt(format);
    if (fmt != "text" && fmt != "json")
        return fail(QPS_ERR_INVALID_ARGUMENT, "format must be \"text\" or \"json\"");
    return guarded([&] {
        const qps::PhaseSpace ps(f->field);
        const qps::MubTable table = ps.mub_table();
        *out = copy_string(fmt == "text" ? qps::mub_text(ps, table) : qps::mub_json(ps, table));
        return QPS_OK;
    });
}

qps_status qps_survivor_table(const qps_partition* p, const char* cnots, const char* format,
                              char** out) {
    if (!p || !format || !out)
        return fail(QPS_ERR_INVALID_ARGUMENT, "partition, format or out is NULL");
    const std::string fmt(format);
    if (fmt != "text" && fmt != "json")
        return fail(QPS_ERR_INVALID_ARGUMENT, "format must be \"text\" or \"json\"");
    return guarded([&] {
        const qps::PhaseSpace ps(p->partition.field);
        qps::SurvivorTable table = qps::survivor_table(ps, p->partition);
        if (cnots && *cnots)
            table = qps::conjugated(std::move(table),
                                    qps::parse_cnot_list(cnots, p->partition.field.degree()));
        *out = copy_string(fmt == "text" ? qps::survivor_text(table)
                                         : qps::survivor_json(table));
        return QPS_OK;
    });
}

qps_status qps_state_load_file(const char* path, qps_state** out) {
    if (!path || !out) return fail(QPS_ERR_INVALID_ARGUMENT, "path or out is NULL");
    *out = nullptr;
    return guarded([&] {
        *out = new qps_state{qps::parse_state_file(path)};
        return QPS_OK;
    });
}

qps_status qps_state_parse_json(const char* json_text, qps_state** out) {
    if (!json_text || !out) return fail(QPS_ERR_INVALID_ARGUMENT, "json_text or out is NULL");
    *out = nullptr;
    return guarded([&] {
        *out = new qps_state{qps::parse_state_json(json_text)};
        return QPS_OK;
    });
}

void qps_state_destroy(qps_state* s) { delete s; }

int qps_state_dim(const qps_state* s) { return s ? s->state.dim() : 0; }

qps_status qps_wigner(const qps_field* f, const qps_state* s, const char* format, char** out) {
    if (!f || !s || !format || !out)
        return fail(QPS_ERR_INVALID_ARGUMENT, "field, state, format or out is NULL");
    return guarded([&] {
        const qps::PhaseSpace ps(f->field);
        return render_wigner(qps::wigner_of_state(ps, s->state), format, out);
    });
}

qps_status qps_coarse_wigner(const qps_partition* p, const qps_state* s, const char* format,
                             char** out) {
    if (!p || !s || !format || !out)
        return fail(QPS_ERR_INVALID_ARGUMENT, "partition, state, format or out is NULL");
    return guarded([&] {
        const qps::PhaseSpace ps(p->partition.field);
        return render_wigner(qps::coarse_wigner(ps, p->partition, s->state), format, out);
    });
}

qps_status qps_conjugate_paulis(const char* paulis, const char* cnots, const char* format,
                                char** out) {
    if (!paulis || !format || !out)
        return fail(QPS_ERR_INVALID_ARGUMENT, "paulis, format or out is NULL");
    const std::string fmt(format);
    if (fmt != "text" && fmt != "json")
        return fail(QPS_ERR_INVALID_ARGUMENT, "format must be \"text\" or \"json\"");
    return guarded([&] {
        std::vector<qps::PauliString> ops = parse_pauli_list(paulis);
        if (ops.empty()) throw std::invalid_argument("no Pauli strings given");
        const int n = ops.front().size();
        for (const qps::PauliString& op : ops)
            if (op.size() != n) throw std::invalid_argument("Pauli string length mismatch");
        const auto gates = qps::parse_cnot_list(cnots ? cnots : "", n);
        for (qps::PauliString& op : ops) op = qps::cnot_conjugate(op, gates);
        *out = copy_string(fmt == "text" ? qps::pauli_list_text(ops)
                                         : qps::pauli_list_json(ops));
        return QPS_OK;
    });
}

}  // extern "C"
