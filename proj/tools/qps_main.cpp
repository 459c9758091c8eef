// qps: command-line front end over the libqps C API.
//
// Subcommands: field, mubs, coarse, wigner, coarse-wigner, conjugate.
// Exit codes: 0 success, 2 usage error, 3 validation error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "qps.h"

namespace {

struct StringDeleter {
    void operator()(char* s) const { qps_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

struct FieldDeleter {
    void operator()(qps_field* f) const { qps_field_destroy(f); }
};
struct PartitionDeleter {
    void operator()(qps_partition* p) const { qps_partition_destroy(p); }
};
struct StateDeleter {
    void operator()(qps_state* s) const { qps_state_destroy(s); }
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

[[noreturn]] void raise(qps_status status) {
    const std::string msg = qps_last_error();
    if (status == QPS_ERR_INVALID_ARGUMENT) throw UsageError(msg);
    throw ValidationError(msg);
}

std::unique_ptr<qps_field, FieldDeleter> make_field(int degree, uint32_t modulus) {
    qps_field* f = nullptr;
    if (qps_status st = qps_field_create(degree, modulus, &f); st != QPS_OK) raise(st);
    return std::unique_ptr<qps_field, FieldDeleter>(f);
}

std::unique_ptr<qps_partition, PartitionDeleter> make_partition(const qps_field* f,
                                                                const std::string& mode, int m,
                                                                const std::string& basis) {
    qps_partition* p = nullptr;
    qps_status st;
    if (mode == "subfield")
        st = qps_partition_create_subfield(f, m, &p);
    else
        st = qps_partition_create_general(f, m, basis.c_str(), &p);
    if (st != QPS_OK) raise(st);
    return std::unique_ptr<qps_partition, PartitionDeleter>(p);
}

std::unique_ptr<qps_state, StateDeleter> load_state(const std::string& path) {
    qps_state* s = nullptr;
    if (qps_status st = qps_state_load_file(path.c_str(), &s); st != QPS_OK) raise(st);
    return std::unique_ptr<qps_state, StateDeleter>(s);
}

// Relative --output paths honor QPS_OUTPUT_DIR when set.
void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::filesystem::path path(output_path);
    if (const char* dir = std::getenv("QPS_OUTPUT_DIR"); dir && *dir && path.is_relative())
        path = std::filesystem::path(dir) / path;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot open output file '" + path.string() + "'");
    out << text;
}

void check_mode(const std::string& mode, const std::string& basis) {
    if (mode != "general" && mode != "subfield")
        throw UsageError("--mode must be 'general' or 'subfield'");
    if (mode == "general" && basis.empty())
        throw UsageError("--mode general requires --basis");
    if (mode == "subfield" && !basis.empty())
        throw UsageError("--mode subfield does not take --basis");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete phase space of N qubits over GF(2^N): displacement operators,"
                 " MUB tables, coset coarse graining, and discrete Wigner functions"};
    app.require_subcommand(1);

    int degree = 0;
    uint32_t modulus = 0;
    int m = 0;
    std::string mode, basis, cnots, state_path, format, output;

    auto add_field_opts = [&](CLI::App* cmd) {
        cmd->add_option("--degree", degree, "Number of qubits N (field GF(2^N))")
            ->required()
            ->check(CLI::Range(1, 16));
        cmd->add_option("--modulus", modulus,
                        "Modulus polynomial as an integer bit pattern (bit i = coeff of x^i);"
                        " default: smallest primitive polynomial");
    };
    auto add_partition_opts = [&](CLI::App* cmd, bool required) {
        auto* mopt = cmd->add_option("--m", m, "Subfield degree m of the GF(2^m) coarse grid");
        auto* modeopt =
            cmd->add_option("--mode", mode, "Partition mode: 'general' or 'subfield'");
        cmd->add_option("--basis", basis,
                        "Relative basis for general mode, comma-separated labels (e.g. '1,s1')");
        if (required) {
            mopt->required();
            modeopt->required();
        }
    };
    auto add_output_opts = [&](CLI::App* cmd, const std::string& default_format) {
        format = default_format;
        cmd->add_option("--format", format, "Output format (default: " + default_format + ")");
        cmd->add_option("--output", output,
                        "Output file (default: stdout); relative paths honor QPS_OUTPUT_DIR");
    };

    CLI::App* cmd_field = app.add_subcommand("field", "Emit the field/partition JSON document");
    add_field_opts(cmd_field);
    add_partition_opts(cmd_field, false);
    add_output_opts(cmd_field, "text");

    CLI::App* cmd_mubs = app.add_subcommand("mubs", "Emit the MUB operator table");
    add_field_opts(cmd_mubs);
    add_output_opts(cmd_mubs, "text");

    CLI::App* cmd_coarse =
        app.add_subcommand("coarse", "Emit the surviving displacement operators per coarse ray");
    add_field_opts(cmd_coarse);
    add_partition_opts(cmd_coarse, true);
    cmd_coarse->add_option("--cnot", cnots, "CNOT conjugation sequence 'c:t,c:t,...' (1-based)");
    add_output_opts(cmd_coarse, "text");

    CLI::App* cmd_wigner = app.add_subcommand("wigner", "Emit the fine Wigner table of a state");
    add_field_opts(cmd_wigner);
    cmd_wigner->add_option("--state", state_path, "State file (JSON)")->required();
    add_output_opts(cmd_wigner, "csv");

    CLI::App* cmd_cwigner =
        app.add_subcommand("coarse-wigner", "Emit the coarse Wigner table of a state");
    add_field_opts(cmd_cwigner);
    add_partition_opts(cmd_cwigner, true);
    cmd_cwigner->add_option("--state", state_path, "State file (JSON)")->required();
    add_output_opts(cmd_cwigner, "csv");

    std::string paulis;
    CLI::App* cmd_conj =
        app.add_subcommand("conjugate", "Conjugate Pauli strings by a CNOT sequence");
    cmd_conj->add_option("--paulis", paulis, "Pauli strings, comma-separated (e.g. 'ZZZ,XXX')")
        ->required();
    cmd_conj->add_option("--cnot", cnots, "CNOT sequence 'c:t,c:t,...' (1-based)")->required();
    add_output_opts(cmd_conj, "text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        char* raw = nullptr;
        if (cmd_field->parsed()) {
            if (format != "text" && format != "json")
                throw UsageError("--format must be 'text' or 'json'");
            auto field = make_field(degree, modulus);
            const bool pretty = format != "json";
            if (!mode.empty() || m != 0) {
                check_mode(mode, basis);
                if (m == 0) throw UsageError("partition mode requires --m");
                auto part = make_partition(field.get(), mode, m, basis);
                if (qps_status st = qps_partition_json(part.get(), pretty, &raw); st != QPS_OK)
                    raise(st);
            } else if (qps_status st = qps_field_json(field.get(), pretty, &raw); st != QPS_OK) {
                raise(st);
            }
            emit(ApiString(raw).get(), output);
        } else if (cmd_mubs->parsed()) {
            auto field = make_field(degree, modulus);
            if (qps_status st = qps_mub_table(field.get(), format.c_str(), &raw); st != QPS_OK)
                raise(st);
            emit(ApiString(raw).get(), output);
        } else if (cmd_coarse->parsed()) {
            check_mode(mode, basis);
            auto field = make_field(degree, modulus);
            auto part = make_partition(field.get(), mode, m, basis);
            if (qps_status st = qps_survivor_table(part.get(), cnots.empty() ? nullptr : cnots.c_str(),
                                                   format.c_str(), &raw);
                st != QPS_OK)
                raise(st);
            emit(ApiString(raw).get(), output);
        } else if (cmd_wigner->parsed()) {
            auto field = make_field(degree, modulus);
            auto state = load_state(state_path);
            if (qps_status st = qps_wigner(field.get(), state.get(), format.c_str(), &raw);
                st != QPS_OK)
                raise(st);
            emit(ApiString(raw).get(), output);
        } else if (cmd_cwigner->parsed()) {
            check_mode(mode, basis);
            auto field = make_field(degree, modulus);
            auto part = make_partition(field.get(), mode, m, basis);
            auto state = load_state(state_path);
            if (qps_status st =
                    qps_coarse_wigner(part.get(), state.get(), format.c_str(), &raw);
                st != QPS_OK)
                raise(st);
            emit(ApiString(raw).get(), output);
        } else if (cmd_conj->parsed()) {
            if (qps_status st =
                    qps_conjugate_paulis(paulis.c_str(), cnots.c_str(), format.c_str(), &raw);
                st != QPS_OK)
                raise(st);
            emit(ApiString(raw).get(), output);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
