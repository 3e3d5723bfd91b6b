// Copyright 2026 The mebasis Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Talks to the library exclusively through mebasis.h.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or argument error.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mebasis.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr std::uint32_t kMaxEnumerateQasmQubits = 14;
constexpr std::uint32_t kMaxOrdinalQubits = 64;

struct UsageError {
    std::string message;
};

struct IndexDeleter {
    void operator()(mb_index *p) const { mb_index_free(p); }
};
struct CircuitDeleter {
    void operator()(mb_circuit *p) const { mb_circuit_free(p); }
};
struct StateDeleter {
    void operator()(mb_statevector *p) const { mb_statevector_free(p); }
};
struct ReportDeleter {
    void operator()(mb_report *p) const { mb_report_free(p); }
};
struct StringDeleter {
    void operator()(char *p) const { mb_string_free(p); }
};

using IndexPtr = std::unique_ptr<mb_index, IndexDeleter>;
using CircuitPtr = std::unique_ptr<mb_circuit, CircuitDeleter>;
using StatePtr = std::unique_ptr<mb_statevector, StateDeleter>;
using ReportPtr = std::unique_ptr<mb_report, ReportDeleter>;

// Library failures are reported as usage errors attributed to `context`.
void check(mb_status status, const std::string &context) {
    if (status != MB_OK) {
        throw UsageError{context + ": " + mb_last_error()};
    }
}

// Lets the library phrase the TooFewQubits error for widths below 2.
void require_two_qubits(std::uint32_t n) {
    if (n < 2) {
        mb_index *probe = nullptr;
        check(mb_index_random(n, 0, &probe), "--n");
        mb_index_free(probe);
    }
}

std::string take(char *s) {
    std::unique_ptr<char, StringDeleter> owner(s);
    return owner ? std::string(owner.get()) : std::string();
}

struct Config {
    std::uint32_t n = 0;
    std::optional<std::string> pattern;
    std::optional<std::string> sign;
    std::optional<std::uint64_t> ordinal;
    std::optional<std::uint64_t> seed;
    std::string mode = "dense";
    std::string format;
    std::string out;
    std::uint32_t jobs = 1;
    bool force = false;
    bool all = false;
    std::uint32_t runs = 5;
};

struct Selection {
    IndexPtr index;
    std::optional<std::uint64_t> seed;
};

Selection select_index(const Config &cfg, bool allow_default_seed = false) {
    const int sources = (cfg.pattern || cfg.sign ? 1 : 0) + (cfg.ordinal ? 1 : 0) + (cfg.seed ? 1 : 0);
    if (sources > 1) {
        throw UsageError{"--pattern/--sign, --ordinal and --seed are mutually exclusive"};
    }
    if (sources == 0 && !allow_default_seed) {
        throw UsageError{"select an index with --pattern and --sign, --ordinal, or --seed"};
    }
    mb_index *raw = nullptr;
    Selection sel;
    if (cfg.pattern || cfg.sign) {
        if (!cfg.pattern || !cfg.sign) {
            throw UsageError{cfg.pattern ? "--sign is required with --pattern" : "--pattern is required with --sign"};
        }
        if (*cfg.sign != "+" && *cfg.sign != "-") {
            throw UsageError{"--sign: expected '+' or '-', got '" + *cfg.sign + "'"};
        }
        require_two_qubits(cfg.n);
        if (cfg.pattern->size() + 1 != cfg.n) {
            throw UsageError{"--pattern: expected " + std::to_string(cfg.n - 1) + " bits for --n " +
                             std::to_string(cfg.n) + ", got " + std::to_string(cfg.pattern->size())};
        }
        check(mb_index_from_pattern(*cfg.sign == "+" ? 1 : -1, cfg.pattern->c_str(), &raw), "--pattern");
    } else if (cfg.ordinal) {
        require_two_qubits(cfg.n);
        check(mb_index_from_ordinal(*cfg.ordinal, cfg.n, &raw), "--ordinal");
    } else {
        sel.seed = cfg.seed.value_or(0);
        check(mb_index_random(cfg.n, *sel.seed, &raw), "--n");
    }
    sel.index.reset(raw);
    return sel;
}

void emit(const Config &cfg, const std::string &text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
        throw UsageError{"--out: cannot open '" + cfg.out + "' for writing"};
    }
    file << text;
}

std::string ordinal_text(const mb_index *index) {
    if (mb_index_n_qubits(index) > kMaxOrdinalQubits) {
        return "n/a";
    }
    std::uint64_t k = 0;
    check(mb_index_ordinal(index, &k), "ordinal");
    return std::to_string(k);
}

int cmd_gen(const Config &cfg) {
    const std::string format = cfg.format.empty() ? "qasm" : cfg.format;
    auto sel = select_index(cfg);
    const mb_index *index = sel.index.get();

    mb_circuit *raw = nullptr;
    check(mb_circuit_build(index, &raw), "circuit");
    CircuitPtr circuit(raw);

    char *s = nullptr;
    check(mb_index_pattern(index, &s), "pattern");
    const std::string pattern = take(s);
    check(mb_index_state_text(index, &s), "state");
    const std::string state = take(s);
    std::uint32_t cnot = 0;
    std::uint32_t single = 0;
    check(mb_index_gate_counts(index, &cnot, &single), "counts");
    const char sign = mb_index_sign(index) > 0 ? '+' : '-';
    const std::uint64_t *seed_ptr = sel.seed ? &*sel.seed : nullptr;
    check(mb_circuit_to_qasm(circuit.get(), index, seed_ptr, &s), "qasm");
    const std::string qasm = take(s);
    const std::string seed_text = sel.seed ? std::to_string(*sel.seed) : "none";

    std::string out;
    if (format == "json") {
        check(mb_circuit_to_text(circuit.get(), &s), "circuit");
        nlohmann::ordered_json doc;
        doc["n"] = mb_index_n_qubits(index);
        doc["pattern"] = pattern;
        doc["sign"] = std::string(1, sign);
        doc["ordinal"] = ordinal_text(index);
        doc["seed"] = sel.seed ? nlohmann::ordered_json(*sel.seed) : nlohmann::ordered_json(nullptr);
        doc["state"] = state;
        doc["counts"] = {{"cnot", cnot}, {"single", single}};
        doc["circuit"] = take(s);
        doc["qasm"] = qasm;
        out = doc.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "n=" << mb_index_n_qubits(index) << "\n"
           << "pattern=" << pattern << "\n"
           << "sign=" << sign << "\n"
           << "ordinal=" << ordinal_text(index) << "\n"
           << "seed=" << seed_text << "\n"
           << "state=" << state << "\n"
           << "counts cnot=" << cnot << " single=" << single << "\n";
        if (format == "qasm") {
            os << qasm;
        } else {
            check(mb_circuit_to_text(circuit.get(), &s), "circuit");
            os << take(s);
        }
        out = os.str();
    }
    emit(cfg, out);
    return kExitOk;
}

int cmd_enumerate(const Config &cfg) {
    const std::string format = cfg.format.empty() ? "text" : cfg.format;
    require_two_qubits(cfg.n);
    if (cfg.n > kMaxOrdinalQubits) {
        throw UsageError{"--n: enumeration is limited to " + std::to_string(kMaxOrdinalQubits) + " qubits"};
    }
    if (format == "qasm" && cfg.n > kMaxEnumerateQasmQubits) {
        throw UsageError{"--n: qasm enumeration is limited to " + std::to_string(kMaxEnumerateQasmQubits) + " qubits"};
    }
    if (cfg.n > mb_default_qubit_limit() && !cfg.force) {
        throw UsageError{"--n: listing 2^" + std::to_string(cfg.n) + " indices needs --force"};
    }
    if (format == "qasm" && cfg.out.empty()) {
        throw UsageError{"--out: qasm enumeration needs an output directory"};
    }

    const std::uint64_t count = cfg.n == 64 ? 0 : std::uint64_t{1} << cfg.n;
    std::ostringstream os;
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    if (format == "qasm") {
        std::error_code ec;
        std::filesystem::create_directories(cfg.out, ec);
        if (ec) {
            throw UsageError{"--out: cannot create directory '" + cfg.out + "': " + ec.message()};
        }
    }
    std::uint64_t k = 0;
    do {
        mb_index *raw = nullptr;
        check(mb_index_from_ordinal(k, cfg.n, &raw), "--n");
        IndexPtr index(raw);
        char *s = nullptr;
        check(mb_index_pattern(index.get(), &s), "pattern");
        const std::string pattern = take(s);
        check(mb_index_state_text(index.get(), &s), "state");
        const std::string state = take(s);
        const char sign = mb_index_sign(index.get()) > 0 ? '+' : '-';
        if (format == "json") {
            doc.push_back({{"ordinal", k}, {"sign", std::string(1, sign)}, {"pattern", pattern}, {"state", state}});
        } else if (format == "qasm") {
            mb_circuit *c = nullptr;
            check(mb_circuit_build(index.get(), &c), "circuit");
            CircuitPtr circuit(c);
            check(mb_circuit_to_qasm(circuit.get(), index.get(), nullptr, &s), "qasm");
            const auto path = std::filesystem::path(cfg.out) / ("basis_" + std::to_string(k) + ".qasm");
            std::ofstream file(path, std::ios::binary);
            if (!file) {
                throw UsageError{"--out: cannot write '" + path.string() + "'"};
            }
            file << take(s);
            os << k << ' ' << sign << ' ' << pattern << ' ' << path.string() << '\n';
        } else {
            os << k << ' ' << sign << ' ' << pattern << ' ' << state << '\n';
        }
        ++k;
    } while (k != count);

    if (format == "json") {
        emit(cfg, doc.dump(2) + "\n");
    } else if (format == "qasm") {
        std::cout << os.str();
    } else {
        emit(cfg, os.str());
    }
    return kExitOk;
}

int cmd_verify(const Config &cfg) {
    const std::string format = cfg.format.empty() ? "text" : cfg.format;
    if (format == "qasm") {
        throw UsageError{"--format: verify reports are text or json"};
    }
    mb_report *raw = nullptr;
    if (cfg.all) {
        if (cfg.pattern || cfg.sign || cfg.ordinal || cfg.seed) {
            throw UsageError{"--all cannot be combined with an index selection"};
        }
        const mb_verify_mode mode = cfg.mode == "sparse" ? MB_VERIFY_SPARSE : MB_VERIFY_DENSE;
        check(mb_verify_complete_basis(cfg.n, mode, cfg.jobs, cfg.force ? 1 : 0, &raw), "--n");
    } else {
        auto sel = select_index(cfg);
        check(mb_verify_index(sel.index.get(), sel.seed ? &*sel.seed : nullptr, cfg.force ? 1 : 0, &raw), "--n");
    }
    ReportPtr report(raw);
    char *s = nullptr;
    check(format == "json" ? mb_report_to_json(report.get(), &s) : mb_report_to_text(report.get(), &s), "report");
    emit(cfg, take(s));
    return mb_report_passed(report.get()) ? kExitOk : kExitVerifyFailed;
}

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

int cmd_bench(const Config &cfg) {
    if (cfg.runs < 5) {
        throw UsageError{"--runs: at least 5 runs are required"};
    }
    auto sel = select_index(cfg, true);
    mb_circuit *c = nullptr;
    check(mb_circuit_build(sel.index.get(), &c), "circuit");
    CircuitPtr circuit(c);
    const std::size_t gates = mb_circuit_size(circuit.get());

    mb_statevector *probe = nullptr;
    check(mb_statevector_zero(cfg.n, cfg.force ? 1 : 0, &probe), "--n");
    StatePtr state(probe);

    using clock = std::chrono::steady_clock;
    std::vector<std::vector<double>> per_gate(gates);
    std::vector<double> totals;
    for (std::uint32_t r = 0; r < cfg.runs; ++r) {
        mb_statevector *fresh = nullptr;
        check(mb_statevector_zero(cfg.n, cfg.force ? 1 : 0, &fresh), "--n");
        state.reset(fresh);
        double total = 0.0;
        for (std::size_t g = 0; g < gates; ++g) {
            mb_gate gate{};
            check(mb_circuit_gate(circuit.get(), g, &gate), "gate");
            const auto t0 = clock::now();
            check(mb_statevector_apply(state.get(), &gate), "apply");
            const double dt = std::chrono::duration<double>(clock::now() - t0).count();
            per_gate[g].push_back(dt);
            total += dt;
        }
        totals.push_back(total);
    }

    char *s = nullptr;
    check(mb_circuit_to_text(circuit.get(), &s), "circuit");
    std::istringstream names(take(s));
    const double amps = static_cast<double>(std::uint64_t{1} << cfg.n);
    // H and X rewrite every amplitude; Z and CNOT only the half they act on.
    auto touched = [&](std::size_t g) {
        mb_gate gate{};
        check(mb_circuit_gate(circuit.get(), g, &gate), "gate");
        return gate.kind == MB_GATE_H || gate.kind == MB_GATE_X ? amps : amps / 2;
    };
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(6);
    os << "n=" << cfg.n << " amplitudes=" << (std::uint64_t{1} << cfg.n) << " gates=" << gates
       << " runs=" << cfg.runs << " seed=" << (sel.seed ? std::to_string(*sel.seed) : "none") << "\n";
    double touched_total = 0.0;
    for (std::size_t g = 0; g < gates; ++g) {
        std::string name;
        std::getline(names, name);
        const double t = median(per_gate[g]);
        touched_total += touched(g);
        os << "gate " << g << " [" << name << "] median_ms=" << t * 1e3
           << " amps_touched_per_s=" << (t > 0 ? touched(g) / t : 0.0) << "\n";
    }
    const double t = median(totals);
    os << "circuit median_ms=" << t * 1e3 << " amps_touched_per_s=" << (t > 0 ? touched_total / t : 0.0) << "\n";
    emit(cfg, os.str());
    return kExitOk;
}

void add_selection(CLI::App *cmd, Config &cfg) {
    cmd->add_option("--pattern", cfg.pattern, "Control pattern over {0,1}, leftmost bit drives qubit 1");
    cmd->add_option("--sign", cfg.sign, "'+' or '-' (Z after the Hadamard)");
    cmd->add_option("--ordinal", cfg.ordinal, "Index ordinal in [0, 2^n)");
    cmd->add_option("--seed", cfg.seed, "Seed for a random index (mt19937_64)");
}

}  // namespace

int main(int argc, char **argv) {
    Config cfg;
    CLI::App app{"Generate, simulate and verify maximally entangled basis circuits"};
    app.require_subcommand(1);

    auto *gen = app.add_subcommand("gen", "Build the circuit and closed form for one basis index");
    auto *enumerate = app.add_subcommand("enumerate", "List every basis index in ordinal order");
    auto *verify = app.add_subcommand("verify", "Verify one index or the complete basis");
    auto *bench = app.add_subcommand("bench", "Time gate application for a basis circuit");

    for (auto *cmd : {gen, enumerate, verify, bench}) {
        cmd->add_option("--n", cfg.n, "Number of qubits")->required();
        cmd->add_option("--out", cfg.out, "Output file (directory for enumerate --format qasm)");
        cmd->add_flag("--force", cfg.force, "Lift the default memory guard");
    }
    for (auto *cmd : {gen, verify, bench}) {
        add_selection(cmd, cfg);
    }
    const std::vector<std::string> formats{"text", "json", "qasm"};
    for (auto *cmd : {gen, enumerate, verify}) {
        cmd->add_option("--format", cfg.format, "text, json or qasm")->check(CLI::IsMember(formats));
    }
    verify->add_flag("--all", cfg.all, "Verify all 2^n basis vectors");
    verify->add_option("--mode", cfg.mode, "dense or sparse")->check(CLI::IsMember({"dense", "sparse"}));
    verify->add_option("--jobs", cfg.jobs, "Worker threads for dense verification")->check(CLI::Range(1, 256));
    bench->add_option("--runs", cfg.runs, "Timing repetitions (median is reported)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(cfg);
        if (enumerate->parsed()) return cmd_enumerate(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        if (bench->parsed()) return cmd_bench(cfg);
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.message << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
