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

#include "mebasis/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>

#include <json.hpp>

#include "mebasis/error.hpp"

namespace mebasis {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

std::string label_string(const std::vector<std::uint8_t> &label) {
    std::string out(label.size(), '0');
    for (std::size_t j = 0; j < label.size(); ++j) {
        out[j] = static_cast<char>('0' + label[j]);
    }
    return out;
}

std::uint64_t label_value(const std::vector<std::uint8_t> &label) {
    std::uint64_t value = 0;
    for (auto bit : label) {
        value = (value << 1) | bit;
    }
    return value;
}

std::string format_double(const char *fmt, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, value);
    return buf;
}

void check_basis_width(unsigned n, unsigned limit, const char *mode) {
    if (n < 2) {
        throw Error(ErrorCode::TooFewQubits, "need at least 2 qubits, got " + std::to_string(n));
    }
    if (n > limit) {
        throw Error(ErrorCode::TooManyQubits, std::string(mode) + " basis verification is limited to " +
                                                  std::to_string(limit) + " qubits, got " + std::to_string(n));
    }
}

// Splits [0, count) round-robin across workers and merges per-worker maxima.
template <typename Body>
void parallel_rows(std::size_t count, unsigned jobs, Body body) {
    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::size_t>(count, 256))));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(0U, i);
        }
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([=, &body] {
            for (std::size_t i = w; i < count; i += jobs) {
                body(w, i);
            }
        });
    }
    for (auto &t : workers) {
        t.join();
    }
}

VerificationReport verify_dense(unsigned n, const BasisVerifyOptions &options) {
    check_basis_width(n, kMaxDenseBasisQubits, "dense");
    // The Gram workspace holds 2^n vectors of 2^n amplitudes.
    check_memory_guard(2 * n, options.force);
    const std::size_t dim = std::size_t{1} << n;
    std::vector<Complex> vectors(dim * dim);

    parallel_rows(dim, options.jobs, [&](unsigned, std::size_t k) {
        const auto state = run(build_basis_circuit(from_ordinal(k, n)));
        std::copy(state.amplitudes().begin(), state.amplitudes().end(), vectors.begin() + k * dim);
    });

    const unsigned workers = std::max(1U, options.jobs);
    std::vector<double> diag_dev(workers, 0.0);
    std::vector<double> off_dev(workers, 0.0);
    // Hermitian, so the upper triangle covers every entry.
    parallel_rows(dim, options.jobs, [&](unsigned w, std::size_t i) {
        const Complex *vi = vectors.data() + i * dim;
        for (std::size_t j = i; j < dim; ++j) {
            const Complex *vj = vectors.data() + j * dim;
            double re = 0.0;
            double im = 0.0;
            for (std::size_t a = 0; a < dim; ++a) {
                const double xr = vi[a].real();
                const double xi = vi[a].imag();
                const double yr = vj[a].real();
                const double yi = vj[a].imag();
                re += xr * yr + xi * yi;
                im += xr * yi - xi * yr;
            }
            if (i == j) {
                diag_dev[w] = std::max(diag_dev[w], std::hypot(re - 1.0, im));
            } else {
                off_dev[w] = std::max(off_dev[w], std::hypot(re, im));
            }
        }
    });

    VerificationReport report;
    report.n_qubits = n;
    report.mode = "dense";
    report.add("gram_diagonal", *std::max_element(diag_dev.begin(), diag_dev.end()), kGramTolerance);
    report.add("gram_off_diagonal", *std::max_element(off_dev.begin(), off_dev.end()), kGramTolerance);
    return report;
}

VerificationReport verify_sparse(unsigned n, const BasisVerifyOptions &options) {
    check_basis_width(n, kMaxSparseBasisQubits, "sparse");
    // Label tables are indexed by the label's value, so they scale like a statevector.
    check_memory_guard(n, options.force);
    const std::uint64_t count = std::uint64_t{1} << n;
    constexpr std::uint64_t kNoOwner = std::numeric_limits<std::uint64_t>::max();

    std::vector<std::uint64_t> owners(2 * count, kNoOwner);
    std::vector<std::uint8_t> multiplicity(count, 0);
    std::vector<std::uint8_t> positive_hits(count, 0);
    double self_dev = 0.0;

    auto record = [&](std::uint64_t label, std::uint64_t k, bool positive) {
        auto &m = multiplicity[label];
        if (m < 2) {
            owners[2 * label + m] = k;
        }
        if (m < 255) {
            ++m;
        }
        if (positive && positive_hits[label] < 255) {
            ++positive_hits[label];
        }
    };

    for (std::uint64_t k = 0; k < count; ++k) {
        const auto state = closed_form_state(from_ordinal(k, n));
        self_dev = std::max(self_dev, std::abs(sparse_overlap(state, state) - 1.0));
        const bool positive = state.sign == Sign::Plus;
        record(label_value(state.label_a), k, positive);
        record(label_value(state.label_b), k, positive);
    }

    std::uint64_t bad_multiplicity = 0;
    std::uint64_t bad_coverage = 0;
    double cross_dev = 0.0;
    for (std::uint64_t label = 0; label < count; ++label) {
        if (positive_hits[label] != 1) {
            ++bad_coverage;
        }
        if (multiplicity[label] != 2) {
            ++bad_multiplicity;
        }
        if (multiplicity[label] >= 2) {
            const auto a = closed_form_state(from_ordinal(owners[2 * label], n));
            const auto b = closed_form_state(from_ordinal(owners[2 * label + 1], n));
            cross_dev = std::max(cross_dev, std::abs(sparse_overlap(a, b)));
        }
    }

    VerificationReport report;
    report.n_qubits = n;
    report.mode = "sparse";
    report.add("sparse_self_overlap", self_dev, 0.0);
    report.add("sparse_cross_overlap", cross_dev, 0.0);
    report.add("label_multiplicity", static_cast<double>(bad_multiplicity), 0.0);
    report.add("pair_coverage", static_cast<double>(bad_coverage), 0.0);
    return report;
}

}  // namespace

SparseBasisState closed_form_state(const BasisIndex &index) {
    const auto bits = index.pattern().bits();
    SparseBasisState state;
    state.n_qubits = index.n_qubits();
    state.sign = index.sign();
    state.label_b.reserve(state.n_qubits);
    state.label_a.reserve(state.n_qubits);
    state.label_b.push_back(1);
    state.label_a.push_back(0);
    for (auto bit : bits) {
        state.label_b.push_back(bit);
        state.label_a.push_back(bit ^ 1U);
    }
    return state;
}

std::string to_string(const SparseBasisState &state) {
    return "(|" + label_string(state.label_a) + "> " + sign_char(state.sign) + " |" + label_string(state.label_b) +
           ">)/sqrt(2)";
}

Statevector to_dense(const SparseBasisState &state, bool force) {
    check_memory_guard(state.n_qubits, force);
    std::vector<Complex> amps(std::size_t{1} << state.n_qubits);
    amps[label_value(state.label_a)] = kInvSqrt2;
    amps[label_value(state.label_b)] = state.sign == Sign::Plus ? kInvSqrt2 : -kInvSqrt2;
    return Statevector::from_amplitudes(state.n_qubits, std::move(amps), force);
}

double sparse_overlap(const SparseBasisState &a, const SparseBasisState &b) {
    if (a.n_qubits != b.n_qubits) {
        throw Error(ErrorCode::WidthMismatch,
                    std::to_string(a.n_qubits) + " vs " + std::to_string(b.n_qubits) + " qubits");
    }
    const int sa = static_cast<int>(a.sign);
    const int sb = static_cast<int>(b.sign);
    // Coefficients are c/sqrt(2) with c = +-1; the overlap is (sum of c*c') / 2.
    int twice = 0;
    if (a.label_a == b.label_a) twice += 1;
    if (a.label_a == b.label_b) twice += sb;
    if (a.label_b == b.label_a) twice += sa;
    if (a.label_b == b.label_b) twice += sa * sb;
    return twice / 2.0;
}

bool VerificationReport::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.pass; });
}

void VerificationReport::add(std::string name, double deviation, double tolerance) {
    checks.push_back({std::move(name), deviation <= tolerance, deviation, tolerance});
}

std::string VerificationReport::to_text() const {
    std::string out;
    out += "n=" + std::to_string(n_qubits) + "\n";
    out += "mode=" + mode + "\n";
    if (pattern) {
        out += "pattern=" + *pattern + "\n";
    }
    if (sign) {
        out += std::string("sign=") + sign_char(*sign) + "\n";
    }
    out += "seed=" + (seed ? std::to_string(*seed) : std::string("none")) + "\n";
    for (const auto &c : checks) {
        out += "check=" + c.name + " pass=" + (c.pass ? "true" : "false") +
               " deviation=" + format_double("%.17g", c.deviation) + " tolerance=" + format_double("%g", c.tolerance) +
               "\n";
    }
    out += std::string("result=") + (passed() ? "pass" : "fail") + "\n";
    return out;
}

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json doc;
    doc["n"] = n_qubits;
    doc["mode"] = mode;
    doc["checks"] = nlohmann::ordered_json::array();
    for (const auto &c : checks) {
        doc["checks"].push_back(
            {{"name", c.name}, {"pass", c.pass}, {"deviation", c.deviation}, {"tolerance", c.tolerance}});
    }
    doc["pass"] = passed();
    doc["seed"] = seed ? nlohmann::ordered_json(*seed) : nlohmann::ordered_json(nullptr);
    doc["pattern"] = pattern ? nlohmann::ordered_json(*pattern) : nlohmann::ordered_json(nullptr);
    doc["sign"] = sign ? nlohmann::ordered_json(std::string(1, sign_char(*sign))) : nlohmann::ordered_json(nullptr);
    return doc.dump(2) + "\n";
}

VerificationReport verify_circuit(const BasisIndex &index, const Circuit &circuit, std::optional<std::uint64_t> seed,
                                  bool force) {
    const unsigned n = index.n_qubits();
    if (circuit.n_qubits() != n) {
        throw Error(ErrorCode::WidthMismatch, "circuit has " + std::to_string(circuit.n_qubits()) +
                                                  " qubits, index names " + std::to_string(n));
    }
    check_memory_guard(n, force);

    const auto simulated = run(circuit, force);
    const auto expected = to_dense(closed_form_state(index), force);

    double marginal_dev = 0.0;
    double purity_dev = 0.0;
    for (unsigned q = 0; q < n; ++q) {
        marginal_dev = std::max(marginal_dev, std::abs(marginal_p0(simulated, q) - 0.5));
        purity_dev = std::max(purity_dev, std::abs(single_qubit_purity(simulated, q) - 0.5));
    }

    const auto predicted = gate_counts(index);
    const auto actual = tally(lower_inverted_controls(circuit));
    auto diff = [](std::size_t x, std::size_t y) { return static_cast<double>(x > y ? x - y : y - x); };

    VerificationReport report;
    report.n_qubits = n;
    report.mode = "index";
    report.seed = seed;
    report.pattern = index.pattern().to_string();
    report.sign = index.sign();
    report.add("circuit_vs_closed_form", max_abs_diff(simulated, expected), kStateTolerance);
    report.add("marginal_p0", marginal_dev, kStateTolerance);
    report.add("single_qubit_purity", purity_dev, kStateTolerance);
    report.add("gate_counts",
               diff(predicted.cnot_type, actual.cnot_type) + diff(predicted.single_qubit, actual.single_qubit), 0.0);
    return report;
}

VerificationReport verify_index(const BasisIndex &index, std::optional<std::uint64_t> seed, bool force) {
    check_memory_guard(index.n_qubits(), force);
    return verify_circuit(index, build_basis_circuit(index), seed, force);
}

VerificationReport verify_complete_basis(unsigned n, VerifyMode mode, const BasisVerifyOptions &options) {
    return mode == VerifyMode::Dense ? verify_dense(n, options) : verify_sparse(n, options);
}

}  // namespace mebasis
