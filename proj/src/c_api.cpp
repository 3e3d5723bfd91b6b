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

#include "mebasis.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "mebasis/analysis.hpp"
#include "mebasis/error.hpp"
#include "mebasis/qasm_io.hpp"

struct mb_index {
    mebasis::BasisIndex value;
};

struct mb_circuit {
    mebasis::Circuit value;
};

struct mb_statevector {
    mebasis::Statevector value;
};

struct mb_report {
    mebasis::VerificationReport value;
};

namespace {

thread_local std::string last_error;

mb_status to_status(mebasis::ErrorCode code) {
    using mebasis::ErrorCode;
    switch (code) {
        case ErrorCode::EmptyPattern: return MB_ERR_EMPTY_PATTERN;
        case ErrorCode::InvalidPattern: return MB_ERR_INVALID_PATTERN;
        case ErrorCode::InvalidSign: return MB_ERR_INVALID_SIGN;
        case ErrorCode::OutOfRange: return MB_ERR_OUT_OF_RANGE;
        case ErrorCode::TooFewQubits: return MB_ERR_TOO_FEW_QUBITS;
        case ErrorCode::TooManyQubits: return MB_ERR_TOO_MANY_QUBITS;
        case ErrorCode::LabelLengthMismatch: return MB_ERR_LABEL_LENGTH_MISMATCH;
        case ErrorCode::QubitOutOfRange: return MB_ERR_QUBIT_OUT_OF_RANGE;
        case ErrorCode::WidthMismatch: return MB_ERR_WIDTH_MISMATCH;
        case ErrorCode::SyntaxError: return MB_ERR_SYNTAX;
        case ErrorCode::UnsupportedGate: return MB_ERR_UNSUPPORTED_GATE;
        case ErrorCode::RegisterMismatch: return MB_ERR_REGISTER_MISMATCH;
        case ErrorCode::InvalidArgument: return MB_ERR_INVALID_ARGUMENT;
    }
    return MB_ERR_INTERNAL;
}

mb_status fail(mb_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

// Runs body and converts any exception into a status code.
template <typename Body>
mb_status guarded(Body &&body) noexcept {
    try {
        body();
        return MB_OK;
    } catch (const mebasis::Error &e) {
        return fail(to_status(e.code()), e.what());
    } catch (const std::bad_alloc &) {
        return fail(MB_ERR_TOO_MANY_QUBITS, "out of memory");
    } catch (const std::exception &e) {
        return fail(MB_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(MB_ERR_INTERNAL, "unknown error");
    }
}

#define MB_REQUIRE(ptr)                                                          \
    do {                                                                         \
        if ((ptr) == nullptr) {                                                  \
            return fail(MB_ERR_INVALID_ARGUMENT, "null argument: " #ptr);        \
        }                                                                        \
    } while (0)

char *copy_string(const std::string &s) {
    auto *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

mebasis::Gate to_gate(const mb_gate &g) {
    using mebasis::Gate;
    switch (g.kind) {
        case MB_GATE_H: return Gate::h(g.target);
        case MB_GATE_Z: return Gate::z(g.target);
        case MB_GATE_X: return Gate::x(g.target);
        case MB_GATE_CNOT:
            if (g.control < 0) {
                throw mebasis::Error(mebasis::ErrorCode::InvalidArgument, "CNOT needs a non-negative control");
            }
            return Gate::cnot(static_cast<unsigned>(g.control), g.target,
                              g.on_zero ? mebasis::Polarity::OnZero : mebasis::Polarity::OnOne);
    }
    throw mebasis::Error(mebasis::ErrorCode::InvalidArgument, "unknown gate kind");
}

mb_gate from_gate(const mebasis::Gate &g) {
    mb_gate out{};
    out.target = g.target;
    out.control = g.control ? static_cast<int32_t>(*g.control) : -1;
    out.on_zero = g.polarity == mebasis::Polarity::OnZero ? 1 : 0;
    switch (g.kind) {
        case mebasis::GateKind::H: out.kind = MB_GATE_H; break;
        case mebasis::GateKind::Z: out.kind = MB_GATE_Z; break;
        case mebasis::GateKind::X: out.kind = MB_GATE_X; break;
        case mebasis::GateKind::CNOT: out.kind = MB_GATE_CNOT; break;
    }
    return out;
}

}  // namespace

extern "C" {

const char *mb_last_error(void) { return last_error.c_str(); }

const char *mb_status_name(mb_status status) {
    switch (status) {
        case MB_OK: return "OK";
        case MB_ERR_EMPTY_PATTERN: return "EmptyPattern";
        case MB_ERR_INVALID_PATTERN: return "InvalidPattern";
        case MB_ERR_INVALID_SIGN: return "InvalidSign";
        case MB_ERR_OUT_OF_RANGE: return "OutOfRange";
        case MB_ERR_TOO_FEW_QUBITS: return "TooFewQubits";
        case MB_ERR_TOO_MANY_QUBITS: return "TooManyQubits";
        case MB_ERR_LABEL_LENGTH_MISMATCH: return "LabelLengthMismatch";
        case MB_ERR_QUBIT_OUT_OF_RANGE: return "QubitOutOfRange";
        case MB_ERR_WIDTH_MISMATCH: return "WidthMismatch";
        case MB_ERR_SYNTAX: return "SyntaxError";
        case MB_ERR_UNSUPPORTED_GATE: return "UnsupportedGate";
        case MB_ERR_REGISTER_MISMATCH: return "RegisterMismatch";
        case MB_ERR_INVALID_ARGUMENT: return "InvalidArgument";
        case MB_ERR_INTERNAL: return "Internal";
    }
    return "Unknown";
}

void mb_string_free(char *s) { std::free(s); }

uint32_t mb_default_qubit_limit(void) { return mebasis::kDefaultQubitLimit; }

// ---- indices ----

mb_status mb_index_from_pattern(int sign, const char *pattern, mb_index **out) {
    MB_REQUIRE(pattern);
    MB_REQUIRE(out);
    return guarded([&] {
        *out = new mb_index{mebasis::make_index(sign, mebasis::BitPattern::from_string(pattern))};
    });
}

mb_status mb_index_from_ordinal(uint64_t ordinal, uint32_t n_qubits, mb_index **out) {
    MB_REQUIRE(out);
    return guarded([&] { *out = new mb_index{mebasis::from_ordinal(ordinal, n_qubits)}; });
}

mb_status mb_index_random(uint32_t n_qubits, uint64_t seed, mb_index **out) {
    MB_REQUIRE(out);
    return guarded([&] { *out = new mb_index{mebasis::random_index(n_qubits, seed)}; });
}

void mb_index_free(mb_index *index) { delete index; }

uint32_t mb_index_n_qubits(const mb_index *index) { return index ? index->value.n_qubits() : 0; }

int mb_index_sign(const mb_index *index) { return index ? static_cast<int>(index->value.sign()) : 0; }

mb_status mb_index_pattern(const mb_index *index, char **out) {
    MB_REQUIRE(index);
    MB_REQUIRE(out);
    return guarded([&] { *out = copy_string(index->value.pattern().to_string()); });
}

mb_status mb_index_ordinal(const mb_index *index, uint64_t *out) {
    MB_REQUIRE(index);
    MB_REQUIRE(out);
    return guarded([&] { *out = mebasis::to_ordinal(index->value); });
}

mb_status mb_index_control_counts(const mb_index *index, uint32_t *standard, uint32_t *inverted) {
    MB_REQUIRE(index);
    MB_REQUIRE(standard);
    MB_REQUIRE(inverted);
    const auto counts = mebasis::count_controls(index->value.pattern());
    *standard = static_cast<uint32_t>(counts.standard);
    *inverted = static_cast<uint32_t>(counts.inverted);
    return MB_OK;
}

mb_status mb_index_gate_counts(const mb_index *index, uint32_t *cnot_type, uint32_t *single_qubit) {
    MB_REQUIRE(index);
    MB_REQUIRE(cnot_type);
    MB_REQUIRE(single_qubit);
    const auto counts = mebasis::gate_counts(index->value);
    *cnot_type = static_cast<uint32_t>(counts.cnot_type);
    *single_qubit = static_cast<uint32_t>(counts.single_qubit);
    return MB_OK;
}

mb_status mb_index_state_text(const mb_index *index, char **out) {
    MB_REQUIRE(index);
    MB_REQUIRE(out);
    return guarded([&] { *out = copy_string(mebasis::to_string(mebasis::closed_form_state(index->value))); });
}

// ---- circuits ----

mb_status mb_circuit_new(uint32_t n_qubits, mb_circuit **out) {
    MB_REQUIRE(out);
    return guarded([&] { *out = new mb_circuit{mebasis::Circuit(n_qubits)}; });
}

mb_status mb_circuit_append(mb_circuit *circuit, const mb_gate *gate) {
    MB_REQUIRE(circuit);
    MB_REQUIRE(gate);
    return guarded([&] { circuit->value.append(to_gate(*gate)); });
}

mb_status mb_circuit_build(const mb_index *index, mb_circuit **out) {
    MB_REQUIRE(index);
    MB_REQUIRE(out);
    return guarded([&] { *out = new mb_circuit{mebasis::build_basis_circuit(index->value)}; });
}

mb_status mb_circuit_lower(const mb_circuit *circuit, mb_circuit **out) {
    MB_REQUIRE(circuit);
    MB_REQUIRE(out);
    return guarded([&] { *out = new mb_circuit{mebasis::lower_inverted_controls(circuit->value)}; });
}

void mb_circuit_free(mb_circuit *circuit) { delete circuit; }

uint32_t mb_circuit_n_qubits(const mb_circuit *circuit) { return circuit ? circuit->value.n_qubits() : 0; }

size_t mb_circuit_size(const mb_circuit *circuit) { return circuit ? circuit->value.size() : 0; }

mb_status mb_circuit_gate(const mb_circuit *circuit, size_t position, mb_gate *out) {
    MB_REQUIRE(circuit);
    MB_REQUIRE(out);
    if (position >= circuit->value.size()) {
        return fail(MB_ERR_OUT_OF_RANGE, "gate position " + std::to_string(position) + " past the end");
    }
    *out = from_gate(circuit->value.gates()[position]);
    return MB_OK;
}

mb_status mb_circuit_to_text(const mb_circuit *circuit, char **out) {
    MB_REQUIRE(circuit);
    MB_REQUIRE(out);
    return guarded([&] { *out = copy_string(mebasis::to_text(circuit->value)); });
}

mb_status mb_circuit_to_qasm(const mb_circuit *circuit, const mb_index *provenance, const uint64_t *seed,
                             char **out) {
    MB_REQUIRE(circuit);
    MB_REQUIRE(out);
    return guarded([&] {
        std::optional<mebasis::QasmProvenance> prov;
        if (provenance != nullptr) {
            prov = mebasis::QasmProvenance{provenance->value, seed ? std::optional<uint64_t>(*seed) : std::nullopt};
        }
        *out = copy_string(mebasis::export_qasm(circuit->value, prov));
    });
}

mb_status mb_circuit_from_qasm(const char *text, mb_circuit **out) {
    MB_REQUIRE(text);
    MB_REQUIRE(out);
    return guarded([&] { *out = new mb_circuit{mebasis::parse_qasm(text)}; });
}

// ---- statevectors ----

mb_status mb_statevector_zero(uint32_t n_qubits, int force, mb_statevector **out) {
    MB_REQUIRE(out);
    return guarded([&] { *out = new mb_statevector{mebasis::Statevector::zero(n_qubits, force != 0)}; });
}

mb_status mb_statevector_basis(const char *label, int force, mb_statevector **out) {
    MB_REQUIRE(label);
    MB_REQUIRE(out);
    return guarded([&] {
        std::vector<std::uint8_t> bits;
        for (const char *c = label; *c != '\0'; ++c) {
            if (*c != '0' && *c != '1') {
                throw mebasis::Error(mebasis::ErrorCode::InvalidArgument, "label must be a string over {0,1}");
            }
            bits.push_back(static_cast<std::uint8_t>(*c - '0'));
        }
        const auto n = static_cast<unsigned>(bits.size());
        *out = new mb_statevector{mebasis::Statevector::basis(n, bits, force != 0)};
    });
}

mb_status mb_statevector_run(const mb_circuit *circuit, const mb_statevector *initial, int force,
                             mb_statevector **out) {
    MB_REQUIRE(circuit);
    MB_REQUIRE(out);
    return guarded([&] {
        *out = new mb_statevector{initial ? mebasis::run(circuit->value, initial->value)
                                          : mebasis::run(circuit->value, force != 0)};
    });
}

void mb_statevector_free(mb_statevector *state) { delete state; }

uint32_t mb_statevector_n_qubits(const mb_statevector *state) { return state ? state->value.n_qubits() : 0; }

mb_status mb_statevector_apply(mb_statevector *state, const mb_gate *gate) {
    MB_REQUIRE(state);
    MB_REQUIRE(gate);
    return guarded([&] { state->value.apply(to_gate(*gate)); });
}

mb_status mb_statevector_amplitude(const mb_statevector *state, uint64_t i, double *re, double *im) {
    MB_REQUIRE(state);
    MB_REQUIRE(re);
    MB_REQUIRE(im);
    if (i >= state->value.size()) {
        return fail(MB_ERR_OUT_OF_RANGE, "amplitude index " + std::to_string(i) + " past the end");
    }
    *re = state->value[i].real();
    *im = state->value[i].imag();
    return MB_OK;
}

mb_status mb_statevector_inner(const mb_statevector *a, const mb_statevector *b, double *re, double *im) {
    MB_REQUIRE(a);
    MB_REQUIRE(b);
    MB_REQUIRE(re);
    MB_REQUIRE(im);
    return guarded([&] {
        const auto z = mebasis::inner_product(a->value, b->value);
        *re = z.real();
        *im = z.imag();
    });
}

mb_status mb_statevector_marginal_p0(const mb_statevector *state, uint32_t qubit, double *out) {
    MB_REQUIRE(state);
    MB_REQUIRE(out);
    return guarded([&] { *out = mebasis::marginal_p0(state->value, qubit); });
}

mb_status mb_statevector_purity(const mb_statevector *state, uint32_t qubit, double *out) {
    MB_REQUIRE(state);
    MB_REQUIRE(out);
    return guarded([&] { *out = mebasis::single_qubit_purity(state->value, qubit); });
}

mb_status mb_statevector_dump(const mb_statevector *state, char **out) {
    MB_REQUIRE(state);
    MB_REQUIRE(out);
    return guarded([&] { *out = copy_string(mebasis::dump(state->value)); });
}

// ---- verification ----

mb_status mb_verify_index(const mb_index *index, const uint64_t *seed, int force, mb_report **out) {
    MB_REQUIRE(index);
    MB_REQUIRE(out);
    return guarded([&] {
        *out = new mb_report{mebasis::verify_index(index->value, seed ? std::optional<uint64_t>(*seed) : std::nullopt,
                                                   force != 0)};
    });
}

mb_status mb_verify_complete_basis(uint32_t n_qubits, mb_verify_mode mode, uint32_t jobs, int force,
                                   mb_report **out) {
    MB_REQUIRE(out);
    if (mode != MB_VERIFY_DENSE && mode != MB_VERIFY_SPARSE) {
        return fail(MB_ERR_INVALID_ARGUMENT, "unknown verification mode");
    }
    return guarded([&] {
        const auto m = mode == MB_VERIFY_DENSE ? mebasis::VerifyMode::Dense : mebasis::VerifyMode::Sparse;
        *out = new mb_report{mebasis::verify_complete_basis(n_qubits, m, {jobs == 0 ? 1U : jobs, force != 0})};
    });
}

void mb_report_free(mb_report *report) { delete report; }

int mb_report_passed(const mb_report *report) { return report && report->value.passed() ? 1 : 0; }

size_t mb_report_check_count(const mb_report *report) { return report ? report->value.checks.size() : 0; }

mb_status mb_report_check(const mb_report *report, size_t position, const char **name, int *pass, double *deviation,
                          double *tolerance) {
    MB_REQUIRE(report);
    if (position >= report->value.checks.size()) {
        return fail(MB_ERR_OUT_OF_RANGE, "check position " + std::to_string(position) + " past the end");
    }
    const auto &check = report->value.checks[position];
    if (name) *name = check.name.c_str();
    if (pass) *pass = check.pass ? 1 : 0;
    if (deviation) *deviation = check.deviation;
    if (tolerance) *tolerance = check.tolerance;
    return MB_OK;
}

mb_status mb_report_to_text(const mb_report *report, char **out) {
    MB_REQUIRE(report);
    MB_REQUIRE(out);
    return guarded([&] { *out = copy_string(report->value.to_text()); });
}

mb_status mb_report_to_json(const mb_report *report, char **out) {
    MB_REQUIRE(report);
    MB_REQUIRE(out);
    return guarded([&] { *out = copy_string(report->value.to_json()); });
}

}  // extern "C"
