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

#include "mebasis/statevector.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

#include "mebasis/error.hpp"

namespace mebasis {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Spreads the bits of k apart so the bit selected by bit_mask is zero.
inline std::size_t insert_zero(std::size_t k, std::size_t bit_mask) noexcept {
    const std::size_t low = k & (bit_mask - 1);
    return ((k & ~(bit_mask - 1)) << 1) | low;
}

void check_qubit(unsigned qubit, unsigned n) {
    if (qubit >= n) {
        throw Error(ErrorCode::QubitOutOfRange,
                    "qubit " + std::to_string(qubit) + " outside a " + std::to_string(n) + "-qubit state");
    }
}

void check_same_width(const Statevector &a, const Statevector &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw Error(ErrorCode::WidthMismatch, std::to_string(a.n_qubits()) + " vs " + std::to_string(b.n_qubits()) +
                                                  " qubits");
    }
}

}  // namespace

void check_memory_guard(unsigned n, bool force) {
    if (n == 0) {
        throw Error(ErrorCode::TooFewQubits, "a state needs at least one qubit");
    }
    if (n >= 8 * sizeof(std::size_t) - 5) {
        throw Error(ErrorCode::TooManyQubits, std::to_string(n) + " qubits cannot be addressed");
    }
    if (n > kDefaultQubitLimit && !force) {
        throw Error(ErrorCode::TooManyQubits, std::to_string(n) + " qubits exceeds the default limit of " +
                                                  std::to_string(kDefaultQubitLimit) + " (override with force)");
    }
}

Statevector Statevector::zero(unsigned n, bool force) {
    check_memory_guard(n, force);
    std::vector<Complex> amps(std::size_t{1} << n);
    amps[0] = 1.0;
    return Statevector(n, std::move(amps));
}

Statevector Statevector::basis(unsigned n, std::span<const std::uint8_t> label, bool force) {
    if (label.size() != n) {
        throw Error(ErrorCode::LabelLengthMismatch,
                    "label has " + std::to_string(label.size()) + " bits for " + std::to_string(n) + " qubits");
    }
    check_memory_guard(n, force);
    std::size_t index = 0;
    for (auto bit : label) {
        if (bit > 1) {
            throw Error(ErrorCode::InvalidArgument, "label bits must be 0 or 1");
        }
        index = (index << 1) | bit;
    }
    std::vector<Complex> amps(std::size_t{1} << n);
    amps[index] = 1.0;
    return Statevector(n, std::move(amps));
}

Statevector Statevector::from_amplitudes(unsigned n, std::vector<Complex> amplitudes, bool force) {
    check_memory_guard(n, force);
    if (amplitudes.size() != std::size_t{1} << n) {
        throw Error(ErrorCode::WidthMismatch, "expected 2^" + std::to_string(n) + " amplitudes, got " +
                                                  std::to_string(amplitudes.size()));
    }
    return Statevector(n, std::move(amplitudes));
}

void Statevector::apply(const Gate &gate) {
    check_qubit(gate.target, n_qubits_);
    switch (gate.kind) {
        case GateKind::H: apply_h(gate.target); break;
        case GateKind::Z: apply_z(gate.target); break;
        case GateKind::X: apply_x(gate.target); break;
        case GateKind::CNOT:
            if (!gate.control) {
                throw Error(ErrorCode::InvalidArgument, "CNOT without a control qubit");
            }
            check_qubit(*gate.control, n_qubits_);
            if (*gate.control == gate.target) {
                throw Error(ErrorCode::InvalidArgument, "CNOT control equals target");
            }
            apply_cnot(*gate.control, gate.target, gate.polarity);
            break;
    }
}

void Statevector::apply_h(unsigned target) {
    const std::size_t m = mask(target);
    const std::size_t half = amplitudes_.size() >> 1;
    for (std::size_t k = 0; k < half; ++k) {
        const std::size_t i0 = insert_zero(k, m);
        const std::size_t i1 = i0 | m;
        const Complex a = amplitudes_[i0];
        const Complex b = amplitudes_[i1];
        amplitudes_[i0] = (a + b) * kInvSqrt2;
        amplitudes_[i1] = (a - b) * kInvSqrt2;
    }
}

void Statevector::apply_z(unsigned target) {
    const std::size_t m = mask(target);
    const std::size_t half = amplitudes_.size() >> 1;
    for (std::size_t k = 0; k < half; ++k) {
        auto &amp = amplitudes_[insert_zero(k, m) | m];
        amp = -amp;
    }
}

void Statevector::apply_x(unsigned target) {
    const std::size_t m = mask(target);
    const std::size_t half = amplitudes_.size() >> 1;
    for (std::size_t k = 0; k < half; ++k) {
        const std::size_t i0 = insert_zero(k, m);
        std::swap(amplitudes_[i0], amplitudes_[i0 | m]);
    }
}

void Statevector::apply_cnot(unsigned control, unsigned target, Polarity polarity) {
    const std::size_t cm = mask(control);
    const std::size_t tm = mask(target);
    const std::size_t lo = cm < tm ? cm : tm;
    const std::size_t hi = cm < tm ? tm : cm;
    const std::size_t active = polarity == Polarity::OnOne ? cm : 0;
    const std::size_t quarter = amplitudes_.size() >> 2;
    for (std::size_t k = 0; k < quarter; ++k) {
        const std::size_t i0 = insert_zero(insert_zero(k, lo), hi) | active;
        std::swap(amplitudes_[i0], amplitudes_[i0 | tm]);
    }
}

double Statevector::norm_squared() const noexcept {
    double total = 0.0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

Statevector run(const Circuit &circuit, bool force) {
    auto state = Statevector::zero(circuit.n_qubits(), force);
    for (const auto &gate : circuit.gates()) {
        state.apply(gate);
    }
    return state;
}

Statevector run(const Circuit &circuit, const Statevector &initial) {
    if (initial.n_qubits() != circuit.n_qubits()) {
        throw Error(ErrorCode::WidthMismatch, "circuit has " + std::to_string(circuit.n_qubits()) +
                                                  " qubits, initial state has " + std::to_string(initial.n_qubits()));
    }
    Statevector state = initial;
    for (const auto &gate : circuit.gates()) {
        state.apply(gate);
    }
    return state;
}

Complex inner_product(const Statevector &a, const Statevector &b) {
    check_same_width(a, b);
    Complex total = 0.0;
    const auto lhs = a.amplitudes();
    const auto rhs = b.amplitudes();
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        total += std::conj(lhs[i]) * rhs[i];
    }
    return total;
}

double max_abs_diff(const Statevector &a, const Statevector &b) {
    check_same_width(a, b);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

double marginal_p0(const Statevector &state, unsigned qubit) {
    check_qubit(qubit, state.n_qubits());
    const std::size_t m = std::size_t{1} << (state.n_qubits() - 1 - qubit);
    const std::size_t half = state.size() >> 1;
    double p0 = 0.0;
    for (std::size_t k = 0; k < half; ++k) {
        p0 += std::norm(state[insert_zero(k, m)]);
    }
    return p0;
}

double single_qubit_purity(const Statevector &state, unsigned qubit) {
    check_qubit(qubit, state.n_qubits());
    const std::size_t m = std::size_t{1} << (state.n_qubits() - 1 - qubit);
    const std::size_t half = state.size() >> 1;
    double rho00 = 0.0;
    double rho11 = 0.0;
    Complex rho01 = 0.0;
    for (std::size_t k = 0; k < half; ++k) {
        const std::size_t i0 = insert_zero(k, m);
        const Complex a0 = state[i0];
        const Complex a1 = state[i0 | m];
        rho00 += std::norm(a0);
        rho11 += std::norm(a1);
        rho01 += a0 * std::conj(a1);
    }
    return rho00 * rho00 + rho11 * rho11 + 2.0 * std::norm(rho01);
}

std::string dump(const Statevector &state) {
    const unsigned n = state.n_qubits();
    std::string out;
    char buf[96];
    for (std::size_t i = 0; i < state.size(); ++i) {
        const Complex a = state[i];
        if (a == Complex{}) {
            continue;
        }
        for (unsigned q = 0; q < n; ++q) {
            out += ((i >> (n - 1 - q)) & 1U) ? '1' : '0';
        }
        // Adding 0.0 folds -0 into +0.
        std::snprintf(buf, sizeof buf, " %.17g %.17g\n", a.real() + 0.0, a.imag() + 0.0);
        out += buf;
    }
    return out;
}

}  // namespace mebasis
