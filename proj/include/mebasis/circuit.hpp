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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mebasis/basis_index.hpp"

namespace mebasis {

enum class GateKind : std::uint8_t { H, Z, X, CNOT };

/// Which control value triggers a CNOT: 1 for a standard control, 0 for an inverted one.
enum class Polarity : std::uint8_t { OnOne, OnZero };

struct Gate {
    GateKind kind = GateKind::H;
    unsigned target = 0;
    std::optional<unsigned> control;  // set iff kind == CNOT
    Polarity polarity = Polarity::OnOne;

    static Gate h(unsigned target) { return {GateKind::H, target, std::nullopt, Polarity::OnOne}; }
    static Gate z(unsigned target) { return {GateKind::Z, target, std::nullopt, Polarity::OnOne}; }
    static Gate x(unsigned target) { return {GateKind::X, target, std::nullopt, Polarity::OnOne}; }
    static Gate cnot(unsigned control, unsigned target, Polarity polarity = Polarity::OnOne) {
        return {GateKind::CNOT, target, control, polarity};
    }

    bool is_single_qubit() const noexcept { return kind != GateKind::CNOT; }

    bool operator==(const Gate &) const = default;
};

/// Ordered gate list over a fixed number of qubits. Gate 0 is applied first.
class Circuit {
  public:
    explicit Circuit(unsigned n_qubits);

    /// Validates qubit indices against the width and appends.
    Circuit &append(const Gate &gate);

    unsigned n_qubits() const noexcept { return n_qubits_; }
    const std::vector<Gate> &gates() const noexcept { return gates_; }
    std::size_t size() const noexcept { return gates_.size(); }

    bool operator==(const Circuit &) const = default;

  private:
    unsigned n_qubits_;
    std::vector<Gate> gates_;
};

/// H on qubit 0, Z on qubit 0 when the sign is minus, then CNOT(0 -> j) for
/// j = 1..n-1 with polarity taken from pattern bit j - 1.
Circuit build_basis_circuit(const BasisIndex &index);

/// Rewrites every inverted-control CNOT as X(target) followed by a standard
/// CNOT. Since X then CNOT maps t to t ^ 1 ^ c = t ^ !c, the unitary is unchanged.
Circuit lower_inverted_controls(const Circuit &circuit);

struct GateCounts {
    std::size_t cnot_type = 0;
    std::size_t single_qubit = 0;

    bool operator==(const GateCounts &) const = default;
};

/// Closed-form cost of the lowered basis circuit: n - 1 CNOTs and n - M
/// single-qubit gates, plus one more when the sign is minus.
GateCounts gate_counts(const BasisIndex &index);

/// Literal count of the gates in a circuit.
GateCounts tally(const Circuit &circuit);

/// Debug rendering, one gate per line: `H 0`, `CX 0 2`, `CX0 0 2` (inverted control).
std::string to_text(const Circuit &circuit);

}  // namespace mebasis
