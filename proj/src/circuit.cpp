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

#include "mebasis/circuit.hpp"

#include "mebasis/error.hpp"

namespace mebasis {

Circuit::Circuit(unsigned n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits == 0) {
        throw Error(ErrorCode::TooFewQubits, "a circuit needs at least one qubit");
    }
}

Circuit &Circuit::append(const Gate &gate) {
    auto check = [&](unsigned q) {
        if (q >= n_qubits_) {
            throw Error(ErrorCode::QubitOutOfRange,
                        "qubit " + std::to_string(q) + " outside a " + std::to_string(n_qubits_) + "-qubit circuit");
        }
    };
    check(gate.target);
    if (gate.kind == GateKind::CNOT) {
        if (!gate.control) {
            throw Error(ErrorCode::InvalidArgument, "CNOT without a control qubit");
        }
        check(*gate.control);
        if (*gate.control == gate.target) {
            throw Error(ErrorCode::InvalidArgument, "CNOT control equals target " + std::to_string(gate.target));
        }
    } else if (gate.control) {
        throw Error(ErrorCode::InvalidArgument, "single-qubit gate with a control qubit");
    }
    gates_.push_back(gate);
    return *this;
}

Circuit build_basis_circuit(const BasisIndex &index) {
    const unsigned n = index.n_qubits();
    Circuit circuit(n);
    circuit.append(Gate::h(0));
    if (index.sign() == Sign::Minus) {
        circuit.append(Gate::z(0));
    }
    const auto &pattern = index.pattern();
    for (unsigned j = 1; j < n; ++j) {
        circuit.append(Gate::cnot(0, j, pattern[j - 1] ? Polarity::OnOne : Polarity::OnZero));
    }
    return circuit;
}

Circuit lower_inverted_controls(const Circuit &circuit) {
    Circuit lowered(circuit.n_qubits());
    for (const auto &gate : circuit.gates()) {
        if (gate.kind == GateKind::CNOT && gate.polarity == Polarity::OnZero) {
            lowered.append(Gate::x(gate.target));
            lowered.append(Gate::cnot(*gate.control, gate.target, Polarity::OnOne));
        } else {
            lowered.append(gate);
        }
    }
    return lowered;
}

GateCounts gate_counts(const BasisIndex &index) {
    const std::size_t n = index.n_qubits();
    const std::size_t m = count_controls(index.pattern()).standard;
    return {n - 1, index.sign() == Sign::Plus ? n - m : n - m + 1};
}

GateCounts tally(const Circuit &circuit) {
    GateCounts counts;
    for (const auto &gate : circuit.gates()) {
        if (gate.is_single_qubit()) {
            ++counts.single_qubit;
        } else {
            ++counts.cnot_type;
        }
    }
    return counts;
}

std::string to_text(const Circuit &circuit) {
    std::string out;
    for (const auto &gate : circuit.gates()) {
        switch (gate.kind) {
            case GateKind::H: out += "H "; break;
            case GateKind::Z: out += "Z "; break;
            case GateKind::X: out += "X "; break;
            case GateKind::CNOT:
                out += gate.polarity == Polarity::OnOne ? "CX " : "CX0 ";
                out += std::to_string(*gate.control) + " ";
                break;
        }
        out += std::to_string(gate.target) + "\n";
    }
    return out;
}

}  // namespace mebasis
