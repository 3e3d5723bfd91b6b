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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mebasis/circuit.hpp"

namespace mebasis {

using Complex = std::complex<double>;

/// Widths above this are refused unless the caller passes `force`.
inline constexpr unsigned kDefaultQubitLimit = 30;

/// Throws TooManyQubits when n exceeds the default limit and force is off.
void check_memory_guard(unsigned n, bool force);

/**
 * Dense pure state of n qubits.
 *
 * Qubit 0 is the most significant bit of the amplitude index, so the ket
 * |q0 q1 ... q(n-1)> lives at index sum_j q_j * 2^(n-1-j). Gates are applied
 * in place by pairing amplitudes whose indices differ in a single bit.
 */
class Statevector {
  public:
    /// |0...0>.
    static Statevector zero(unsigned n, bool force = false);
    /// Computational basis state; label[j] is the value of qubit j.
    static Statevector basis(unsigned n, std::span<const std::uint8_t> label, bool force = false);
    /// Takes ownership of 2^n amplitudes. No normalization is applied.
    static Statevector from_amplitudes(unsigned n, std::vector<Complex> amplitudes, bool force = false);

    unsigned n_qubits() const noexcept { return n_qubits_; }
    std::size_t size() const noexcept { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    const Complex &operator[](std::size_t i) const { return amplitudes_[i]; }

    void apply(const Gate &gate);

    double norm_squared() const noexcept;

  private:
    Statevector(unsigned n, std::vector<Complex> amplitudes) : n_qubits_(n), amplitudes_(std::move(amplitudes)) {}

    void apply_h(unsigned target);
    void apply_z(unsigned target);
    void apply_x(unsigned target);
    void apply_cnot(unsigned control, unsigned target, Polarity polarity);

    std::size_t mask(unsigned qubit) const noexcept { return std::size_t{1} << (n_qubits_ - 1 - qubit); }

    unsigned n_qubits_;
    std::vector<Complex> amplitudes_;
};

/// Applies the circuit to |0...0>.
Statevector run(const Circuit &circuit, bool force = false);
/// Applies the circuit to a copy of `initial`.
Statevector run(const Circuit &circuit, const Statevector &initial);

/// sum_i conj(a_i) * b_i.
Complex inner_product(const Statevector &a, const Statevector &b);

/// Largest componentwise |a_i - b_i|.
double max_abs_diff(const Statevector &a, const Statevector &b);

/// Probability that measuring `qubit` yields 0.
double marginal_p0(const Statevector &state, unsigned qubit);

/// Tr(rho^2) of the qubit's reduced density matrix; 0.5 means maximally mixed.
double single_qubit_purity(const Statevector &state, unsigned qubit);

/// One line per nonzero amplitude: `<bitstring> <re> <im>`, 17 significant digits.
std::string dump(const Statevector &state);

}  // namespace mebasis
