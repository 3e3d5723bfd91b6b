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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mebasis/basis_index.hpp"
#include "mebasis/circuit.hpp"
#include "mebasis/statevector.hpp"

namespace mebasis {

/**
 * Exact two-term form (|label_a> + sign |label_b>) / sqrt(2) of a basis vector.
 *
 * label_b is 1 followed by the pattern; label_a is 0 followed by the
 * complemented pattern, so the two kets disagree on every qubit.
 */
struct SparseBasisState {
    unsigned n_qubits = 0;
    std::vector<std::uint8_t> label_a;
    std::vector<std::uint8_t> label_b;
    Sign sign = Sign::Plus;

    bool operator==(const SparseBasisState &) const = default;
};

SparseBasisState closed_form_state(const BasisIndex &index);

/// Renders as `(|011> + |100>)/sqrt(2)`.
std::string to_string(const SparseBasisState &state);

/// Two nonzero amplitudes: 1/sqrt(2) at label_a and sign/sqrt(2) at label_b.
Statevector to_dense(const SparseBasisState &state, bool force = false);

/// <a|b> from label matches and signs alone. Every value is a multiple of
/// 1/2 and is returned exactly; for basis states it is 0 or 1.
double sparse_overlap(const SparseBasisState &a, const SparseBasisState &b);

struct Check {
    std::string name;
    bool pass = false;
    double deviation = 0.0;
    double tolerance = 0.0;
};

struct VerificationReport {
    unsigned n_qubits = 0;
    std::string mode;  // "index", "dense" or "sparse"
    std::vector<Check> checks;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> pattern;
    std::optional<Sign> sign;

    bool passed() const noexcept;
    void add(std::string name, double deviation, double tolerance);

    /// Key-value lines, one `check=` record per check.
    std::string to_text() const;
    std::string to_json() const;
};

inline constexpr double kStateTolerance = 1e-12;
inline constexpr double kGramTolerance = 1e-10;
inline constexpr unsigned kMaxDenseBasisQubits = 14;
inline constexpr unsigned kMaxSparseBasisQubits = 64;

/// Checks `circuit` against the closed form of `index`: amplitude agreement,
/// per-qubit marginals and purity of the simulated state, and the gate tally
/// of the lowered circuit against gate_counts(index).
VerificationReport verify_circuit(const BasisIndex &index, const Circuit &circuit,
                                  std::optional<std::uint64_t> seed = std::nullopt, bool force = false);

/// verify_circuit on build_basis_circuit(index).
VerificationReport verify_index(const BasisIndex &index, std::optional<std::uint64_t> seed = std::nullopt,
                                bool force = false);

enum class VerifyMode { Dense, Sparse };

struct BasisVerifyOptions {
    unsigned jobs = 1;
    bool force = false;
};

/**
 * Verifies orthonormality of all 2^n basis vectors.
 *
 * Dense mode simulates every circuit and checks the Gram matrix against the
 * identity. Sparse mode works on the two-term closed forms: labels are
 * bucketed by value, only states sharing a label are paired, and every
 * overlap is exact. It also checks that the positive-sign states cover each
 * computational label exactly once.
 */
VerificationReport verify_complete_basis(unsigned n, VerifyMode mode, const BasisVerifyOptions &options = {});

}  // namespace mebasis
