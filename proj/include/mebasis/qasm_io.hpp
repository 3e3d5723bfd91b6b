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
#include <string_view>

#include "mebasis/basis_index.hpp"
#include "mebasis/circuit.hpp"

namespace mebasis {

/// Emitted as a `// pattern=<bits> sign=<+/-> seed=<s|none>` comment after the header.
struct QasmProvenance {
    BasisIndex index;
    std::optional<std::uint64_t> seed;
};

/**
 * Serializes a circuit as OpenQASM 2.0 restricted to h, z, x and cx.
 *
 * Inverted controls are lowered first. Layout is fixed: the two header lines,
 * an optional provenance comment, `qreg q[N];`, then one statement per line,
 * LF-terminated.
 */
std::string export_qasm(const Circuit &circuit, const std::optional<QasmProvenance> &provenance = std::nullopt);

/**
 * Parses exactly the subset export_qasm produces. Blank lines and `//`
 * comment lines are ignored; anything else that does not match the grammar
 * is rejected with a ParseError naming the line.
 */
Circuit parse_qasm(std::string_view text);

}  // namespace mebasis
