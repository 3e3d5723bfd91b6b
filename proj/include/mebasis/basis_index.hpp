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
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mebasis {

enum class Sign : std::int8_t { Plus = 1, Minus = -1 };

/// Validates an integer sign; throws InvalidSign unless it is +1 or -1.
Sign sign_from_int(int value);
char sign_char(Sign sign) noexcept;

/**
 * Control-polarity pattern for the CNOT ladder of a basis circuit.
 *
 * Bit j drives the CNOT whose target is qubit j + 1: 1 selects a standard
 * control and 0 an inverted control. A pattern always has at least one bit,
 * so every basis index spans two or more qubits.
 */
class BitPattern {
  public:
    explicit BitPattern(std::vector<std::uint8_t> bits);

    /// Parses a string over {0,1}; the leftmost character is bit 0.
    static BitPattern from_string(std::string_view text);

    std::size_t size() const noexcept { return bits_.size(); }
    std::uint8_t operator[](std::size_t j) const { return bits_[j]; }
    std::span<const std::uint8_t> bits() const noexcept { return bits_; }
    std::string to_string() const;

    bool operator==(const BitPattern &) const = default;

  private:
    std::vector<std::uint8_t> bits_;
};

/// Element-wise 1 - bit.
BitPattern complement(const BitPattern &pattern);

/// Standard controls (ones) and inverted controls (zeros) in a pattern.
struct ControlCounts {
    std::size_t standard = 0;  // M
    std::size_t inverted = 0;  // L
};

ControlCounts count_controls(const BitPattern &pattern) noexcept;

/// Names one of the 2^n basis vectors: a sign plus an (n-1)-bit pattern.
class BasisIndex {
  public:
    BasisIndex(Sign sign, BitPattern pattern) : sign_(sign), pattern_(std::move(pattern)) {}

    Sign sign() const noexcept { return sign_; }
    const BitPattern &pattern() const noexcept { return pattern_; }
    unsigned n_qubits() const noexcept { return static_cast<unsigned>(pattern_.size() + 1); }

    bool operator==(const BasisIndex &) const = default;

  private:
    Sign sign_;
    BitPattern pattern_;
};

BasisIndex make_index(int sign, BitPattern pattern);

/// Largest width for which ordinals fit in 64 bits.
inline constexpr unsigned kMaxOrdinalQubits = 64;

/// Sign in bit n-1 of k (set means minus), pattern bit j in bit j.
BasisIndex from_ordinal(std::uint64_t k, unsigned n);
std::uint64_t to_ordinal(const BasisIndex &index);

/**
 * Draws a uniformly random index from std::mt19937_64 seeded with `seed`.
 *
 * The generator's 64-bit outputs are consumed as a little-endian bit stream:
 * stream bit i is bit (i % 64) of output i / 64. Pattern bit j takes stream
 * bit j and the sign takes stream bit n - 1, so for n <= 64 the result equals
 * from_ordinal(first_output mod 2^n, n). mt19937_64 is fully specified by the
 * C++ standard, which makes the draw identical on every conforming platform.
 */
BasisIndex random_index(unsigned n, std::uint64_t seed);

}  // namespace mebasis
