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

#include "mebasis/basis_index.hpp"

#include <random>

#include "mebasis/error.hpp"

namespace mebasis {

const char *error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::EmptyPattern: return "EmptyPattern";
        case ErrorCode::InvalidPattern: return "InvalidPattern";
        case ErrorCode::InvalidSign: return "InvalidSign";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::TooFewQubits: return "TooFewQubits";
        case ErrorCode::TooManyQubits: return "TooManyQubits";
        case ErrorCode::LabelLengthMismatch: return "LabelLengthMismatch";
        case ErrorCode::QubitOutOfRange: return "QubitOutOfRange";
        case ErrorCode::WidthMismatch: return "WidthMismatch";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::UnsupportedGate: return "UnsupportedGate";
        case ErrorCode::RegisterMismatch: return "RegisterMismatch";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Sign sign_from_int(int value) {
    if (value == 1) {
        return Sign::Plus;
    }
    if (value == -1) {
        return Sign::Minus;
    }
    throw Error(ErrorCode::InvalidSign, "sign must be +1 or -1, got " + std::to_string(value));
}

char sign_char(Sign sign) noexcept { return sign == Sign::Plus ? '+' : '-'; }

BitPattern::BitPattern(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    if (bits_.empty()) {
        throw Error(ErrorCode::EmptyPattern, "a pattern needs at least one bit (two qubits)");
    }
    for (std::size_t j = 0; j < bits_.size(); ++j) {
        if (bits_[j] > 1) {
            throw Error(ErrorCode::InvalidPattern, "pattern bit " + std::to_string(j) + " is not 0 or 1");
        }
    }
}

BitPattern BitPattern::from_string(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw Error(ErrorCode::InvalidPattern,
                        "pattern must be a string over {0,1}, got '" + std::string(text) + "'");
        }
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BitPattern(std::move(bits));
}

std::string BitPattern::to_string() const {
    std::string out(bits_.size(), '0');
    for (std::size_t j = 0; j < bits_.size(); ++j) {
        out[j] = static_cast<char>('0' + bits_[j]);
    }
    return out;
}

BitPattern complement(const BitPattern &pattern) {
    std::vector<std::uint8_t> bits(pattern.bits().begin(), pattern.bits().end());
    for (auto &b : bits) {
        b ^= 1;
    }
    return BitPattern(std::move(bits));
}

ControlCounts count_controls(const BitPattern &pattern) noexcept {
    ControlCounts counts;
    for (auto b : pattern.bits()) {
        if (b) {
            ++counts.standard;
        } else {
            ++counts.inverted;
        }
    }
    return counts;
}

BasisIndex make_index(int sign, BitPattern pattern) { return BasisIndex(sign_from_int(sign), std::move(pattern)); }

BasisIndex from_ordinal(std::uint64_t k, unsigned n) {
    if (n < 2) {
        throw Error(ErrorCode::TooFewQubits, "need at least 2 qubits, got " + std::to_string(n));
    }
    if (n > kMaxOrdinalQubits) {
        throw Error(ErrorCode::OutOfRange, "ordinals are limited to 64 qubits, got " + std::to_string(n));
    }
    if (n < 64 && k >> n != 0) {
        throw Error(ErrorCode::OutOfRange,
                    "ordinal " + std::to_string(k) + " is not below 2^" + std::to_string(n));
    }
    std::vector<std::uint8_t> bits(n - 1);
    for (unsigned j = 0; j + 1 < n; ++j) {
        bits[j] = static_cast<std::uint8_t>((k >> j) & 1U);
    }
    const Sign sign = ((k >> (n - 1)) & 1U) ? Sign::Minus : Sign::Plus;
    return BasisIndex(sign, BitPattern(std::move(bits)));
}

std::uint64_t to_ordinal(const BasisIndex &index) {
    const unsigned n = index.n_qubits();
    if (n > kMaxOrdinalQubits) {
        throw Error(ErrorCode::OutOfRange, "ordinals are limited to 64 qubits, got " + std::to_string(n));
    }
    std::uint64_t k = 0;
    const auto bits = index.pattern().bits();
    for (std::size_t j = 0; j < bits.size(); ++j) {
        k |= static_cast<std::uint64_t>(bits[j]) << j;
    }
    if (index.sign() == Sign::Minus) {
        k |= std::uint64_t{1} << (n - 1);
    }
    return k;
}

BasisIndex random_index(unsigned n, std::uint64_t seed) {
    if (n < 2) {
        throw Error(ErrorCode::TooFewQubits, "need at least 2 qubits, got " + std::to_string(n));
    }
    std::mt19937_64 engine(seed);
    std::uint64_t word = 0;
    auto stream_bit = [&](unsigned i) -> std::uint8_t {
        if (i % 64 == 0) {
            word = engine();
        }
        return static_cast<std::uint8_t>((word >> (i % 64)) & 1U);
    };
    std::vector<std::uint8_t> bits(n - 1);
    for (unsigned j = 0; j + 1 < n; ++j) {
        bits[j] = stream_bit(j);
    }
    const Sign sign = stream_bit(n - 1) ? Sign::Minus : Sign::Plus;
    return BasisIndex(sign, BitPattern(std::move(bits)));
}

}  // namespace mebasis
