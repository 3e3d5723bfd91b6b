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

// Test-only reference computations. Nothing here calls into the statevector
// kernel; gates are built as explicit matrices from Kronecker products.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "mebasis/circuit.hpp"

namespace mebasis::oracle {

using Complex = std::complex<double>;
using Matrix = std::vector<std::vector<Complex>>;

inline Matrix identity(std::size_t dim) {
    Matrix m(dim, std::vector<Complex>(dim));
    for (std::size_t i = 0; i < dim; ++i) m[i][i] = 1.0;
    return m;
}

inline Matrix kron(const Matrix &a, const Matrix &b) {
    const std::size_t ra = a.size(), rb = b.size();
    Matrix out(ra * rb, std::vector<Complex>(ra * rb));
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < ra; ++j)
            for (std::size_t k = 0; k < rb; ++k)
                for (std::size_t l = 0; l < rb; ++l) out[i * rb + k][j * rb + l] = a[i][j] * b[k][l];
    return out;
}

inline Matrix add(const Matrix &a, const Matrix &b) {
    Matrix out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) out[i][j] += b[i][j];
    return out;
}

inline Matrix multiply(const Matrix &a, const Matrix &b) {
    const std::size_t d = a.size();
    Matrix out(d, std::vector<Complex>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t j = 0; j < d; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

// Places `ops[q]` on qubit q (qubit 0 leftmost in the tensor product).
inline Matrix tensor(const std::vector<Matrix> &ops) {
    Matrix out = ops[0];
    for (std::size_t q = 1; q < ops.size(); ++q) out = kron(out, ops[q]);
    return out;
}

inline Matrix single(char kind) {
    const double r = 1.0 / std::sqrt(2.0);
    switch (kind) {
        case 'H': return {{r, r}, {r, -r}};
        case 'Z': return {{1, 0}, {0, -1}};
        case 'X': return {{0, 1}, {1, 0}};
        case '0': return {{1, 0}, {0, 0}};  // |0><0|
        case '1': return {{0, 0}, {0, 1}};  // |1><1|
    }
    return identity(2);
}

/// Full 2^n x 2^n unitary of one gate.
inline Matrix unitary(const Gate &gate, unsigned n) {
    std::vector<Matrix> ops(n, identity(2));
    switch (gate.kind) {
        case GateKind::H: ops[gate.target] = single('H'); return tensor(ops);
        case GateKind::Z: ops[gate.target] = single('Z'); return tensor(ops);
        case GateKind::X: ops[gate.target] = single('X'); return tensor(ops);
        case GateKind::CNOT: {
            const char active = gate.polarity == Polarity::OnOne ? '1' : '0';
            const char idle = active == '1' ? '0' : '1';
            auto idle_ops = ops;
            idle_ops[*gate.control] = single(idle);
            auto flip_ops = ops;
            flip_ops[*gate.control] = single(active);
            flip_ops[gate.target] = single('X');
            return add(tensor(idle_ops), tensor(flip_ops));
        }
    }
    return identity(std::size_t{1} << n);
}

inline Matrix unitary(const Circuit &circuit) {
    Matrix u = identity(std::size_t{1} << circuit.n_qubits());
    for (const auto &g : circuit.gates()) u = multiply(unitary(g, circuit.n_qubits()), u);
    return u;
}

inline std::vector<Complex> apply(const Matrix &u, const std::vector<Complex> &v) {
    std::vector<Complex> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += u[i][j] * v[j];
    return out;
}

inline double max_diff(const Matrix &a, const Matrix &b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) worst = std::max(worst, std::abs(a[i][j] - b[i][j]));
    return worst;
}

/// Reduced density matrix of one qubit from the full |psi><psi|.
inline Matrix reduced_density(const std::vector<Complex> &psi, unsigned n, unsigned qubit) {
    Matrix rho(2, std::vector<Complex>(2));
    const std::size_t dim = psi.size();
    const unsigned shift = n - 1 - qubit;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            // Trace over the other qubits: all their bits must agree.
            const std::size_t rest_mask = (dim - 1) & ~(std::size_t{1} << shift);
            if ((i & rest_mask) != (j & rest_mask)) continue;
            rho[(i >> shift) & 1][(j >> shift) & 1] += psi[i] * std::conj(psi[j]);
        }
    return rho;
}

inline double purity(const Matrix &rho) {
    Complex tr = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) tr += rho[i][k] * rho[k][i];
    return tr.real();
}

inline std::vector<Complex> random_state(std::size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    std::vector<Complex> v(dim);
    double norm = 0.0;
    for (auto &a : v) {
        a = {normal(rng), normal(rng)};
        norm += std::norm(a);
    }
    for (auto &a : v) a /= std::sqrt(norm);
    return v;
}

inline Gate random_gate(unsigned n, std::mt19937_64 &rng) {
    std::uniform_int_distribution<unsigned> qubit(0, n - 1);
    std::uniform_int_distribution<int> kind(0, n > 1 ? 4 : 2);
    const unsigned t = qubit(rng);
    switch (kind(rng)) {
        case 0: return Gate::h(t);
        case 1: return Gate::z(t);
        case 2: return Gate::x(t);
        default: {
            unsigned c = qubit(rng);
            while (c == t) c = qubit(rng);
            return Gate::cnot(c, t, rng() & 1 ? Polarity::OnOne : Polarity::OnZero);
        }
    }
}

}  // namespace mebasis::oracle
