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

// Exercises the extern-C surface the CLI and other language bindings link against.

#include "mebasis.h"

#include <cmath>
#include <string>

#include "gtest/gtest.h"

namespace {

std::string take(char *s) {
    std::string out = s ? s : "";
    mb_string_free(s);
    return out;
}

}  // namespace

TEST(c_api, index_lifecycle) {
    mb_index *index = nullptr;
    ASSERT_EQ(mb_index_from_pattern(1, "11", &index), MB_OK);
    EXPECT_EQ(mb_index_n_qubits(index), 3U);
    EXPECT_EQ(mb_index_sign(index), 1);
    uint64_t k = 0;
    ASSERT_EQ(mb_index_ordinal(index, &k), MB_OK);
    EXPECT_EQ(k, 3U);
    char *s = nullptr;
    ASSERT_EQ(mb_index_pattern(index, &s), MB_OK);
    EXPECT_EQ(take(s), "11");
    ASSERT_EQ(mb_index_state_text(index, &s), MB_OK);
    EXPECT_EQ(take(s), "(|000> + |111>)/sqrt(2)");
    uint32_t cnot = 0, single = 0, m = 0, l = 0;
    ASSERT_EQ(mb_index_gate_counts(index, &cnot, &single), MB_OK);
    EXPECT_EQ(cnot, 2U);
    EXPECT_EQ(single, 1U);
    ASSERT_EQ(mb_index_control_counts(index, &m, &l), MB_OK);
    EXPECT_EQ(m, 2U);
    EXPECT_EQ(l, 0U);
    mb_index_free(index);
}

TEST(c_api, error_codes) {
    mb_index *index = nullptr;
    EXPECT_EQ(mb_index_from_pattern(1, "", &index), MB_ERR_EMPTY_PATTERN);
    EXPECT_EQ(index, nullptr);
    EXPECT_NE(std::string(mb_last_error()).find("EmptyPattern"), std::string::npos);
    EXPECT_EQ(mb_index_from_pattern(3, "1", &index), MB_ERR_INVALID_SIGN);
    EXPECT_EQ(mb_index_from_pattern(1, "12", &index), MB_ERR_INVALID_PATTERN);
    EXPECT_EQ(mb_index_from_ordinal(8, 3, &index), MB_ERR_OUT_OF_RANGE);
    EXPECT_EQ(mb_index_random(1, 0, &index), MB_ERR_TOO_FEW_QUBITS);
    EXPECT_EQ(mb_index_from_pattern(1, nullptr, &index), MB_ERR_INVALID_ARGUMENT);
    EXPECT_STREQ(mb_status_name(MB_ERR_TOO_MANY_QUBITS), "TooManyQubits");

    mb_statevector *state = nullptr;
    EXPECT_EQ(mb_statevector_zero(31, 0, &state), MB_ERR_TOO_MANY_QUBITS);
    EXPECT_EQ(mb_default_qubit_limit(), 30U);

    mb_circuit *circuit = nullptr;
    EXPECT_EQ(mb_circuit_from_qasm("OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[3];\nccx q[0],q[1],q[2];\n",
                                   &circuit),
              MB_ERR_UNSUPPORTED_GATE);
    EXPECT_NE(std::string(mb_last_error()).find("line 4"), std::string::npos);
    EXPECT_EQ(mb_circuit_from_qasm("OPENQASM 2.0;\n", &circuit), MB_ERR_SYNTAX);
}

TEST(c_api, circuit_and_simulation) {
    mb_index *index = nullptr;
    ASSERT_EQ(mb_index_from_pattern(-1, "01", &index), MB_OK);
    mb_circuit *circuit = nullptr;
    ASSERT_EQ(mb_circuit_build(index, &circuit), MB_OK);
    EXPECT_EQ(mb_circuit_size(circuit), 4U);
    mb_gate gate{};
    ASSERT_EQ(mb_circuit_gate(circuit, 2, &gate), MB_OK);
    EXPECT_EQ(gate.kind, MB_GATE_CNOT);
    EXPECT_EQ(gate.control, 0);
    EXPECT_EQ(gate.target, 1U);
    EXPECT_EQ(gate.on_zero, 1);
    EXPECT_EQ(mb_circuit_gate(circuit, 4, &gate), MB_ERR_OUT_OF_RANGE);

    char *s = nullptr;
    ASSERT_EQ(mb_circuit_to_text(circuit, &s), MB_OK);
    EXPECT_EQ(take(s), "H 0\nZ 0\nCX0 0 1\nCX 0 2\n");

    mb_statevector *state = nullptr;
    ASSERT_EQ(mb_statevector_run(circuit, nullptr, 0, &state), MB_OK);
    const double r = 1.0 / std::sqrt(2.0);
    double re = 0, im = 0;
    ASSERT_EQ(mb_statevector_amplitude(state, 0b010, &re, &im), MB_OK);
    EXPECT_NEAR(re, r, 1e-12);
    ASSERT_EQ(mb_statevector_amplitude(state, 0b101, &re, &im), MB_OK);
    EXPECT_NEAR(re, -r, 1e-12);
    EXPECT_EQ(mb_statevector_amplitude(state, 8, &re, &im), MB_ERR_OUT_OF_RANGE);

    double p = 0;
    for (uint32_t q = 0; q < 3; ++q) {
        ASSERT_EQ(mb_statevector_marginal_p0(state, q, &p), MB_OK);
        EXPECT_NEAR(p, 0.5, 1e-12);
        ASSERT_EQ(mb_statevector_purity(state, q, &p), MB_OK);
        EXPECT_NEAR(p, 0.5, 1e-12);
    }
    EXPECT_EQ(mb_statevector_purity(state, 3, &p), MB_ERR_QUBIT_OUT_OF_RANGE);

    ASSERT_EQ(mb_statevector_inner(state, state, &re, &im), MB_OK);
    EXPECT_NEAR(re, 1.0, 1e-12);
    ASSERT_EQ(mb_statevector_dump(state, &s), MB_OK);
    EXPECT_EQ(take(s), "010 0.70710678118654757 0\n101 -0.70710678118654757 0\n");

    mb_statevector *other = nullptr;
    ASSERT_EQ(mb_statevector_basis("01", 0, &other), MB_OK);
    EXPECT_EQ(mb_statevector_inner(state, other, &re, &im), MB_ERR_WIDTH_MISMATCH);
    EXPECT_EQ(mb_statevector_run(circuit, other, 0, &state), MB_ERR_WIDTH_MISMATCH);

    mb_statevector_free(other);
    mb_statevector_free(state);
    mb_circuit_free(circuit);
    mb_index_free(index);
}

TEST(c_api, manual_circuit_and_apply) {
    mb_circuit *circuit = nullptr;
    ASSERT_EQ(mb_circuit_new(2, &circuit), MB_OK);
    const mb_gate h{MB_GATE_H, 0, -1, 0};
    const mb_gate cx0{MB_GATE_CNOT, 1, 0, 1};
    const mb_gate bad{MB_GATE_CNOT, 1, 1, 0};
    ASSERT_EQ(mb_circuit_append(circuit, &h), MB_OK);
    ASSERT_EQ(mb_circuit_append(circuit, &cx0), MB_OK);
    EXPECT_EQ(mb_circuit_append(circuit, &bad), MB_ERR_INVALID_ARGUMENT);

    mb_circuit *lowered = nullptr;
    ASSERT_EQ(mb_circuit_lower(circuit, &lowered), MB_OK);
    EXPECT_EQ(mb_circuit_size(lowered), 3U);
    char *s = nullptr;
    ASSERT_EQ(mb_circuit_to_qasm(circuit, nullptr, nullptr, &s), MB_OK);
    const std::string qasm = take(s);
    EXPECT_EQ(qasm, "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\nh q[0];\nx q[1];\ncx q[0],q[1];\n");
    mb_circuit *parsed = nullptr;
    ASSERT_EQ(mb_circuit_from_qasm(qasm.c_str(), &parsed), MB_OK);
    ASSERT_EQ(mb_circuit_to_qasm(parsed, nullptr, nullptr, &s), MB_OK);
    EXPECT_EQ(take(s), qasm);

    mb_statevector *state = nullptr;
    ASSERT_EQ(mb_statevector_zero(2, 0, &state), MB_OK);
    ASSERT_EQ(mb_statevector_apply(state, &h), MB_OK);
    ASSERT_EQ(mb_statevector_apply(state, &cx0), MB_OK);
    // (|01> + |10>)/sqrt(2)
    double re = 0, im = 0;
    ASSERT_EQ(mb_statevector_amplitude(state, 1, &re, &im), MB_OK);
    EXPECT_NEAR(re, 1.0 / std::sqrt(2.0), 1e-12);
    const mb_gate out_of_range{MB_GATE_X, 2, -1, 0};
    EXPECT_EQ(mb_statevector_apply(state, &out_of_range), MB_ERR_QUBIT_OUT_OF_RANGE);

    mb_statevector_free(state);
    mb_circuit_free(parsed);
    mb_circuit_free(lowered);
    mb_circuit_free(circuit);
}

TEST(c_api, verification_reports) {
    mb_index *index = nullptr;
    ASSERT_EQ(mb_index_random(5, 12, &index), MB_OK);
    const uint64_t seed = 12;
    mb_report *report = nullptr;
    ASSERT_EQ(mb_verify_index(index, &seed, 0, &report), MB_OK);
    EXPECT_EQ(mb_report_passed(report), 1);
    ASSERT_EQ(mb_report_check_count(report), 4U);
    const char *name = nullptr;
    int pass = 0;
    double deviation = 1, tolerance = 0;
    ASSERT_EQ(mb_report_check(report, 0, &name, &pass, &deviation, &tolerance), MB_OK);
    EXPECT_STREQ(name, "circuit_vs_closed_form");
    EXPECT_EQ(pass, 1);
    EXPECT_EQ(tolerance, 1e-12);
    char *s = nullptr;
    ASSERT_EQ(mb_report_to_text(report, &s), MB_OK);
    EXPECT_NE(take(s).find("seed=12\n"), std::string::npos);
    ASSERT_EQ(mb_report_to_json(report, &s), MB_OK);
    EXPECT_NE(take(s).find("\"seed\": 12"), std::string::npos);
    mb_report_free(report);
    mb_index_free(index);

    ASSERT_EQ(mb_verify_complete_basis(4, MB_VERIFY_DENSE, 2, 0, &report), MB_OK);
    EXPECT_EQ(mb_report_passed(report), 1);
    mb_report_free(report);
    ASSERT_EQ(mb_verify_complete_basis(10, MB_VERIFY_SPARSE, 1, 0, &report), MB_OK);
    EXPECT_EQ(mb_report_passed(report), 1);
    mb_report_free(report);
    EXPECT_EQ(mb_verify_complete_basis(15, MB_VERIFY_DENSE, 1, 0, &report), MB_ERR_TOO_MANY_QUBITS);
    EXPECT_EQ(mb_verify_complete_basis(4, static_cast<mb_verify_mode>(7), 1, 0, &report), MB_ERR_INVALID_ARGUMENT);
}
