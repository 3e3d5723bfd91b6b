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

/*
 * C interface to the mebasis library.
 *
 * Objects are opaque handles created by *_new / *_from_* / *_build style
 * functions and released with the matching *_free. Every fallible call
 * returns an mb_status; on failure mb_last_error() describes the problem
 * for the calling thread until its next failing call. Strings returned
 * through `char **` are heap allocated and must be released with
 * mb_string_free.
 */
#ifndef MEBASIS_H
#define MEBASIS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MEBASIS_BUILDING_LIBRARY)
#    define MB_API __declspec(dllexport)
#  else
#    define MB_API __declspec(dllimport)
#  endif
#else
#  define MB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mb_status {
    MB_OK = 0,
    MB_ERR_EMPTY_PATTERN = 1,
    MB_ERR_INVALID_PATTERN = 2,
    MB_ERR_INVALID_SIGN = 3,
    MB_ERR_OUT_OF_RANGE = 4,
    MB_ERR_TOO_FEW_QUBITS = 5,
    MB_ERR_TOO_MANY_QUBITS = 6,
    MB_ERR_LABEL_LENGTH_MISMATCH = 7,
    MB_ERR_QUBIT_OUT_OF_RANGE = 8,
    MB_ERR_WIDTH_MISMATCH = 9,
    MB_ERR_SYNTAX = 10,
    MB_ERR_UNSUPPORTED_GATE = 11,
    MB_ERR_REGISTER_MISMATCH = 12,
    MB_ERR_INVALID_ARGUMENT = 13,
    MB_ERR_INTERNAL = 100
} mb_status;

typedef enum mb_gate_kind { MB_GATE_H = 0, MB_GATE_Z = 1, MB_GATE_X = 2, MB_GATE_CNOT = 3 } mb_gate_kind;

typedef enum mb_verify_mode { MB_VERIFY_DENSE = 0, MB_VERIFY_SPARSE = 1 } mb_verify_mode;

/* control is -1 for single-qubit gates; on_zero is 1 for an inverted control. */
typedef struct mb_gate {
    mb_gate_kind kind;
    uint32_t target;
    int32_t control;
    int32_t on_zero;
} mb_gate;

typedef struct mb_index mb_index;
typedef struct mb_circuit mb_circuit;
typedef struct mb_statevector mb_statevector;
typedef struct mb_report mb_report;

MB_API const char *mb_last_error(void);
MB_API const char *mb_status_name(mb_status status);
MB_API void mb_string_free(char *s);
MB_API uint32_t mb_default_qubit_limit(void);

/* Basis indices. `pattern` is a string over {0,1}; its first character
 * drives the CNOT onto qubit 1. `sign` is +1 or -1. */
MB_API mb_status mb_index_from_pattern(int sign, const char *pattern, mb_index **out);
MB_API mb_status mb_index_from_ordinal(uint64_t ordinal, uint32_t n_qubits, mb_index **out);
MB_API mb_status mb_index_random(uint32_t n_qubits, uint64_t seed, mb_index **out);
MB_API void mb_index_free(mb_index *index);
MB_API uint32_t mb_index_n_qubits(const mb_index *index);
MB_API int mb_index_sign(const mb_index *index);
MB_API mb_status mb_index_pattern(const mb_index *index, char **out);
MB_API mb_status mb_index_ordinal(const mb_index *index, uint64_t *out);
MB_API mb_status mb_index_control_counts(const mb_index *index, uint32_t *standard, uint32_t *inverted);
MB_API mb_status mb_index_gate_counts(const mb_index *index, uint32_t *cnot_type, uint32_t *single_qubit);
/* Closed form, e.g. "(|000> + |111>)/sqrt(2)". */
MB_API mb_status mb_index_state_text(const mb_index *index, char **out);

/* Circuits. */
MB_API mb_status mb_circuit_new(uint32_t n_qubits, mb_circuit **out);
MB_API mb_status mb_circuit_append(mb_circuit *circuit, const mb_gate *gate);
MB_API mb_status mb_circuit_build(const mb_index *index, mb_circuit **out);
MB_API mb_status mb_circuit_lower(const mb_circuit *circuit, mb_circuit **out);
MB_API void mb_circuit_free(mb_circuit *circuit);
MB_API uint32_t mb_circuit_n_qubits(const mb_circuit *circuit);
MB_API size_t mb_circuit_size(const mb_circuit *circuit);
MB_API mb_status mb_circuit_gate(const mb_circuit *circuit, size_t position, mb_gate *out);
MB_API mb_status mb_circuit_to_text(const mb_circuit *circuit, char **out);
/* `provenance` and `seed` may be NULL. */
MB_API mb_status mb_circuit_to_qasm(const mb_circuit *circuit, const mb_index *provenance, const uint64_t *seed,
                                    char **out);
MB_API mb_status mb_circuit_from_qasm(const char *text, mb_circuit **out);

/* Statevectors. Widths above mb_default_qubit_limit() need force != 0. */
MB_API mb_status mb_statevector_zero(uint32_t n_qubits, int force, mb_statevector **out);
MB_API mb_status mb_statevector_basis(const char *label, int force, mb_statevector **out);
/* `initial` may be NULL for |0...0>. */
MB_API mb_status mb_statevector_run(const mb_circuit *circuit, const mb_statevector *initial, int force,
                                    mb_statevector **out);
MB_API void mb_statevector_free(mb_statevector *state);
MB_API uint32_t mb_statevector_n_qubits(const mb_statevector *state);
MB_API mb_status mb_statevector_apply(mb_statevector *state, const mb_gate *gate);
MB_API mb_status mb_statevector_amplitude(const mb_statevector *state, uint64_t i, double *re, double *im);
MB_API mb_status mb_statevector_inner(const mb_statevector *a, const mb_statevector *b, double *re, double *im);
MB_API mb_status mb_statevector_marginal_p0(const mb_statevector *state, uint32_t qubit, double *out);
MB_API mb_status mb_statevector_purity(const mb_statevector *state, uint32_t qubit, double *out);
MB_API mb_status mb_statevector_dump(const mb_statevector *state, char **out);

/* Verification. `seed` may be NULL; it is only recorded in the report. */
MB_API mb_status mb_verify_index(const mb_index *index, const uint64_t *seed, int force, mb_report **out);
MB_API mb_status mb_verify_complete_basis(uint32_t n_qubits, mb_verify_mode mode, uint32_t jobs, int force,
                                          mb_report **out);
MB_API void mb_report_free(mb_report *report);
MB_API int mb_report_passed(const mb_report *report);
MB_API size_t mb_report_check_count(const mb_report *report);
/* `name` points into the report and stays valid until mb_report_free. */
MB_API mb_status mb_report_check(const mb_report *report, size_t position, const char **name, int *pass,
                                 double *deviation, double *tolerance);
MB_API mb_status mb_report_to_text(const mb_report *report, char **out);
MB_API mb_status mb_report_to_json(const mb_report *report, char **out);

#ifdef __cplusplus
}
#endif

#endif /* MEBASIS_H */
