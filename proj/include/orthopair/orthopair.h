// Copyright 2026 the orthopair authors
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

#ifndef ORTHOPAIR_ORTHOPAIR_H
#define ORTHOPAIR_ORTHOPAIR_H

#include <stddef.h>
#include <stdint.h>

#if defined(ORTHOPAIR_BUILDING_LIBRARY)
#define OPAIR_API __attribute__((visibility("default")))
#else
#define OPAIR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Every fallible call returns one; on failure the message is
 * available from opair_last_error() on the calling thread. */
typedef enum opair_status {
    OPAIR_OK = 0,
    OPAIR_ERR_INVALID_ARGUMENT = 1,
    OPAIR_ERR_PARSE = 2,
    OPAIR_ERR_INVALID_OPERAND = 3,
    OPAIR_ERR_NOT_HERMITIAN = 4,
    OPAIR_ERR_NOT_POSITIVE = 5,
    OPAIR_ERR_BLOCK_MISMATCH = 6,
    OPAIR_ERR_ZERO_VECTOR = 7,
    OPAIR_ERR_SPACE_MISMATCH = 8,
    OPAIR_ERR_INVALID_THETA = 9,
    OPAIR_ERR_SINGULAR_GRAM = 10,
    OPAIR_ERR_NOT_A_LINEAR = 11,
    OPAIR_ERR_SINGULAR = 12,
    OPAIR_ERR_NOT_MINIMAL_PROJECTION = 13,
    OPAIR_ERR_DEGENERATE_SAMPLE = 14,
    OPAIR_ERR_INCONSISTENT_GAMMA = 15,
    OPAIR_ERR_INTERNAL = 16
} opair_status;

/* Verdict codes double as process exit codes (zero pairs count as passing). */
typedef enum opair_verdict {
    OPAIR_VERDICT_PRESERVING = 0,
    OPAIR_VERDICT_NOT_PRESERVING = 1,
    OPAIR_VERDICT_ZERO_PAIR = 2,
    OPAIR_VERDICT_INCONCLUSIVE = 3
} opair_verdict;

typedef enum opair_format { OPAIR_FORMAT_TEXT = 0, OPAIR_FORMAT_STRUCTURED = 1 } opair_format;

/* A pair (T, S) on A^n with its algebra, rank, kind, seed and optional gamma. */
typedef struct opair_instance opair_instance;

typedef struct opair_suite_options {
    const int* blocks; /* block sizes; NULL selects the default (3, 2) */
    size_t block_count;
    int rank;
    uint64_t seed;
    int cases;
    double theta1;
    double theta2;
    int mutate; /* run the deliberately broken variant of each suite */
    int timing; /* include wall times; output is no longer byte-stable */
} opair_suite_options;

OPAIR_API const char* opair_version(void);
OPAIR_API const char* opair_status_string(opair_status status);
/* Message of the last failed call on this thread; empty when none. */
OPAIR_API const char* opair_last_error(void);

/* Strings returned through char** out-parameters are owned by the caller. */
OPAIR_API void opair_string_free(char* s);

/* kind: "preserving", "corrupted", "random", "perturbed" or "identity".
 * theta1/theta2 are only used by "perturbed". */
OPAIR_API opair_status opair_instance_generate(const int* blocks, size_t block_count, int rank, const char* kind,
                                               uint64_t seed, double theta1, double theta2, opair_instance** out);
/* Parses an instance document; reports that embed an instance load too. */
OPAIR_API opair_status opair_instance_load(const char* text, opair_instance** out);
OPAIR_API opair_status opair_instance_save(const opair_instance* instance, char** out);
OPAIR_API void opair_instance_free(opair_instance* instance);

OPAIR_API int opair_instance_rank(const opair_instance* instance);
OPAIR_API size_t opair_instance_block_count(const opair_instance* instance);
/* Writes the stored gamma as (re, im) pairs into out[0 .. 2 * block_count).
 * Returns OPAIR_ERR_INVALID_ARGUMENT when the instance stores none. */
OPAIR_API opair_status opair_instance_gamma(const opair_instance* instance, double* out, size_t capacity);

/* Extracts gamma with diagnostics and decides the pair. A witness present in
 * the loaded document is re-verified and the outcome included. */
OPAIR_API opair_status opair_instance_extract(const opair_instance* instance, uint64_t seed, double tol,
                                              opair_format format, char** report, opair_verdict* verdict);
/* Decides the pair and checks a stored gamma. passed is nonzero iff both hold. */
OPAIR_API opair_status opair_instance_verify(const opair_instance* instance, uint64_t seed, double tol,
                                             opair_format format, char** report, opair_verdict* verdict,
                                             int* passed);

OPAIR_API size_t opair_suite_count(void);
OPAIR_API const char* opair_suite_name(size_t index);
OPAIR_API void opair_suite_options_init(opair_suite_options* options);
/* names: comma-separated suite names or "all". Unknown names give
 * OPAIR_ERR_INVALID_ARGUMENT with the list of known suites in the message. */
OPAIR_API opair_status opair_run_suites(const char* names, const opair_suite_options* options, opair_format format,
                                        char** report, int* all_passed);
/* Re-runs one case of each named suite. */
OPAIR_API opair_status opair_replay_case(const char* names, const opair_suite_options* options, size_t case_index,
                                         opair_format format, char** report, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif
