/* SPDX-License-Identifier: Apache-2.0 */

#ifndef HELIX_H
#define HELIX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HELIX_API __declspec(dllexport)
#else
#define HELIX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum helix_status {
    HELIX_OK = 0,
    HELIX_E_DIVISION_BY_ZERO,
    HELIX_E_SHAPE,
    HELIX_E_EMPTY_INPUT,
    HELIX_E_BAD_ARGUMENT,
    HELIX_E_NOT_IN_ALPHABET,
    HELIX_E_BUDGET_EXCEEDED,
    HELIX_E_GUARD_VIOLATED,
    HELIX_E_PARSE,
    HELIX_E_IO,
    HELIX_E_INTERNAL
} helix_status;

typedef enum helix_metric {
    HELIX_METRIC_HAMMING_Z11 = 0,
    HELIX_METRIC_INDUCED,
    HELIX_METRIC_DNA_HAMMING_AFTER_F,
    HELIX_METRIC_REVERSE,
    HELIX_METRIC_REVERSE_COMPLEMENT,
    HELIX_METRIC_DNA_HAMMING
} helix_metric;

/* Message for the last failing call on this thread; never NULL. */
HELIX_API const char* helix_last_error(void);
HELIX_API const char* helix_status_name(helix_status status);
HELIX_API const char* helix_version(void);

/* Frees strings returned through char** out-parameters. */
HELIX_API void helix_string_free(char* s);

/* --- codebooks ----------------------------------------------------------- */

typedef struct helix_codebook helix_codebook;

typedef struct helix_codebook_options {
    const char* family; /* "family1:k=2", "hamming:r=2", "rs:delta=3,alpha=2,a=0" */
    int apply_f;
    int augment;
    uint64_t seed;
    uint32_t max_run;
    uint32_t max_stem;
    uint32_t flip_threshold;
    uint64_t sample_count;
    uint64_t enumeration_cap;
    uint32_t threads; /* 0 = HELIX_THREADS or hardware */
} helix_codebook_options;

typedef struct helix_codebook_info {
    size_t code_length;
    size_t dna_length;
    size_t size_exponent;
    int augmented;
    int explicit_book;
    size_t sequence_count; /* 0 for implicit books */
    double rate;
} helix_codebook_info;

HELIX_API void helix_codebook_options_init(helix_codebook_options* options);
HELIX_API helix_status helix_codebook_build(const helix_codebook_options* options, helix_codebook** out);
HELIX_API void helix_codebook_free(helix_codebook* book);
HELIX_API helix_status helix_codebook_get_info(const helix_codebook* book, helix_codebook_info* out);

/* Certifies the distances relevant to the book (post-flip metric only when f is applied). */
HELIX_API helix_status helix_codebook_certify(helix_codebook* book);
HELIX_API helix_status helix_codebook_distance(const helix_codebook* book, helix_metric metric, uint64_t* lower,
                                               uint64_t* upper, int* exact);

/* Runs the constraint checks; *hard_failure is set when any threshold is exceeded. */
HELIX_API helix_status helix_codebook_verify(helix_codebook* book, int* hard_failure);

/* Writes the sequences as FASTA. HELIX_E_BUDGET_EXCEEDED for implicit books. */
HELIX_API helix_status helix_codebook_write_fasta(const helix_codebook* book, const char* path);
HELIX_API helix_status helix_codebook_sequence(const helix_codebook* book, size_t index, char** out);
HELIX_API helix_status helix_codebook_report_json(const helix_codebook* book, int timing, double elapsed_seconds,
                                                  char** out);

/* --- sequences ----------------------------------------------------------- */

HELIX_API helix_status helix_verify_fasta(const char* path, uint32_t max_run, uint32_t max_stem, uint32_t threads,
                                          char** report_json, int* hard_failure);
HELIX_API helix_status helix_fold(const char* sequence, long long* energy, size_t* max_stem, char** report_json);
/* Folds every record of a FASTA file. */
HELIX_API helix_status helix_fold_fasta(const char* path, char** report_json);
HELIX_API helix_status helix_phi(const char* z11_word, char** dna);
HELIX_API helix_status helix_phi_inv(const char* dna, char** z11_word);
HELIX_API helix_status helix_flip(const char* dna, uint32_t threshold, char** out);

/* --- alphabet certification ---------------------------------------------- */

typedef struct helix_certify_options {
    uint32_t window;
    uint32_t max_stem;
    uint64_t budget;
    const char* resume_token; /* NULL to start from the beginning */
    uint32_t threads;
    int timing;
} helix_certify_options;

HELIX_API void helix_certify_options_init(helix_certify_options* options);

/* Enumerates windows of the eleven-block alphabet. On HELIX_E_BUDGET_EXCEEDED
 * the partial report and *resume_token are still filled in. */
HELIX_API helix_status helix_certify_alphabet(const helix_certify_options* options, char** report_json,
                                              int* within_limit, char** resume_token);

/* --- rates --------------------------------------------------------------- */

HELIX_API helix_status helix_rates_csv(char** out);

#ifdef __cplusplus
}
#endif

#endif /* HELIX_H */
