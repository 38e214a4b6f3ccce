/*
 * kregular.h - C interface to the k-regular word pattern-avoidance library.
 *
 * All objects are opaque handles created by the library and released with
 * the matching *_destroy function. Every call that can fail returns a
 * kr_status; on failure the context keeps a message retrievable with
 * kr_context_last_error(). Big integers cross the boundary as decimal
 * strings. Strings returned by accessors stay valid until their owning
 * handle is destroyed.
 */
#ifndef KREGULAR_H
#define KREGULAR_H

#include <stddef.h>

#if defined(KREGULAR_BUILDING_LIBRARY)
#define KR_API __attribute__((visibility("default")))
#else
#define KR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kr_status {
  KR_OK = 0,
  KR_ERROR_INVALID_ARGUMENT = 1, /* precondition violated */
  KR_ERROR_PARSE = 2,            /* malformed word / pattern / name */
  KR_ERROR_RESOURCE = 3,         /* k*n above the symbol limit */
  KR_ERROR_INTERNAL = 4          /* consistency failure or unexpected error */
} kr_status;

typedef enum kr_method {
  KR_METHOD_BRUTE = 0,    /* pruned depth-first enumeration */
  KR_METHOD_CONSTRUCT = 1 /* recursive generator of the matching family */
} kr_method;

typedef struct kr_context kr_context;
typedef struct kr_strings kr_strings;
typedef struct kr_report kr_report;

/* Parameters for kr_sequence. Unused members are ignored. */
typedef struct kr_seq_params {
  long long k;
  long long b0, b1, k1, k2; /* "general" */
  long long r;              /* "conjecture" and table rows */
} kr_seq_params;

KR_API const char* kr_version(void);
KR_API const char* kr_status_string(kr_status status);

/* Context: options (symbol limit, worker threads) and the last error. */
KR_API kr_status kr_context_create(kr_context** out);
KR_API void kr_context_destroy(kr_context* ctx);
KR_API kr_status kr_context_set_max_symbols(kr_context* ctx, size_t max_symbols);
KR_API kr_status kr_context_set_threads(kr_context* ctx, unsigned threads);
KR_API const char* kr_context_last_error(const kr_context* ctx);

/* Ordered list of strings (words, decimal integers, text blocks). */
KR_API size_t kr_strings_size(const kr_strings* list);
KR_API const char* kr_strings_at(const kr_strings* list, size_t index);
KR_API void kr_strings_destroy(kr_strings* list);

/* |Av_n^k(patterns)| as a one-element list. `patterns` uses the
 * comma-separated syntax, e.g. "v:121,123,132,213". */
KR_API kr_status kr_count(kr_context* ctx, unsigned n, unsigned k,
                          const char* patterns, kr_strings** out);

/* Av_n^k(patterns) in lexicographic order. KR_METHOD_CONSTRUCT is accepted
 * only for {121,123,132,213}, {122,213} (k >= 2) and {v:121,123,132,213}
 * (k = 2); otherwise KR_ERROR_INVALID_ARGUMENT. */
KR_API kr_status kr_list(kr_context* ctx, unsigned n, unsigned k,
                         const char* patterns, kr_method method,
                         kr_strings** out);

/* First `count` terms of a named sequence: fibk, kfib, dk (use params.k),
 * c, cprime, cdoubleprime, catalank (params.k), stirling ((2n-1)!!),
 * conjecture (params.r), general (b0, b1, k1, k2), and the table rows
 * pell_1_rplus1, linear, degenerate (params.r). */
KR_API kr_status kr_sequence(kr_context* ctx, const char* name,
                             const kr_seq_params* params, unsigned count,
                             kr_strings** out);

/* Standard partition of a k-regular word over [n]: {annex, base}. */
KR_API kr_status kr_standard_partition(kr_context* ctx, const char* word,
                                       unsigned n, unsigned k,
                                       kr_strings** out);

/* Annex catalog for 2-regular words over [n] avoiding {v:121,123,132,213}. */
KR_API kr_status kr_annexes(kr_context* ctx, unsigned n, kr_strings** out);

/* Graphviz export of the prefix tree (one-element list), n >= 3. */
KR_API kr_status kr_prefix_tree_dot(kr_context* ctx, unsigned n,
                                    kr_strings** out);

/* Cross-check suites. theorem: a, b, c, ss, catalan, stirling, symmetry,
 * table5 or all. */
KR_API kr_status kr_verify(kr_context* ctx, const char* theorem,
                           unsigned n_max, unsigned k_max, kr_report** out);
KR_API kr_status kr_conjecture(kr_context* ctx, unsigned r, unsigned n_max,
                               kr_report** out);
/* id: 2, 3 or 6. check != 0 recounts cells with k*n <= check_symbols. */
KR_API kr_status kr_table(kr_context* ctx, int id, unsigned k_min,
                          unsigned k_max, unsigned n_count, int check,
                          size_t check_symbols, kr_report** out);

KR_API const char* kr_report_title(const kr_report* report);
KR_API const char* kr_report_summary(const kr_report* report);
KR_API int kr_report_passed(const kr_report* report);
KR_API size_t kr_report_row_count(const kr_report* report);
KR_API const char* kr_report_row_label(const kr_report* report, size_t row);
KR_API int kr_report_row_passed(const kr_report* report, size_t row);
KR_API size_t kr_report_field_count(const kr_report* report, size_t row);
KR_API const char* kr_report_field_name(const kr_report* report, size_t row,
                                        size_t field);
KR_API const char* kr_report_field_value(const kr_report* report, size_t row,
                                         size_t field);
KR_API void kr_report_destroy(kr_report* report);

#ifdef __cplusplus
}
#endif

#endif /* KREGULAR_H */
