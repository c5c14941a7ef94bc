#ifndef QDETECT_H
#define QDETECT_H

/* Generated by cbindgen from crates/ffi; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum QdChannel {
  QD_CHANNEL_CLASSICAL = 0,
  QD_CHANNEL_QUANTUM = 1,
} QdChannel;

typedef enum QdLatticeConfig {
  // Two oblique rays in a plane and an axis.
  QD_LATTICE_CONFIG_OBLIQUE = 0,
  QD_LATTICE_CONFIG_ORTHOGONAL = 1,
} QdLatticeConfig;

// Symbols accepted as evidence of relevance.
typedef enum QdRegion {
  QD_REGION_EMPTY = 0,
  QD_REGION_ABSENT = 1,
  QD_REGION_PRESENT = 2,
  QD_REGION_BOTH = 3,
} QdRegion;

typedef enum QdReportStatus {
  QD_REPORT_STATUS_REGULAR = 0,
  // Prior is 0 or 1: both errors are 0 and `has_basis` is false.
  QD_REPORT_STATUS_PRIOR_BOUNDARY = 1,
  // Indistinguishable states at threshold 1: the detector rejects.
  QD_REPORT_STATUS_DEGENERATE_STATES = 2,
} QdReportStatus;

// Result of every fallible call. `QD_STATUS_OK` is zero.
typedef enum QdStatus {
  QD_STATUS_OK = 0,
  QD_STATUS_INVALID_PROBABILITY = 1,
  QD_STATUS_INVALID_ARGUMENT = 2,
  QD_STATUS_DEGENERATE_STATES = 3,
  QD_STATUS_PRIOR_BOUNDARY = 4,
  QD_STATUS_DIMENSION_MISMATCH = 5,
  QD_STATUS_EMPTY_STRATUM = 6,
  QD_STATUS_DEGENERATE_PROBABILITY = 7,
  QD_STATUS_PARSE = 8,
  QD_STATUS_DUPLICATE_DOC_ID = 9,
  QD_STATUS_DUPLICATE_JUDGMENT = 10,
  QD_STATUS_UNKNOWN_TOPIC = 11,
  QD_STATUS_IO = 12,
  QD_STATUS_NULL_POINTER = 13,
  QD_STATUS_INVALID_UTF8 = 14,
  QD_STATUS_PANIC = 15,
} QdStatus;

// Ingested documents, topics and judgments. Create with
// [`qd_collection_open`], release with [`qd_collection_free`].
typedef struct QdCollection QdCollection;

typedef struct QdVector2 {
  double present;
  double absent;
} QdVector2;

// Classical and quantum detection of one term under one prior.
typedef struct QdReport {
  double xi;
  double lambda;
  double gamma;
  double theta;
  double fidelity;
  enum QdRegion region;
  double p_false_alarm;
  double p_detection;
  double p_error;
  double p_correct;
  double q_false_alarm;
  double q_detection;
  double q_error;
  double q_correct;
  double q_error_measured;
  struct QdVector2 m0;
  struct QdVector2 m1;
  bool has_basis;
  // Valid only when `has_basis` is true.
  struct QdVector2 mu0;
  struct QdVector2 mu1;
  double eigenvalue1;
  enum QdReportStatus status;
} QdReport;

typedef struct QdSimConfig {
  double p1_m0;
  double p1_m1;
  double xi;
  uint64_t trials;
  uint64_t seed;
  // `NAN` selects the Bayes threshold.
  double lambda;
} QdSimConfig;

typedef struct QdSimResult {
  uint64_t trials;
  uint64_t errors;
  double empirical_error;
  double analytic_error;
  double standard_error;
  double z_score;
} QdSimResult;

typedef struct QdDistributivity {
  size_t left_rank;
  size_t right_rank;
  bool equal;
} QdDistributivity;

// Counts and estimated presence probabilities of one title term.
typedef struct QdTermStats {
  uint64_t n_rel;
  uint64_t total_rel;
  uint64_t n_nonrel;
  uint64_t total_nonrel;
  uint64_t collection_df;
  uint64_t collection_size;
  double p1_m0;
  double p1_m1;
  // True when a judged stratum was empty and the estimate fell back to
  // pseudo-relevance.
  bool pseudo_relevance;
} QdTermStats;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string.
const char *qd_version(void);

// Detection report for presence probabilities `p1_m0` (non-relevant) and
// `p1_m1` (relevant) under prior `xi` of non-relevance. Pass `NAN` as
// `lambda` for the Bayes threshold `xi / (1 - xi)`.
//
// # Safety
// `out` must be null or valid for writing one `QdReport`.
enum QdStatus qd_detect(double p1_m0, double p1_m1, double xi, double lambda, struct QdReport *out);

// Fidelity of the two embedded states.
//
// # Safety
// `out` must be null or valid for writing one `double`.
enum QdStatus qd_fidelity(double p1_m0, double p1_m1, double *out);

// Minimum quantum error for prior `xi` and fidelity `fid`.
//
// # Safety
// `out` must be null or valid for writing one `double`.
enum QdStatus qd_quantum_error(double xi, double fid, double *out);

// Presence probabilities from judged counts.
//
// # Safety
// `p1_m0` and `p1_m1` must be null or valid for writing one `double` each.
enum QdStatus qd_relative_frequency(uint64_t n_rel,
                                    uint64_t total_rel,
                                    uint64_t n_nonrel,
                                    uint64_t total_nonrel,
                                    double *p1_m0,
                                    double *p1_m1);

// Presence probabilities without judgments, from document frequency `df`
// in a collection of `size` documents.
//
// # Safety
// `p1_m0` and `p1_m1` must be null or valid for writing one `double` each.
enum QdStatus qd_pseudo_relevance(uint64_t df, uint64_t size, double *p1_m0, double *p1_m1);

// Normalization constant of the saturation density for presence
// probability `p` on `[0, n_max]`.
//
// # Safety
// `out` must be null or valid for writing one `double`.
enum QdStatus qd_bm25_norm(double p, double n_max, double *out);

// Mass of the saturation density on `[lo, hi]`.
//
// # Safety
// `out` must be null or valid for writing one `double`.
enum QdStatus qd_bm25_mass(double p, double n_max, double lo, double hi, double *out);

// Monte Carlo run of one channel. Deterministic for a fixed configuration.
//
// # Safety
// `config` must be null or point to a valid `QdSimConfig`; `out` must be
// null or valid for writing one `QdSimResult`.
enum QdStatus qd_simulate(const struct QdSimConfig *config,
                          enum QdChannel channel,
                          struct QdSimResult *out);

// Both sides of `a ^ (b v c) = (a ^ b) v (a ^ c)` for a built-in configuration.
//
// # Safety
// `out` must be null or valid for writing one `QdDistributivity`.
enum QdStatus qd_distributivity(enum QdLatticeConfig config, struct QdDistributivity *out);

// Reads a JSONL document file, a tab-separated topic file and a qrels file.
//
// # Safety
// Paths must be null or NUL-terminated UTF-8 strings; `out` must be null or
// valid for writing one pointer.
enum QdStatus qd_collection_open(const char *docs,
                                 const char *topics,
                                 const char *qrels,
                                 struct QdCollection **out);

// Releases a handle. Null is ignored.
//
// # Safety
// `collection` must be null or a handle from [`qd_collection_open`] that has
// not been freed.
void qd_collection_free(struct QdCollection *collection);

// Number of documents.
//
// # Safety
// `collection` must be null or a live handle; `out` must be null or valid
// for writing one `size_t`.
enum QdStatus qd_collection_size(const struct QdCollection *collection, size_t *out);

// Mean over the topic's title terms of the relevant-document presence
// probability.
//
// # Safety
// `collection` must be null or a live handle; `topic` null or a
// NUL-terminated string; `out` null or valid for writing one `double`.
enum QdStatus qd_collection_avg_relative_frequency(const struct QdCollection *collection,
                                                   const char *topic,
                                                   double *out);

// Counts and estimate for one (topic, term).
//
// # Safety
// `collection` must be null or a live handle; `topic` and `term` null or
// NUL-terminated strings; `out` null or valid for writing one `QdTermStats`.
enum QdStatus qd_collection_term_stats(const struct QdCollection *collection,
                                       const char *topic,
                                       const char *term,
                                       struct QdTermStats *out);

// Message of the most recent failed call on this thread, or null if none
// has failed.
//
// The pointer stays valid until the next failing call on the same thread.
const char *qd_last_error_message(void);

// Static, human-readable name of a status code.
const char *qd_status_name(enum QdStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QDETECT_H */
