/* Copyright 2026 The peersel Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface of the peersel shared library.
 *
 * Every fallible call returns a peersel_status. On failure the message of
 * the calling thread's last error is available from peersel_last_error()
 * until the next call on that thread. Strings returned through char** are
 * owned by the caller and released with peersel_string_free. Agents are
 * 0-indexed; agent sets are bitmasks (bit a = agent a), so n ≤ 64.
 */
#ifndef PEERSEL_PEERSEL_H
#define PEERSEL_PEERSEL_H

#include <stddef.h>
#include <stdint.h>

#if defined(PEERSEL_BUILDING_LIBRARY)
#define PEERSEL_API __attribute__((visibility("default")))
#else
#define PEERSEL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum peersel_status {
  PEERSEL_OK = 0,
  PEERSEL_ERR_INVALID_ARGUMENT = 1,
  PEERSEL_ERR_PARSE = 2,
  PEERSEL_ERR_DOMAIN = 3,
  PEERSEL_ERR_BUDGET = 4,
  PEERSEL_ERR_INTERNAL = 5
} peersel_status;

typedef struct peersel_instance peersel_instance;
typedef struct peersel_mechanism peersel_mechanism;

PEERSEL_API const char* peersel_version(void);
PEERSEL_API const char* peersel_last_error(void);
PEERSEL_API void peersel_string_free(char* text);

/* ---- instances --------------------------------------------------------- */

PEERSEL_API peersel_status peersel_instance_parse(const char* text, peersel_instance** out);
PEERSEL_API peersel_status peersel_instance_read(const char* path, peersel_instance** out);
PEERSEL_API void peersel_instance_free(peersel_instance* instance);

/* Canonical instance text. */
PEERSEL_API peersel_status peersel_instance_serialize(const peersel_instance* instance,
                                                      char** out);
PEERSEL_API int peersel_instance_size(const peersel_instance* instance);
/* *present = 0 when the instance carries no needy set. */
PEERSEL_API peersel_status peersel_instance_needy(const peersel_instance* instance,
                                                  int* present, uint64_t* mask);
/* *out = NULL when the instance carries no prior. */
PEERSEL_API peersel_status peersel_instance_q(const peersel_instance* instance, char** out);
PEERSEL_API peersel_status peersel_instance_set_needy(peersel_instance* instance, int present,
                                                      uint64_t mask);
/* q == NULL removes the prior. */
PEERSEL_API peersel_status peersel_instance_set_q(peersel_instance* instance, const char* q);

typedef struct peersel_generator {
  const char* family;      /* complete-friend, complete-enemy, complete-impartial,
                              matching-friends, enemy-block, four-cliques,
                              random-signed, random-balanced */
  int n;                   /* all families except four-cliques */
  const char* side;        /* enemy-block: "left" or "right" */
  int cliques[4];          /* four-cliques */
  const char* p_friend;    /* random-signed, "num/den" */
  const char* p_enemy;     /* random-signed, "num/den" */
  const int* sizes;        /* random-balanced, optional clique sizes */
  size_t sizes_count;
  uint64_t seed;
} peersel_generator;

PEERSEL_API peersel_status peersel_generate(const peersel_generator* spec,
                                            peersel_instance** out);

/* ---- mechanisms -------------------------------------------------------- */

/* name: g1, g2k, g3k, rd, duples, constant. sink < 0 means none; it is
 * required exactly for g2k and g3k. mode: -1 for the mechanism's own mode,
 * 0 needy-only, 1 full type; only the constant mechanism runs in both. The
 * known-network mechanisms copy the network of `network`. */
PEERSEL_API peersel_status peersel_mechanism_create(const char* name, int sink, int mode,
                                                    const peersel_instance* network,
                                                    peersel_mechanism** out);
/* 0 needy-only, 1 full type, -1 on a null handle. */
PEERSEL_API int peersel_mechanism_mode(const peersel_mechanism* mechanism);

typedef struct peersel_message {
  int reporter;
  uint64_t friends; /* zero in needy-only mode */
  uint64_t enemies; /* zero in needy-only mode */
  uint64_t needy;
} peersel_message;

/* Writes probability numerators[i] / denominators[i] for every agent and
 * returns 0, or returns nonzero to signal failure. May be called from one
 * thread at a time only. */
typedef int (*peersel_outcome_fn)(void* user, int n, const peersel_message* messages,
                                  int64_t* numerators, int64_t* denominators);

PEERSEL_API peersel_status peersel_mechanism_external(int full_type, const char* name,
                                                      peersel_outcome_fn fn, void* user,
                                                      peersel_mechanism** out);
PEERSEL_API void peersel_mechanism_free(peersel_mechanism* mechanism);

/* Outcome at the truthful profile of `needy`, one "agent: p" line per agent.
 * decimals < 0 prints exact "num/den". */
PEERSEL_API peersel_status peersel_run(const peersel_mechanism* mechanism,
                                       const peersel_instance* network, uint64_t needy,
                                       int decimals, char** report);

/* Raw outcome: numerators[0..n) over *denominator. */
PEERSEL_API peersel_status peersel_evaluate(const peersel_mechanism* mechanism,
                                            const peersel_instance* network, uint64_t needy,
                                            int64_t* numerators, int64_t* denominator);

/* ---- verification ------------------------------------------------------ */

/* Exhaustive validity over all profiles of the instance's size. */
PEERSEL_API peersel_status peersel_check_validity(const peersel_mechanism* mechanism,
                                                  const peersel_instance* network,
                                                  uint64_t budget, int decimals, int* valid,
                                                  char** report);

typedef struct peersel_dsic_options {
  int exhaustive;
  uint64_t samples;
  uint64_t seed;
  uint64_t budget;            /* 0 selects the default 2^20 */
  const char* friend_weight;  /* both NULL: robust test */
  const char* enemy_weight;
  size_t max_recorded;
} peersel_dsic_options;

PEERSEL_API peersel_status peersel_check_dsic(const peersel_mechanism* mechanism,
                                              const peersel_instance* network,
                                              const peersel_dsic_options* options, int decimals,
                                              int* passed, char** report);

PEERSEL_API peersel_status peersel_check_efficiency(const peersel_mechanism* mechanism,
                                                    const peersel_instance* network,
                                                    int decimals, int* efficient,
                                                    char** report);

/* ---- efficiency -------------------------------------------------------- */

/* *value receives the exact efficiency as "num/den" when value != NULL. */
PEERSEL_API peersel_status peersel_exact_efficiency(const peersel_mechanism* mechanism,
                                                    const peersel_instance* network,
                                                    const char* q, int decimals, char** value,
                                                    char** report);

typedef struct peersel_mc_options {
  uint64_t samples;
  uint64_t seed;
  const char* confidence; /* NULL selects 19/20 */
  int wilson;
} peersel_mc_options;

PEERSEL_API peersel_status peersel_mc_efficiency(const peersel_mechanism* mechanism,
                                                 const peersel_instance* network, const char* q,
                                                 const peersel_mc_options* options,
                                                 int decimals, double* estimate,
                                                 double* half_width, char** report);

/* closed form of the random dictatorship's efficiency, "num/den". */
PEERSEL_API peersel_status peersel_closed_form_rd(const peersel_instance* network,
                                                  const char* q, char** value);

/* mc == NULL compares exactly. table != 0 prints an aligned text table. */
PEERSEL_API peersel_status peersel_compare(const peersel_instance* network, const char* q,
                                           const char* const* names, const int* sinks,
                                           size_t count, const peersel_mc_options* mc,
                                           int table, int decimals, char** report);

/* ---- structure --------------------------------------------------------- */

PEERSEL_API peersel_status peersel_balance(const peersel_instance* network, int* balanced,
                                           char** report);
PEERSEL_API peersel_status peersel_classify(const peersel_instance* network, int* admits,
                                            char** report);

typedef struct peersel_witness_options {
  const char* construction; /* "enemy-block" or "four-cliques" */
  int n;                    /* enemy-block */
  int cliques[4];           /* four-cliques */
  const char* friend_weight; /* both NULL: robust rows */
  const char* enemy_weight;
  int drop_right_efficiency;
  int include_certificate;
} peersel_witness_options;

PEERSEL_API peersel_status peersel_witness(const peersel_witness_options* options,
                                           int* infeasible, int* verified, char** report);

#ifdef __cplusplus
}
#endif

#endif /* PEERSEL_PEERSEL_H */
