/* Copyright (c) 2026 The folkrec authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * folkrec - folksonomy tag recommendation library.
 *
 * C API over the folkrec core: opaque handles, integer status codes, and
 * explicit free functions. Every function returning folkrec_status leaves
 * a human-readable message in folkrec_last_error() on failure. Handles
 * are immutable once created and safe to share across threads; creation
 * and destruction are not synchronized.
 */

#ifndef FOLKREC_H
#define FOLKREC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef FOLKREC_API
#if defined(_WIN32)
#define FOLKREC_API
#else
#define FOLKREC_API __attribute__((visibility("default")))
#endif
#endif

typedef enum folkrec_status {
    FOLKREC_OK = 0,
    FOLKREC_ERR_INVALID_ARGUMENT = 1,
    FOLKREC_ERR_EMPTY_INPUT = 2,
    FOLKREC_ERR_UNKNOWN_ENTITY = 3,
    FOLKREC_ERR_COLD_USER = 4,
    FOLKREC_ERR_IO = 5,
    FOLKREC_ERR_BAD_STATE = 6,
    FOLKREC_ERR_INTERNAL = 7
} folkrec_status;

/* Message for the most recent failing call on this thread. */
FOLKREC_API const char* folkrec_last_error(void);

typedef struct folkrec_posts folkrec_posts;
typedef struct folkrec_folksonomy folkrec_folksonomy;
typedef struct folkrec_split folkrec_split;
typedef struct folkrec_topic_model folkrec_topic_model;
typedef struct folkrec_ranking folkrec_ranking;
typedef struct folkrec_reports folkrec_reports;

typedef struct folkrec_stats {
    uint64_t posts;
    uint64_t users;
    uint64_t resources;
    uint64_t tags;
    uint64_t assignments;
} folkrec_stats;

typedef struct folkrec_preprocess_config {
    const char* const* blacklist; /* may be NULL when blacklist_len == 0 */
    size_t blacklist_len;
    int lowercase;               /* nonzero: decapitalize tags */
    double user_sample_fraction; /* in (0, 1]; 1 keeps everyone */
    uint64_t sample_seed;
} folkrec_preprocess_config;

FOLKREC_API void folkrec_preprocess_config_init(folkrec_preprocess_config* cfg);

typedef struct folkrec_lda_config {
    uint32_t num_topics; /* Z */
    double alpha;        /* <= 0 selects the 50/Z default */
    double eta;
    uint32_t iterations;
    uint64_t seed;
} folkrec_lda_config;

FOLKREC_API void folkrec_lda_config_init(folkrec_lda_config* cfg);

typedef struct folkrec_params {
    uint32_t k;              /* list length for single queries */
    double beta;             /* mix weight, personal vs. imitation */
    double decay;            /* BLL power-law exponent d */
    uint32_t cf_neighbors;   /* CF neighborhood size */
    double girptm_mu;        /* exponential decay rate, per second */
    double damping;          /* PageRank damping */
    double tolerance;        /* PageRank L1 stop threshold */
    uint32_t max_iterations; /* PageRank sweep cap */
    uint32_t threads;        /* evaluation worker count */
    int strict_k_precision;  /* nonzero: precision divides by k, not min(k,|rec|) */
} folkrec_params;

FOLKREC_API void folkrec_params_init(folkrec_params* params);

/* ---- posts ---------------------------------------------------------- */

/* Canonical post TSV, one row per post, no header:
 *   user<TAB>resource<TAB>unix_timestamp<TAB>tag1,tag2,...
 * Malformed rows are skipped and counted. Fails with
 * FOLKREC_ERR_EMPTY_INPUT when no row parses. */
FOLKREC_API folkrec_status folkrec_posts_parse_tsv(const char* path, folkrec_posts** out);

FOLKREC_API uint64_t folkrec_posts_count(const folkrec_posts* posts);
FOLKREC_API uint64_t folkrec_posts_skipped(const folkrec_posts* posts);

/* Tag cleanup (lowercase + blacklist) and seeded user sampling. */
FOLKREC_API folkrec_status folkrec_posts_preprocess(const folkrec_posts* posts,
                                                    const folkrec_preprocess_config* cfg,
                                                    folkrec_posts** out);

FOLKREC_API folkrec_status folkrec_posts_write_tsv(const folkrec_posts* posts,
                                                   const char* path);

FOLKREC_API void folkrec_posts_free(folkrec_posts* posts);

/* ---- folksonomy ------------------------------------------------------ */

/* Interns entities and builds all count indices. Duplicate
 * (user, resource) posts merge; the latest timestamp wins. */
FOLKREC_API folkrec_status folkrec_folksonomy_build(const folkrec_posts* posts,
                                                    folkrec_folksonomy** out);

FOLKREC_API folkrec_status folkrec_folksonomy_stats(const folkrec_folksonomy* f,
                                                    folkrec_stats* out);

/* Canonical TSV of the deduplicated posts, in storage order. */
FOLKREC_API folkrec_status folkrec_folksonomy_write_tsv(const folkrec_folksonomy* f,
                                                        const char* path);

FOLKREC_API void folkrec_folksonomy_free(folkrec_folksonomy* f);

/* ---- train/test split ------------------------------------------------ */

/* Moves each multi-post user's most recent post into the test set.
 * Evaluation is restricted to users with at least min_posts_for_eval
 * posts before splitting. */
FOLKREC_API folkrec_status folkrec_split_train_test(const folkrec_folksonomy* f,
                                                    uint32_t min_posts_for_eval,
                                                    folkrec_split** out);

/* Borrowed view of the train side; valid while the split lives. Do not
 * pass it to folkrec_folksonomy_free. */
FOLKREC_API const folkrec_folksonomy* folkrec_split_train(const folkrec_split* split);

FOLKREC_API uint64_t folkrec_split_test_count(const folkrec_split* split);
FOLKREC_API uint64_t folkrec_split_eval_user_count(const folkrec_split* split);

FOLKREC_API void folkrec_split_free(folkrec_split* split);

/* ---- topic model ------------------------------------------------------ */

/* Collapsed Gibbs LDA over the resource-tag documents of the given
 * folksonomy. Deterministic for a fixed config. */
FOLKREC_API folkrec_status folkrec_lda_train(const folkrec_folksonomy* train,
                                             const folkrec_lda_config* cfg,
                                             folkrec_topic_model** out);

FOLKREC_API folkrec_status folkrec_topic_model_save(const folkrec_topic_model* model,
                                                    const char* path);
FOLKREC_API folkrec_status folkrec_topic_model_load(const char* path,
                                                    folkrec_topic_model** out);

FOLKREC_API uint32_t folkrec_topic_model_topics(const folkrec_topic_model* model);
FOLKREC_API uint64_t folkrec_topic_model_resources(const folkrec_topic_model* model);

FOLKREC_API void folkrec_topic_model_free(folkrec_topic_model* model);

/* ---- single query ------------------------------------------------------ */

/* Algorithm names: mp, mp_u, mp_r, mp_u_r, cf, folkrank, girptm, bll_c,
 * 3l, 3lt, 3lt_mpr. model may be NULL for algorithms that do not read
 * topics; the 3L family fails with FOLKREC_ERR_BAD_STATE without one.
 * Unknown user/resource labels degrade to each algorithm's fallback. */
FOLKREC_API folkrec_status folkrec_recommend(const folkrec_folksonomy* train,
                                             const folkrec_topic_model* model,
                                             const char* algorithm, const char* user,
                                             const char* resource,
                                             const folkrec_params* params,
                                             folkrec_ranking** out);

FOLKREC_API uint32_t folkrec_ranking_size(const folkrec_ranking* ranking);
FOLKREC_API const char* folkrec_ranking_tag(const folkrec_ranking* ranking, uint32_t i);
FOLKREC_API double folkrec_ranking_score(const folkrec_ranking* ranking, uint32_t i);
FOLKREC_API void folkrec_ranking_free(folkrec_ranking* ranking);

/* ---- benchmark --------------------------------------------------------- */

/* Runs the time-aware protocol: for every post-filtered test post,
 * compare the algorithm's top-10 on (user, resource) against the test
 * tags; report mean precision/recall at k = 1..10 plus f1@5, mrr, map and
 * ndcg@10. When output_dir is non-NULL, writes summary.csv and one
 * queries_<algorithm>.tsv per algorithm into it. */
FOLKREC_API folkrec_status folkrec_evaluate(const folkrec_split* split,
                                            const folkrec_topic_model* model,
                                            const char* const* algorithms,
                                            uint32_t algorithm_count,
                                            const folkrec_params* params,
                                            const char* output_dir, folkrec_reports** out);

FOLKREC_API uint32_t folkrec_reports_count(const folkrec_reports* reports);
FOLKREC_API const char* folkrec_reports_algorithm(const folkrec_reports* reports, uint32_t i);
/* k in 1..10. */
FOLKREC_API double folkrec_reports_precision_at(const folkrec_reports* reports, uint32_t i,
                                                uint32_t k);
FOLKREC_API double folkrec_reports_recall_at(const folkrec_reports* reports, uint32_t i,
                                             uint32_t k);
/* name: "f1@5", "mrr", "map" or "ndcg@10". NaN for unknown names. */
FOLKREC_API double folkrec_reports_metric(const folkrec_reports* reports, uint32_t i,
                                          const char* name);
FOLKREC_API uint64_t folkrec_reports_user_count(const folkrec_reports* reports, uint32_t i);
FOLKREC_API uint64_t folkrec_reports_failures(const folkrec_reports* reports, uint32_t i);
FOLKREC_API void folkrec_reports_free(folkrec_reports* reports);

/* ---- misc --------------------------------------------------------------- */

/* FNV-1a content digest, 16 hex chars plus NUL, for run manifests. */
FOLKREC_API folkrec_status folkrec_file_digest(const char* path, char out[17]);

#ifdef __cplusplus
}
#endif

#endif /* FOLKREC_H */
