// Copyright (c) 2026 The folkrec authors
// SPDX-License-Identifier: Apache-2.0
//
// Batch driver: ingest -> topics -> evaluate, all through the public C
// API of libfolkrec. Every run writes a manifest (effective config,
// seeds, input digests) so experiments can be reproduced exactly.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "folkrec/folkrec.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string config_path;
    std::string dataset;
    std::string format = "tsv";
    std::string blacklist_path;
    bool no_lowercase = false;
    double sample_fraction = 1.0;
    uint64_t sample_seed = 0;
    uint32_t min_posts = 20;

    std::string input;
    std::string model_path;
    std::string model_out;
    uint32_t lda_topics = 1000;
    double lda_alpha = 0.0;
    double lda_eta = 0.01;
    uint32_t lda_iterations = 500;
    uint64_t lda_seed = 0;
    bool lda_on_full = false;

    std::string algorithms = "mp,mp_u,mp_r,mp_u_r,cf,folkrank,girptm,bll_c,3l,3lt,3lt_mpr";
    uint32_t k = 10;
    double beta = 0.5;
    double decay = 0.5;
    uint32_t cf_neighbors = 20;
    double girptm_mu = 1e-6;
    double damping = 0.7;
    double tolerance = 1e-8;
    uint32_t max_iterations = 200;
    uint32_t threads = 1;
    bool strict_precision = false;

    std::string output_dir;
};

bool parse_bool(const std::string& v, bool& out) {
    if (v == "true" || v == "1" || v == "yes") { out = true; return true; }
    if (v == "false" || v == "0" || v == "no") { out = false; return true; }
    return false;
}

bool parse_double(const std::string& v, double& out) {
    try {
        size_t pos = 0;
        out = std::stod(v, &pos);
        return pos == v.size();
    } catch (...) {
        return false;
    }
}

bool parse_u32(const std::string& v, uint32_t& out) {
    try {
        size_t pos = 0;
        unsigned long parsed = std::stoul(v, &pos);
        if (pos != v.size() || parsed > UINT32_MAX) return false;
        out = static_cast<uint32_t>(parsed);
        return true;
    } catch (...) {
        return false;
    }
}

bool parse_u64(const std::string& v, uint64_t& out) {
    try {
        size_t pos = 0;
        out = std::stoull(v, &pos);
        return pos == v.size();
    } catch (...) {
        return false;
    }
}

// Flat key=value config file; keys are the long flag names without the
// leading dashes. Values loaded here act as defaults, so flags given on
// the command line override them.
int apply_config_file(const std::string& path, Options& opt) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open config file: " << path << "\n";
        return kExitUsage;
    }
    const std::map<std::string, std::function<bool(const std::string&)>> setters = {
        {"dataset", [&](const std::string& v) { opt.dataset = v; return true; }},
        {"format", [&](const std::string& v) { opt.format = v; return true; }},
        {"blacklist", [&](const std::string& v) { opt.blacklist_path = v; return true; }},
        {"no-lowercase", [&](const std::string& v) { return parse_bool(v, opt.no_lowercase); }},
        {"sample-fraction",
         [&](const std::string& v) { return parse_double(v, opt.sample_fraction); }},
        {"sample-seed", [&](const std::string& v) { return parse_u64(v, opt.sample_seed); }},
        {"min-posts", [&](const std::string& v) { return parse_u32(v, opt.min_posts); }},
        {"input", [&](const std::string& v) { opt.input = v; return true; }},
        {"model", [&](const std::string& v) { opt.model_path = v; return true; }},
        {"model-out", [&](const std::string& v) { opt.model_out = v; return true; }},
        {"lda-topics", [&](const std::string& v) { return parse_u32(v, opt.lda_topics); }},
        {"lda-alpha", [&](const std::string& v) { return parse_double(v, opt.lda_alpha); }},
        {"lda-eta", [&](const std::string& v) { return parse_double(v, opt.lda_eta); }},
        {"lda-iterations",
         [&](const std::string& v) { return parse_u32(v, opt.lda_iterations); }},
        {"lda-seed", [&](const std::string& v) { return parse_u64(v, opt.lda_seed); }},
        {"lda-on-full", [&](const std::string& v) { return parse_bool(v, opt.lda_on_full); }},
        {"algorithms", [&](const std::string& v) { opt.algorithms = v; return true; }},
        {"k", [&](const std::string& v) { return parse_u32(v, opt.k); }},
        {"beta", [&](const std::string& v) { return parse_double(v, opt.beta); }},
        {"decay", [&](const std::string& v) { return parse_double(v, opt.decay); }},
        {"cf-neighbors", [&](const std::string& v) { return parse_u32(v, opt.cf_neighbors); }},
        {"girptm-mu", [&](const std::string& v) { return parse_double(v, opt.girptm_mu); }},
        {"damping", [&](const std::string& v) { return parse_double(v, opt.damping); }},
        {"tolerance", [&](const std::string& v) { return parse_double(v, opt.tolerance); }},
        {"max-iterations",
         [&](const std::string& v) { return parse_u32(v, opt.max_iterations); }},
        {"threads", [&](const std::string& v) { return parse_u32(v, opt.threads); }},
        {"strict-precision",
         [&](const std::string& v) { return parse_bool(v, opt.strict_precision); }},
        {"output-dir", [&](const std::string& v) { opt.output_dir = v; return true; }},
    };

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            std::cerr << "error: " << path << ":" << line_no << ": expected key=value\n";
            return kExitUsage;
        }
        const std::string key = line.substr(0, eq);
        const std::string value = line.substr(eq + 1);
        auto it = setters.find(key);
        if (it == setters.end()) {
            std::cerr << "error: " << path << ":" << line_no << ": unknown key: " << key
                      << "\n";
            return kExitUsage;
        }
        if (!it->second(value)) {
            std::cerr << "error: " << path << ":" << line_no << ": bad value for " << key
                      << ": " << value << "\n";
            return kExitUsage;
        }
    }
    return kExitOk;
}

int fail(folkrec_status status) {
    std::cerr << "error: " << folkrec_last_error() << "\n";
    switch (status) {
    case FOLKREC_ERR_INVALID_ARGUMENT:
    case FOLKREC_ERR_BAD_STATE:
        return kExitUsage;
    default:
        return kExitRuntime;
    }
}

int missing_input(const std::string& path) {
    std::cerr << "error: input file not found: " << path << "\n";
    return kExitUsage;
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    size_t start = 0;
    while (start <= csv.size()) {
        size_t end = csv.find(',', start);
        std::string piece = csv.substr(start, end == std::string::npos ? end : end - start);
        if (!piece.empty()) out.push_back(piece);
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return out;
}

std::vector<std::string> load_blacklist(const std::string& path) {
    std::vector<std::string> tags;
    if (path.empty()) return {"no-tag", "bibtex-import"};
    std::ifstream in(path);
    if (!in) return tags; // caller checked existence already
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) tags.push_back(line);
    }
    return tags;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string digest_or_dash(const std::string& path) {
    char buf[17];
    if (folkrec_file_digest(path.c_str(), buf) == FOLKREC_OK) return buf;
    return "-";
}

void write_manifest(const std::filesystem::path& path,
                    const std::map<std::string, std::string>& entries) {
    std::ofstream out(path);
    for (const auto& [key, value] : entries) out << key << '=' << value << '\n';
}

folkrec_params make_params(const Options& opt) {
    folkrec_params params;
    folkrec_params_init(&params);
    params.k = opt.k;
    params.beta = opt.beta;
    params.decay = opt.decay;
    params.cf_neighbors = opt.cf_neighbors;
    params.girptm_mu = opt.girptm_mu;
    params.damping = opt.damping;
    params.tolerance = opt.tolerance;
    params.max_iterations = opt.max_iterations;
    params.threads = opt.threads;
    params.strict_k_precision = opt.strict_precision ? 1 : 0;
    return params;
}

using PostsHandle = std::unique_ptr<folkrec_posts, decltype(&folkrec_posts_free)>;
using FolksonomyHandle =
    std::unique_ptr<folkrec_folksonomy, decltype(&folkrec_folksonomy_free)>;
using SplitHandle = std::unique_ptr<folkrec_split, decltype(&folkrec_split_free)>;
using ModelHandle = std::unique_ptr<folkrec_topic_model, decltype(&folkrec_topic_model_free)>;
using ReportsHandle = std::unique_ptr<folkrec_reports, decltype(&folkrec_reports_free)>;

int run_ingest(const Options& opt) {
    if (opt.format != "tsv") {
        std::cerr << "error: unsupported format: " << opt.format << "\n";
        return kExitUsage;
    }
    if (!std::filesystem::exists(opt.dataset)) return missing_input(opt.dataset);
    if (!opt.blacklist_path.empty() && !std::filesystem::exists(opt.blacklist_path))
        return missing_input(opt.blacklist_path);
    std::filesystem::create_directories(opt.output_dir);

    folkrec_posts* raw = nullptr;
    folkrec_status status = folkrec_posts_parse_tsv(opt.dataset.c_str(), &raw);
    if (status != FOLKREC_OK) return fail(status);
    PostsHandle parsed(raw, folkrec_posts_free);

    const std::vector<std::string> blacklist = load_blacklist(opt.blacklist_path);
    std::vector<const char*> blacklist_ptrs;
    blacklist_ptrs.reserve(blacklist.size());
    for (const auto& t : blacklist) blacklist_ptrs.push_back(t.c_str());

    folkrec_preprocess_config cfg;
    folkrec_preprocess_config_init(&cfg);
    cfg.blacklist = blacklist_ptrs.data();
    cfg.blacklist_len = blacklist_ptrs.size();
    cfg.lowercase = opt.no_lowercase ? 0 : 1;
    cfg.user_sample_fraction = opt.sample_fraction;
    cfg.sample_seed = opt.sample_seed;

    folkrec_posts* clean = nullptr;
    status = folkrec_posts_preprocess(parsed.get(), &cfg, &clean);
    if (status != FOLKREC_OK) return fail(status);
    PostsHandle preprocessed(clean, folkrec_posts_free);

    folkrec_folksonomy* built = nullptr;
    status = folkrec_folksonomy_build(preprocessed.get(), &built);
    if (status != FOLKREC_OK) return fail(status);
    FolksonomyHandle folksonomy(built, folkrec_folksonomy_free);

    const std::filesystem::path out_dir(opt.output_dir);
    const std::filesystem::path posts_path = out_dir / "posts.tsv";
    status = folkrec_folksonomy_write_tsv(folksonomy.get(), posts_path.string().c_str());
    if (status != FOLKREC_OK) return fail(status);

    folkrec_stats stats{};
    folkrec_folksonomy_stats(folksonomy.get(), &stats);
    {
        std::ofstream out(out_dir / "stats.txt");
        out << "posts=" << stats.posts << "\nusers=" << stats.users
            << "\nresources=" << stats.resources << "\ntags=" << stats.tags
            << "\nassignments=" << stats.assignments << "\n";
    }
    std::printf("parsed=%llu skipped=%llu\n",
                static_cast<unsigned long long>(folkrec_posts_count(parsed.get())),
                static_cast<unsigned long long>(folkrec_posts_skipped(parsed.get())));
    std::printf("posts=%llu users=%llu resources=%llu tags=%llu assignments=%llu\n",
                static_cast<unsigned long long>(stats.posts),
                static_cast<unsigned long long>(stats.users),
                static_cast<unsigned long long>(stats.resources),
                static_cast<unsigned long long>(stats.tags),
                static_cast<unsigned long long>(stats.assignments));

    write_manifest(out_dir / "manifest-ingest.txt",
                   {{"command", "ingest"},
                    {"dataset", opt.dataset},
                    {"dataset_digest", digest_or_dash(opt.dataset)},
                    {"format", opt.format},
                    {"blacklist", opt.blacklist_path.empty() ? "(default)" : opt.blacklist_path},
                    {"blacklist_digest",
                     opt.blacklist_path.empty() ? "-" : digest_or_dash(opt.blacklist_path)},
                    {"lowercase", opt.no_lowercase ? "false" : "true"},
                    {"sample_fraction", fmt_double(opt.sample_fraction)},
                    {"sample_seed", std::to_string(opt.sample_seed)},
                    {"output_posts", posts_path.string()},
                    {"output_posts_digest", digest_or_dash(posts_path.string())}});
    return kExitOk;
}

// Loads the canonical TSV and splits; train is borrowed from the split.
int load_split(const Options& opt, SplitHandle& split_out) {
    if (!std::filesystem::exists(opt.input)) return missing_input(opt.input);

    folkrec_posts* raw = nullptr;
    folkrec_status status = folkrec_posts_parse_tsv(opt.input.c_str(), &raw);
    if (status != FOLKREC_OK) return fail(status);
    PostsHandle posts(raw, folkrec_posts_free);

    folkrec_folksonomy* built = nullptr;
    status = folkrec_folksonomy_build(posts.get(), &built);
    if (status != FOLKREC_OK) return fail(status);
    FolksonomyHandle folksonomy(built, folkrec_folksonomy_free);

    folkrec_split* split = nullptr;
    status = folkrec_split_train_test(folksonomy.get(), opt.min_posts, &split);
    if (status != FOLKREC_OK) return fail(status);
    split_out = SplitHandle(split, folkrec_split_free);
    return kExitOk;
}

int run_topics(const Options& opt) {
    SplitHandle split(nullptr, folkrec_split_free);
    FolksonomyHandle full(nullptr, folkrec_folksonomy_free);
    const folkrec_folksonomy* train = nullptr;

    if (opt.lda_on_full) {
        if (!std::filesystem::exists(opt.input)) return missing_input(opt.input);
        folkrec_posts* raw = nullptr;
        folkrec_status status = folkrec_posts_parse_tsv(opt.input.c_str(), &raw);
        if (status != FOLKREC_OK) return fail(status);
        PostsHandle posts(raw, folkrec_posts_free);
        folkrec_folksonomy* built = nullptr;
        status = folkrec_folksonomy_build(posts.get(), &built);
        if (status != FOLKREC_OK) return fail(status);
        full = FolksonomyHandle(built, folkrec_folksonomy_free);
        train = full.get();
    } else {
        // Default protocol: topics come from the train side only, so the
        // cue never sees test tags.
        int rc = load_split(opt, split);
        if (rc != kExitOk) return rc;
        train = folkrec_split_train(split.get());
    }

    folkrec_lda_config cfg;
    folkrec_lda_config_init(&cfg);
    cfg.num_topics = opt.lda_topics;
    cfg.alpha = opt.lda_alpha;
    cfg.eta = opt.lda_eta;
    cfg.iterations = opt.lda_iterations;
    cfg.seed = opt.lda_seed;

    folkrec_topic_model* model = nullptr;
    folkrec_status status = folkrec_lda_train(train, &cfg, &model);
    if (status != FOLKREC_OK) return fail(status);
    ModelHandle handle(model, folkrec_topic_model_free);

    std::filesystem::create_directories(opt.output_dir);
    const std::filesystem::path out_dir(opt.output_dir);
    const std::filesystem::path model_path =
        opt.model_out.empty() ? out_dir / "topics.model" : std::filesystem::path(opt.model_out);
    if (model_path.has_parent_path())
        std::filesystem::create_directories(model_path.parent_path());
    status = folkrec_topic_model_save(handle.get(), model_path.string().c_str());
    if (status != FOLKREC_OK) return fail(status);

    std::printf("topics=%u iterations=%u seed=%llu resources=%llu model=%s\n", opt.lda_topics,
                opt.lda_iterations, static_cast<unsigned long long>(opt.lda_seed),
                static_cast<unsigned long long>(folkrec_topic_model_resources(handle.get())),
                model_path.string().c_str());

    write_manifest(out_dir / "manifest-topics.txt",
                   {{"command", "topics"},
                    {"input", opt.input},
                    {"input_digest", digest_or_dash(opt.input)},
                    {"min_posts", std::to_string(opt.min_posts)},
                    {"lda_topics", std::to_string(opt.lda_topics)},
                    {"lda_alpha", fmt_double(opt.lda_alpha)},
                    {"lda_eta", fmt_double(opt.lda_eta)},
                    {"lda_iterations", std::to_string(opt.lda_iterations)},
                    {"lda_seed", std::to_string(opt.lda_seed)},
                    {"lda_on_full", opt.lda_on_full ? "true" : "false"},
                    {"model", model_path.string()},
                    {"model_digest", digest_or_dash(model_path.string())}});
    return kExitOk;
}

int run_evaluate(const Options& opt) {
    const std::vector<std::string> algorithm_names = split_list(opt.algorithms);
    if (algorithm_names.empty()) {
        std::cerr << "error: no algorithms selected\n";
        return kExitUsage;
    }

    SplitHandle split(nullptr, folkrec_split_free);
    int rc = load_split(opt, split);
    if (rc != kExitOk) return rc;

    ModelHandle model(nullptr, folkrec_topic_model_free);
    if (!opt.model_path.empty()) {
        if (!std::filesystem::exists(opt.model_path)) return missing_input(opt.model_path);
        folkrec_topic_model* loaded = nullptr;
        folkrec_status status = folkrec_topic_model_load(opt.model_path.c_str(), &loaded);
        if (status != FOLKREC_OK) return fail(status);
        model = ModelHandle(loaded, folkrec_topic_model_free);
    }

    std::vector<const char*> names;
    names.reserve(algorithm_names.size());
    for (const auto& n : algorithm_names) names.push_back(n.c_str());

    folkrec_params params = make_params(opt);
    std::filesystem::create_directories(opt.output_dir);

    folkrec_reports* reports = nullptr;
    folkrec_status status =
        folkrec_evaluate(split.get(), model.get(), names.data(),
                         static_cast<uint32_t>(names.size()), &params,
                         opt.output_dir.c_str(), &reports);
    if (status != FOLKREC_OK) return fail(status);
    ReportsHandle handle(reports, folkrec_reports_free);

    // Per-k precision and recall table, one algorithm per block.
    std::printf("%-14s %-6s", "algorithm", "metric");
    for (uint32_t k = 1; k <= 10; ++k) std::printf("    k=%-2u", k);
    std::printf("\n");
    for (uint32_t i = 0; i < folkrec_reports_count(handle.get()); ++i) {
        std::printf("%-14s %-6s", folkrec_reports_algorithm(handle.get(), i), "prec");
        for (uint32_t k = 1; k <= 10; ++k)
            std::printf("  %.4f", folkrec_reports_precision_at(handle.get(), i, k));
        std::printf("\n%-14s %-6s", "", "recall");
        for (uint32_t k = 1; k <= 10; ++k)
            std::printf("  %.4f", folkrec_reports_recall_at(handle.get(), i, k));
        std::printf("   users=%llu failures=%llu f1@5=%.4f mrr=%.4f map=%.4f ndcg@10=%.4f\n",
                    static_cast<unsigned long long>(
                        folkrec_reports_user_count(handle.get(), i)),
                    static_cast<unsigned long long>(folkrec_reports_failures(handle.get(), i)),
                    folkrec_reports_metric(handle.get(), i, "f1@5"),
                    folkrec_reports_metric(handle.get(), i, "mrr"),
                    folkrec_reports_metric(handle.get(), i, "map"),
                    folkrec_reports_metric(handle.get(), i, "ndcg@10"));
    }

    write_manifest(std::filesystem::path(opt.output_dir) / "manifest-evaluate.txt",
                   {{"command", "evaluate"},
                    {"input", opt.input},
                    {"input_digest", digest_or_dash(opt.input)},
                    {"model", opt.model_path.empty() ? "-" : opt.model_path},
                    {"model_digest",
                     opt.model_path.empty() ? "-" : digest_or_dash(opt.model_path)},
                    {"algorithms", opt.algorithms},
                    {"min_posts", std::to_string(opt.min_posts)},
                    {"k", std::to_string(opt.k)},
                    {"beta", fmt_double(opt.beta)},
                    {"decay", fmt_double(opt.decay)},
                    {"cf_neighbors", std::to_string(opt.cf_neighbors)},
                    {"girptm_mu", fmt_double(opt.girptm_mu)},
                    {"damping", fmt_double(opt.damping)},
                    {"tolerance", fmt_double(opt.tolerance)},
                    {"max_iterations", std::to_string(opt.max_iterations)},
                    {"threads", std::to_string(opt.threads)},
                    {"strict_precision", opt.strict_precision ? "true" : "false"}});
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"folkrec: folksonomy tag recommendation benchmark driver"};
    app.require_subcommand(1);
    Options opt;

    // The config file is applied before CLI11 assigns flag values, so
    // every flag given on the command line overrides its config entry.
    for (int i = 2; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--config" && i + 1 < argc) {
            opt.config_path = argv[i + 1];
        } else if (arg.rfind("--config=", 0) == 0) {
            opt.config_path = arg.substr(9);
        }
    }
    if (!opt.config_path.empty()) {
        const int rc = apply_config_file(opt.config_path, opt);
        if (rc != kExitOk) return rc;
    }

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", opt.config_path,
                        "flat key=value file with defaults for any flag");
        sub->add_option("--output-dir", opt.output_dir, "directory for outputs");
    };

    CLI::App* ingest = app.add_subcommand(
        "ingest", "parse a dump, apply preprocessing, write the canonical post TSV");
    ingest->add_option("--dataset", opt.dataset, "raw dataset file");
    ingest->add_option("--format", opt.format, "input format (tsv)");
    ingest->add_option("--blacklist", opt.blacklist_path,
                       "file with one blacklisted tag per line");
    ingest->add_flag("--no-lowercase", opt.no_lowercase, "keep tag capitalization");
    ingest->add_option("--sample-fraction", opt.sample_fraction,
                       "fraction of user profiles to keep, in (0,1]");
    ingest->add_option("--sample-seed", opt.sample_seed, "user sampling seed");
    add_common(ingest);

    CLI::App* topics = app.add_subcommand(
        "topics", "train the LDA topic model on the train split and persist it");
    topics->add_option("--input", opt.input, "canonical post TSV");
    topics->add_option("--min-posts", opt.min_posts, "posts required for evaluation users");
    topics->add_option("--lda-topics", opt.lda_topics, "number of latent topics Z");
    topics->add_option("--lda-alpha", opt.lda_alpha, "document-topic prior (0 = 50/Z)");
    topics->add_option("--lda-eta", opt.lda_eta, "topic-token prior");
    topics->add_option("--lda-iterations", opt.lda_iterations, "Gibbs sweeps");
    topics->add_option("--lda-seed", opt.lda_seed, "sampler seed");
    topics->add_flag("--lda-on-full", opt.lda_on_full,
                     "train on the full folksonomy instead of the train split");
    topics->add_option("--model-out", opt.model_out,
                       "model file path (default: <output-dir>/topics.model)");
    add_common(topics);

    CLI::App* evaluate = app.add_subcommand(
        "evaluate", "run the benchmark and write summary CSV plus per-query logs");
    evaluate->add_option("--input", opt.input, "canonical post TSV");
    evaluate->add_option("--model", opt.model_path, "topic model file (3L family)");
    evaluate->add_option("--algorithms", opt.algorithms, "comma-separated algorithm list");
    evaluate->add_option("--min-posts", opt.min_posts, "posts required for evaluation users");
    evaluate->add_option("--k", opt.k, "list length for single queries");
    evaluate->add_option("--beta", opt.beta, "mix weight in [0,1]");
    evaluate->add_option("--decay", opt.decay, "BLL decay d");
    evaluate->add_option("--cf-neighbors", opt.cf_neighbors, "CF neighborhood size");
    evaluate->add_option("--girptm-mu", opt.girptm_mu, "exponential decay rate per second");
    evaluate->add_option("--damping", opt.damping, "PageRank damping factor");
    evaluate->add_option("--tolerance", opt.tolerance, "PageRank convergence tolerance");
    evaluate->add_option("--max-iterations", opt.max_iterations, "PageRank iteration cap");
    evaluate->add_option("--threads", opt.threads, "evaluation worker threads");
    evaluate->add_flag("--strict-precision", opt.strict_precision,
                       "precision denominator k instead of min(k,|rec|)");
    add_common(evaluate);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    auto require = [](const std::string& value, const char* flag) {
        if (!value.empty()) return true;
        std::cerr << "error: " << flag << " is required (flag or config file)\n";
        return false;
    };
    if (!require(opt.output_dir, "--output-dir")) return kExitUsage;
    if (app.got_subcommand(ingest) && !require(opt.dataset, "--dataset")) return kExitUsage;
    if ((app.got_subcommand(topics) || app.got_subcommand(evaluate)) &&
        !require(opt.input, "--input"))
        return kExitUsage;

    try {
        if (app.got_subcommand(ingest)) return run_ingest(opt);
        if (app.got_subcommand(topics)) return run_topics(opt);
        if (app.got_subcommand(evaluate)) return run_evaluate(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
