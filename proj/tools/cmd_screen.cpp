#include "common.hpp"

#include "abscreen/engine.hpp"
#include "abscreen/errors.hpp"
#include "abscreen/transport.hpp"

#include <CLI11.hpp>

#include <cstdio>

namespace abscreen::cli {

int run_screen(int argc, char** argv) {
    CLI::App app{"Screen a corpus with one (model, bias) pair and persist decisions"};
    app.name("abscreen screen");

    std::string corpus_path, backend_path, store_path, cache_path;
    std::vector<std::string> protocol_paths;
    std::string bias_name = "none";
    std::string model_override;
    std::string cache_mode_name = "live";
    std::string prompts_path = "prompts/default_prompts.txt";
    int trial = 1;
    int concurrency = 1;
    int invalid_retries = 1;
    double rate_limit = 0.0;
    bool no_manifest = false;

    app.add_option("--corpus", corpus_path, "corpus or subset to screen")
        ->required()
        ->check(CLI::ExistingFile);
    app.add_option("--protocol", protocol_paths, "review protocol JSON (repeatable)")
        ->required()
        ->check(CLI::ExistingFile);
    app.add_option("--backend-config", backend_path, "backend configuration JSON")
        ->required()
        ->check(CLI::ExistingFile);
    app.add_option("--store", store_path, "decision store to append to")->required();
    app.add_option("--bias", bias_name,
                   "prompt bias level (title-only|none|mild|moderate|heavy|extreme)")
        ->capture_default_str();
    app.add_option("--model", model_override, "override the config's model_id");
    app.add_option("--cache-mode", cache_mode_name, "live|replay|record-replay")
        ->capture_default_str();
    app.add_option("--cache", cache_path, "completion cache file (replay modes)");
    app.add_option("--prompts", prompts_path, "prompt template file")->capture_default_str();
    app.add_option("--trial", trial, "trial index (>1 records a repeat trial)")
        ->capture_default_str();
    app.add_option("--concurrency", concurrency, "max in-flight requests")
        ->capture_default_str();
    app.add_option("--invalid-retries", invalid_retries,
                   "re-queries after an uninterpretable output")
        ->capture_default_str();
    app.add_option("--rate-limit", rate_limit, "max requests per second (0 = unlimited)")
        ->capture_default_str();
    app.add_flag("--no-manifest", no_manifest, "skip the run manifest");

    CLI11_PARSE(app, argc, argv);

    try {
        ManifestBuilder manifest("screen");
        manifest.flag("bias", bias_name);
        manifest.flag("cache_mode", cache_mode_name);
        manifest.flag("trial", trial);
        manifest.flag("concurrency", concurrency);
        manifest.flag("invalid_retries", invalid_retries);
        manifest.flag("out", store_path);
        manifest.input(corpus_path, "corpus");
        manifest.input(backend_path, "config");
        manifest.input(prompts_path, "prompt_file");
        for (const auto& p : protocol_paths)
            manifest.input(p);

        const auto mode = gateway::cache_mode_from_string(cache_mode_name);

        engine::ScreeningBackend backend;
        backend.config = gateway::load_backend_config(backend_path);
        if (!model_override.empty())
            backend.config.model_id = model_override;
        backend.cache_mode = mode;
        backend.clock = gateway::system_clock();

        // Fail fast (credentials, URL) before opening the store, so a
        // misconfigured live run leaves nothing behind.
        if (mode != gateway::CacheMode::Replay)
            backend.transport = std::make_shared<gateway::HttpTransport>(backend.config);
        if (mode != gateway::CacheMode::Live) {
            if (cache_path.empty())
                throw Error(ErrorCode::ConfigError,
                            "--cache is required for cache mode " + cache_mode_name);
            backend.cache =
                std::make_shared<gateway::CompletionCache>(gateway::CompletionCache::open(cache_path));
        }
        if (rate_limit > 0.0)
            backend.limiter = std::make_shared<gateway::TokenBucket>(
                rate_limit, std::max(1.0, rate_limit), backend.clock);

        const auto library = protocol::PromptLibrary::load(prompts_path);
        std::fprintf(stderr, "prompt file sha256: %s\n", library.checksum().c_str());
        const auto dialect = backend.config.special_token_wrap
                                 ? protocol::PromptDialect::SpecialTokenWrapped
                                 : protocol::PromptDialect::Plain;
        const auto spec = library.spec(protocol::bias_level_from_string(bias_name), dialect);

        const auto records = load_active_corpus(corpus_path);
        const auto protocols = load_protocols(protocol_paths);
        auto store = engine::DecisionStore::open(store_path);

        engine::RunOptions options;
        options.trial_index = trial;
        options.concurrency = concurrency;
        options.invalid_output_retries = invalid_retries;

        const engine::RunSummary summary =
            trial > 1 ? engine::run_repeat_trial(records, protocols, spec, backend, store,
                                                 trial, options)
                      : engine::run_screening(records, protocols, spec, backend, store, options);

        if (!no_manifest)
            manifest.write(store_path);

        std::printf("screen: %zu records, %zu newly decided, %zu include / %zu exclude, "
                    "%zu fallback, %zu errors\n",
                    summary.total_records, summary.newly_decided, summary.includes,
                    summary.excludes, summary.fallbacks, summary.errors);
        for (const auto& [status, count] : summary.status_counts)
            std::printf("  %s: %zu\n", status.c_str(), count);
        return 0;
    } catch (const Error& e) {
        std::fprintf(stderr, "abscreen screen: %s\n", e.what());
        return 1;
    }
}

} // namespace abscreen::cli
