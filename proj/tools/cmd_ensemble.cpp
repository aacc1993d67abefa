#include "common.hpp"

#include "abscreen/ensemble.hpp"
#include "abscreen/errors.hpp"
#include "abscreen/reports.hpp"
#include "abscreen/util.hpp"

#include <CLI11.hpp>

#include <cstdio>

namespace abscreen::cli {

int run_ensemble(int argc, char** argv) {
    CLI::App app{"Combine two decision columns in series (AND) or parallel (OR)"};
    app.name("abscreen ensemble");

    std::string store_path, corpus_path, out_path, json_path;
    std::string mode_name, components_spec;
    bool all_pairs = false;
    bool no_manifest = false;

    app.add_option("--store", store_path, "decision store")->required()->check(
        CLI::ExistingFile);
    app.add_option("--corpus", corpus_path, "labelled corpus or subset")
        ->required()
        ->check(CLI::ExistingFile);
    app.add_option("--out", out_path, "ensemble report CSV output")->required();
    app.add_option("--json", json_path, "also write the JSON variant here");
    app.add_option("--mode", mode_name, "series|parallel");
    app.add_option("--components", components_spec,
                   "exactly two comma-separated source keys (requires --mode)");
    app.add_flag("--all-pairs", all_pairs,
                 "every pair of stored sources, in both modes unless --mode is given");
    app.add_flag("--no-manifest", no_manifest, "skip the run manifest");

    CLI11_PARSE(app, argc, argv);

    try {
        ManifestBuilder manifest("ensemble");
        manifest.flag("mode", mode_name.empty() ? "both" : mode_name);
        manifest.flag("components", components_spec.empty() ? "all-pairs" : components_spec);
        manifest.flag("out", out_path);
        manifest.input(store_path);
        manifest.input(corpus_path, "corpus");

        const auto store = engine::DecisionStore::open(store_path);
        const auto records = load_active_corpus(corpus_path);

        std::vector<ensemble::EnsembleConfig> configs;
        if (all_pairs) {
            if (!components_spec.empty())
                throw Error(ErrorCode::ConfigError, "--all-pairs excludes --components");
            const auto sources = resolve_sources("all", store.source_keys());
            if (mode_name.empty()) {
                for (auto mode : {ensemble::EnsembleMode::Series,
                                  ensemble::EnsembleMode::Parallel}) {
                    auto pairs = ensemble::all_pairs(sources, mode);
                    configs.insert(configs.end(), pairs.begin(), pairs.end());
                }
            } else {
                configs =
                    ensemble::all_pairs(sources, ensemble::ensemble_mode_from_string(mode_name));
            }
        } else {
            if (components_spec.empty())
                throw Error(ErrorCode::ConfigError, "need --components a,b or --all-pairs");
            if (mode_name.empty())
                throw Error(ErrorCode::ConfigError, "--components requires --mode");
            const auto sources = resolve_sources(components_spec, {});
            if (sources.size() != 2)
                throw Error(ErrorCode::ConfigError, "--components takes exactly two sources");
            ensemble::EnsembleConfig config{ensemble::ensemble_mode_from_string(mode_name),
                                            sources[0], sources[1]};
            config.validate();
            configs.push_back(config);
        }

        const auto results = ensemble::evaluate_ensembles(store, records, configs);
        util::write_file(out_path, reports::ensemble_csv(results));
        if (!json_path.empty())
            util::write_file(json_path, reports::ensemble_json(results));
        if (!no_manifest)
            manifest.write(out_path);

        std::printf("ensemble: %zu configurations over %zu records\n", results.size(),
                    records.size());
        return 0;
    } catch (const Error& e) {
        std::fprintf(stderr, "abscreen ensemble: %s\n", e.what());
        return 1;
    }
}

} // namespace abscreen::cli
