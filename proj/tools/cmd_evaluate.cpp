#include "common.hpp"

#include "abscreen/errors.hpp"
#include "abscreen/reports.hpp"
#include "abscreen/util.hpp"

#include <CLI11.hpp>

#include <cstdio>

namespace abscreen::cli {

int run_evaluate(int argc, char** argv) {
    CLI::App app{"Confusion matrices and performance metrics per source"};
    app.name("abscreen evaluate");

    std::string store_path, corpus_path, out_path, json_path;
    std::string sources_spec = "all";
    bool per_review = false;
    bool no_manifest = false;

    app.add_option("--store", store_path, "decision store")->required()->check(
        CLI::ExistingFile);
    app.add_option("--corpus", corpus_path, "labelled corpus or subset")
        ->required()
        ->check(CLI::ExistingFile);
    app.add_option("--out", out_path, "metrics CSV output")->required();
    app.add_option("--json", json_path, "also write the JSON variant here");
    app.add_option("--sources", sources_spec,
                   "comma-separated source keys, or 'all' for every stored source")
        ->capture_default_str();
    app.add_flag("--per-review", per_review, "one row per (source, review)");
    app.add_flag("--no-manifest", no_manifest, "skip the run manifest");

    CLI11_PARSE(app, argc, argv);

    try {
        ManifestBuilder manifest("evaluate");
        manifest.flag("sources", sources_spec);
        manifest.flag("per_review", per_review ? "true" : "false");
        manifest.flag("out", out_path);
        manifest.input(store_path);
        manifest.input(corpus_path, "corpus");

        const auto store = engine::DecisionStore::open(store_path);
        const auto records = load_active_corpus(corpus_path);
        const auto sources = resolve_sources(sources_spec, store.source_keys());

        const auto rows = reports::evaluate_sources(store, records, sources, per_review);
        util::write_file(out_path, reports::metrics_csv(rows));
        if (!json_path.empty())
            util::write_file(json_path, reports::metrics_json(rows));
        if (!no_manifest)
            manifest.write(out_path);

        std::printf("evaluate: %zu rows over %zu records\n", rows.size(), records.size());
        return 0;
    } catch (const Error& e) {
        std::fprintf(stderr, "abscreen evaluate: %s\n", e.what());
        return 1;
    }
}

} // namespace abscreen::cli
