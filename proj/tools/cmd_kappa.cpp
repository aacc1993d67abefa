#include "common.hpp"

#include "abscreen/agreement.hpp"
#include "abscreen/engine.hpp"
#include "abscreen/errors.hpp"
#include "abscreen/reports.hpp"
#include "abscreen/util.hpp"

#include <CLI11.hpp>

#include <cstdio>

namespace abscreen::cli {

int run_kappa(int argc, char** argv) {
    CLI::App app{"Cohen's kappa between two decision columns"};
    app.name("abscreen kappa");

    std::string store_path, source_a, source_b, repeat_spec, out_path;
    bool no_manifest = false;

    app.add_option("--store", store_path, "decision store")->required()->check(
        CLI::ExistingFile);
    app.add_option("--source-a", source_a, "first source key");
    app.add_option("--source-b", source_b, "second source key");
    app.add_option("--repeat-trials", repeat_spec,
                   "compare trials 1 and 2 of '<model_id>:<bias>'");
    app.add_option("--out", out_path, "write the agreement report here (default: stdout)");
    app.add_flag("--no-manifest", no_manifest, "skip the run manifest");

    CLI11_PARSE(app, argc, argv);

    try {
        engine::ScreeningSource a = engine::ScreeningSource::human("placeholder");
        engine::ScreeningSource b = a;
        if (!repeat_spec.empty()) {
            if (!source_a.empty() || !source_b.empty())
                throw Error(ErrorCode::ConfigError,
                            "--repeat-trials excludes --source-a/--source-b");
            const auto sep = repeat_spec.rfind(':');
            if (sep == std::string::npos)
                throw Error(ErrorCode::ConfigError,
                            "--repeat-trials expects '<model_id>:<bias>'");
            const auto bias = protocol::bias_level_from_string(repeat_spec.substr(sep + 1));
            const auto model_id = repeat_spec.substr(0, sep);
            a = engine::ScreeningSource::model(model_id, bias, 1);
            b = engine::ScreeningSource::model(model_id, bias, 2);
        } else {
            if (source_a.empty() || source_b.empty())
                throw Error(ErrorCode::ConfigError,
                            "need --source-a and --source-b, or --repeat-trials");
            a = engine::ScreeningSource::parse(source_a);
            b = engine::ScreeningSource::parse(source_b);
        }

        ManifestBuilder manifest("kappa");
        manifest.flag("source_a", a.key());
        manifest.flag("source_b", b.key());
        manifest.input(store_path);

        const auto store = engine::DecisionStore::open(store_path);
        const auto report = eval::cohen_kappa(store.decisions_for(a), store.decisions_for(b));
        const std::string body = reports::agreement_json(a.key(), b.key(), report);

        if (out_path.empty()) {
            std::fputs(body.c_str(), stdout);
        } else {
            manifest.flag("out", out_path);
            util::write_file(out_path, body);
            if (!no_manifest)
                manifest.write(out_path);
        }
        return 0;
    } catch (const Error& e) {
        std::fprintf(stderr, "abscreen kappa: %s\n", e.what());
        return 1;
    }
}

int run_import_human(int argc, char** argv) {
    CLI::App app{"Import human screener verdicts from CSV (header record_id,verdict)"};
    app.name("abscreen import-human");

    std::string store_path, corpus_path, csv_path, screener_id;
    bool strict = false;

    app.add_option("--store", store_path, "decision store to append to")->required();
    app.add_option("--corpus", corpus_path, "corpus the record ids must belong to")
        ->required()
        ->check(CLI::ExistingFile);
    app.add_option("--csv", csv_path, "decision CSV")->required()->check(CLI::ExistingFile);
    app.add_option("--screener", screener_id, "screener identifier, e.g. Alpha")->required();
    app.add_flag("--strict", strict, "exit nonzero when any row was rejected");

    CLI11_PARSE(app, argc, argv);

    try {
        ManifestBuilder manifest("import-human");
        manifest.flag("screener", screener_id);
        manifest.flag("out", store_path);
        manifest.input(csv_path);
        manifest.input(corpus_path, "corpus");

        const auto records = load_active_corpus(corpus_path);
        auto store = engine::DecisionStore::open(store_path);
        const auto result =
            engine::import_human_decisions(util::read_file(csv_path), screener_id, records, store);

        for (const auto& err : result.errors) {
            std::string where = "row " + std::to_string(err.row);
            if (!err.record_id.empty())
                where += " (" + err.record_id + ")";
            std::fprintf(stderr, "%s: %s\n", where.c_str(), err.message.c_str());
        }
        manifest.write(store_path);
        std::printf("import-human: %zu imported, %zu rejected\n", result.imported,
                    result.errors.size());
        return (strict && !result.errors.empty()) ? 1 : 0;
    } catch (const Error& e) {
        std::fprintf(stderr, "abscreen import-human: %s\n", e.what());
        return 1;
    }
}

} // namespace abscreen::cli
