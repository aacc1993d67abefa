#include "common.hpp"

#include "abscreen/errors.hpp"

#include <CLI11.hpp>

#include <cstdio>

namespace abscreen::cli {

int run_sample(int argc, char** argv) {
    CLI::App app{"Draw the balanced evaluation subset from a corpus"};
    app.name("abscreen sample");

    std::string corpus_path, out_path;
    corpus::SubsetSpec spec;
    bool no_manifest = false;
    app.add_option("--corpus", corpus_path, "labelled corpus")
        ->required()
        ->check(CLI::ExistingFile);
    app.add_option("--out", out_path, "output subset (same format as the corpus)")->required();
    app.add_option("--seed", spec.seed, "sampling seed")->capture_default_str();
    app.add_option("--excludes-per-review", spec.excludes_per_review,
                   "negatives drawn per review")
        ->capture_default_str();
    app.add_flag("!--no-positives", spec.include_all_positives,
                 "drop the positive records (negatives only)");
    app.add_flag("--no-manifest", no_manifest, "skip the run manifest");

    CLI11_PARSE(app, argc, argv);

    try {
        ManifestBuilder manifest("sample");
        manifest.flag("seed", static_cast<long long>(spec.seed));
        manifest.flag("excludes_per_review", spec.excludes_per_review);
        manifest.flag("out", out_path);
        manifest.input(corpus_path, "corpus");

        const auto records = load_active_corpus(corpus_path);
        for (const auto& r : records)
            if (r.ground_truth == corpus::GroundTruth::Unlabelled)
                throw Error(ErrorCode::InvalidFormat,
                            "record " + r.record_id + " is unlabelled; ingest with ground truth "
                            "before sampling");

        const auto subset = corpus::build_balanced_subset(records, spec);
        corpus::save_corpus(out_path, subset);
        if (!no_manifest)
            manifest.write(out_path);

        std::size_t positives = 0;
        for (const auto& r : subset)
            positives += r.ground_truth == corpus::GroundTruth::IncludedInReview;
        std::printf("sample: %zu records (%zu included, %zu excluded)\n", subset.size(),
                    positives, subset.size() - positives);
        return 0;
    } catch (const Error& e) {
        std::fprintf(stderr, "abscreen sample: %s\n", e.what());
        return 1;
    }
}

} // namespace abscreen::cli
