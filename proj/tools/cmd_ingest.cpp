#include "common.hpp"

#include "abscreen/errors.hpp"
#include "abscreen/ris.hpp"
#include "abscreen/util.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <map>

namespace abscreen::cli {

int run_ingest(int argc, char** argv) {
    CLI::App app{"Parse RIS exports into a cleaned, labelled corpus"};
    app.name("abscreen ingest");

    std::vector<std::string> ris_paths;
    std::string protocol_path, inclusion_path, out_path;
    bool lenient = false;
    bool no_manifest = false;
    app.add_option("--ris", ris_paths, "RIS search export (repeatable)")
        ->required()
        ->check(CLI::ExistingFile);
    app.add_option("--protocol", protocol_path, "review protocol JSON")
        ->required()
        ->check(CLI::ExistingFile);
    app.add_option("--inclusion-list", inclusion_path,
                   "ground-truth inclusion list (.ris or .csv); omitted = no positives")
        ->check(CLI::ExistingFile);
    app.add_option("--out", out_path, "output corpus (line-delimited JSON)")->required();
    app.add_flag("--lenient", lenient, "tolerate malformed RIS blocks");
    app.add_flag("--no-manifest", no_manifest, "skip the run manifest");

    CLI11_PARSE(app, argc, argv);

    try {
        ManifestBuilder manifest("ingest");
        manifest.flag("lenient", lenient ? "true" : "false");
        manifest.flag("out", out_path);
        manifest.input(protocol_path, "config");
        if (!inclusion_path.empty())
            manifest.input(inclusion_path);

        const auto review = protocol::load_protocol(protocol_path);

        std::vector<corpus::RecordDraft> drafts;
        bool malformed = false;
        for (const auto& path : ris_paths) {
            manifest.input(path);
            const auto parsed = corpus::parse_ris(util::read_file(path), path);
            for (const auto& err : parsed.errors) {
                malformed = true;
                std::fprintf(stderr, "%s: lines %d-%d: %s\n", path.c_str(), err.line_start,
                             err.line_end, err.message.c_str());
            }
            drafts.insert(drafts.end(), parsed.drafts.begin(), parsed.drafts.end());
        }
        if (malformed && !lenient) {
            std::fprintf(stderr, "abscreen ingest: malformed RIS input (use --lenient to keep "
                                 "the well-formed records)\n");
            return 1;
        }

        auto mapped = corpus::map_drafts(drafts, review.review_id);
        for (const auto& rej : mapped.rejected)
            std::fprintf(stderr, "%s: lines %d-%d: rejected (%s)\n",
                         rej.draft.source_file.c_str(), rej.draft.line_start,
                         rej.draft.line_end, rej.reason.c_str());

        auto dedup = corpus::deduplicate(mapped.records);
        auto cleaned = corpus::clean_records(dedup.kept, review.search_year);

        std::vector<std::pair<std::string, std::optional<int>>> inclusion;
        if (!inclusion_path.empty())
            inclusion = corpus::load_inclusion_list(inclusion_path);
        auto labelled = corpus::attach_ground_truth(cleaned.kept, inclusion);
        for (const auto& key : labelled.unmatched)
            std::fprintf(stderr, "warning: inclusion-list entry matched no record: '%s' (%s)\n",
                         key.normalized_title.c_str(),
                         key.year ? std::to_string(*key.year).c_str() : "no year");

        // Reassemble in ingest order; dropped records keep their reason.
        std::map<std::string, corpus::Record> final_state;
        for (const auto& r : labelled.records)
            final_state.emplace(r.record_id, r);
        for (const auto& [r, dup_of] : dedup.dropped) {
            auto copy = r;
            copy.drop_reason = "duplicate_of:" + dup_of;
            final_state.emplace(copy.record_id, copy);
        }
        for (const auto& r : cleaned.dropped_missing_abstract) {
            auto copy = r;
            copy.drop_reason = "missing_abstract";
            final_state.emplace(copy.record_id, copy);
        }
        for (const auto& r : cleaned.dropped_post_search) {
            auto copy = r;
            copy.drop_reason = "post_search_date";
            final_state.emplace(copy.record_id, copy);
        }
        std::vector<corpus::Record> output;
        output.reserve(mapped.records.size());
        for (const auto& r : mapped.records)
            output.push_back(final_state.at(r.record_id));

        corpus::save_corpus(out_path, output);
        if (!no_manifest)
            manifest.write(out_path);

        std::size_t positives = 0;
        for (const auto& r : labelled.records)
            positives += r.ground_truth == corpus::GroundTruth::IncludedInReview;
        std::printf("ingest: %zu drafts, %zu kept (%zu included), %zu duplicates, "
                    "%zu missing abstract, %zu post-search, %zu rejected\n",
                    drafts.size(), labelled.records.size(), positives, dedup.dropped.size(),
                    cleaned.dropped_missing_abstract.size(), cleaned.dropped_post_search.size(),
                    mapped.rejected.size());
        return 0;
    } catch (const Error& e) {
        std::fprintf(stderr, "abscreen ingest: %s\n", e.what());
        return 1;
    }
}

} // namespace abscreen::cli
