#pragma once

#include "abscreen/record.hpp"
#include "abscreen/ris.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace abscreen::corpus {

/// Duplicate / ground-truth matching key: normalized title plus year.
struct RecordKey {
    std::string normalized_title;
    std::optional<int> year;

    bool operator==(const RecordKey&) const = default;
    bool operator<(const RecordKey& other) const {
        if (normalized_title != other.normalized_title)
            return normalized_title < other.normalized_title;
        return year < other.year;
    }
};

RecordKey key_of(const Record& record);

struct SubsetSpec {
    std::uint64_t seed = 42;
    int excludes_per_review = 23;
    bool include_all_positives = true;
};

struct RejectedDraft {
    RecordDraft draft;
    std::string reason;
};

/// Map a well-formed draft onto a Record. Title from TI (fallback T1),
/// abstract from AB (fallback N2), year from PY (fallback Y1; leading
/// four-digit prefix), authors from AU then A1. Drafts without a title are
/// rejected with reason "missing_title". The record_id is a content digest,
/// stable across ingests of the same data.
Record to_record(const RecordDraft& draft, const std::string& review_id);

struct MappingResult {
    std::vector<Record> records;
    std::vector<RejectedDraft> rejected;
};

MappingResult map_drafts(const std::vector<RecordDraft>& drafts, const std::string& review_id);

struct DedupResult {
    std::vector<Record> kept;
    /// (dropped record, record_id of the kept duplicate)
    std::vector<std::pair<Record, std::string>> dropped;
};

/// First occurrence under key_of wins; input order preserved on both sides.
DedupResult deduplicate(const std::vector<Record>& records);

struct CleanResult {
    std::vector<Record> kept;
    std::vector<Record> dropped_missing_abstract;
    std::vector<Record> dropped_post_search;
};

/// Keep records with a non-empty abstract published no later than
/// search_year. Records with no year are kept (cannot be proven
/// post-search). Missing abstract is checked first.
CleanResult clean_records(const std::vector<Record>& records, int search_year);

struct GroundTruthResult {
    std::vector<Record> records;
    /// Inclusion-list entries that matched no record.
    std::vector<RecordKey> unmatched;
};

/// Label records included when their key matches an inclusion-list entry,
/// excluded otherwise. Matching uses the same key as deduplication.
GroundTruthResult attach_ground_truth(std::vector<Record> records,
                                      const std::vector<std::pair<std::string, std::optional<int>>>&
                                          inclusion_list);

/// Choose k distinct positions from [0, n) with a mt19937_64-driven partial
/// Fisher-Yates; bounded draws use rejection sampling so the selection is
/// identical on every platform. Result is sorted ascending.
std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k, std::uint64_t seed);

/// Per-review sampling seed: spec seed combined with FNV-1a of the review id,
/// so the draw for one review does not depend on which other reviews are
/// present.
std::uint64_t review_seed(std::uint64_t seed, const std::string& review_id);

/// All positives from every review plus spec.excludes_per_review seeded
/// negatives per review. Output preserves corpus order. Throws
/// InsufficientExcludes when a review has too few negatives.
std::vector<Record> build_balanced_subset(const std::vector<Record>& records,
                                          const SubsetSpec& spec);

/// Line-delimited JSON corpus format (one record per line, fields
/// record_id, review_id, title, abstract, year, authors, ground_truth,
/// drop_reason). Serialization is byte-deterministic.
std::string to_jsonl(const std::vector<Record>& records);
std::vector<Record> from_jsonl(std::string_view text);

std::vector<Record> load_corpus(const std::string& path);
void save_corpus(const std::string& path, const std::vector<Record>& records);

/// Records that survived ingest cleaning (no drop_reason).
std::vector<Record> active_records(const std::vector<Record>& records);

/// Inclusion list from RIS (title/year tags) or two-column CSV with a
/// "title,year" header. Entries are deduplicated under the matching key.
std::vector<std::pair<std::string, std::optional<int>>>
load_inclusion_list(const std::string& path);

} // namespace abscreen::corpus
