#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace abscreen::corpus {

enum class GroundTruth {
    IncludedInReview,
    ExcludedFromReview,
    Unlabelled,
};

const char* to_string(GroundTruth gt);
GroundTruth ground_truth_from_string(const std::string& s);

/// One raw RIS block, tag order preserved. Well-formed drafts begin with TY
/// and end with ER.
struct RecordDraft {
    std::vector<std::pair<std::string, std::string>> raw_tags;
    std::string source_file;
    int line_start = 0;
    int line_end = 0;

    /// First value of `tag`, or nullopt.
    std::optional<std::string> first(const std::string& tag) const;
    /// All values of `tag`, in order.
    std::vector<std::string> all(const std::string& tag) const;
};

struct Record {
    std::string record_id;
    std::string review_id;
    std::string title;
    std::optional<std::string> abstract;
    std::optional<int> year;
    std::vector<std::string> authors;
    GroundTruth ground_truth = GroundTruth::Unlabelled;
    /// Set on records removed by cleaning/deduplication; kept records carry none.
    std::optional<std::string> drop_reason;

    bool has_abstract() const { return abstract.has_value() && !abstract->empty(); }
};

} // namespace abscreen::corpus
