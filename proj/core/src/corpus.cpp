#include "abscreen/corpus.hpp"

#include "abscreen/digest.hpp"
#include "abscreen/errors.hpp"
#include "abscreen/util.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace abscreen::corpus {

using nlohmann::json;

const char* to_string(GroundTruth gt) {
    switch (gt) {
    case GroundTruth::IncludedInReview: return "included";
    case GroundTruth::ExcludedFromReview: return "excluded";
    case GroundTruth::Unlabelled: return "unlabelled";
    }
    return "unlabelled";
}

GroundTruth ground_truth_from_string(const std::string& s) {
    if (s == "included")
        return GroundTruth::IncludedInReview;
    if (s == "excluded")
        return GroundTruth::ExcludedFromReview;
    if (s == "unlabelled")
        return GroundTruth::Unlabelled;
    throw Error(ErrorCode::InvalidFormat, "unknown ground_truth value '" + s + "'");
}

RecordKey key_of(const Record& record) {
    return {util::normalize_title(record.title), record.year};
}

namespace {

std::string make_record_id(const std::string& review_id, const Record& r) {
    std::string material = review_id;
    material.push_back('\x1f');
    material += util::normalize_title(r.title);
    material.push_back('\x1f');
    material += r.year ? std::to_string(*r.year) : "";
    material.push_back('\x1f');
    material += r.abstract.value_or("");
    for (const auto& a : r.authors) {
        material.push_back('\x1f');
        material += a;
    }
    return digest::sha256_hex(material).substr(0, 12);
}

} // namespace

Record to_record(const RecordDraft& draft, const std::string& review_id) {
    Record r;
    r.review_id = review_id;

    auto title = draft.first("TI");
    if (!title || util::trim(*title).empty())
        title = draft.first("T1");
    if (!title || util::trim(*title).empty())
        throw Error(ErrorCode::MissingTitle,
                    "no TI/T1 tag in record at lines " + std::to_string(draft.line_start) + "-" +
                        std::to_string(draft.line_end));
    r.title = util::trim(*title);

    auto abstract = draft.first("AB");
    if (!abstract || util::trim(*abstract).empty())
        abstract = draft.first("N2");
    if (abstract && !util::trim(*abstract).empty())
        r.abstract = util::trim(*abstract);

    auto year_tag = draft.first("PY");
    auto year = year_tag ? util::parse_year_prefix(*year_tag) : std::nullopt;
    if (!year) {
        year_tag = draft.first("Y1");
        year = year_tag ? util::parse_year_prefix(*year_tag) : std::nullopt;
    }
    r.year = year;

    r.authors = draft.all("AU");
    for (const auto& a : draft.all("A1"))
        r.authors.push_back(a);

    r.record_id = make_record_id(review_id, r);
    return r;
}

MappingResult map_drafts(const std::vector<RecordDraft>& drafts, const std::string& review_id) {
    MappingResult result;
    std::set<std::string> seen_ids;
    for (const auto& draft : drafts) {
        try {
            Record r = to_record(draft, review_id);
            // Identical-content duplicates collide on the digest id; suffix
            // them so ids stay unique until deduplication removes them.
            std::string id = r.record_id;
            int n = 2;
            while (!seen_ids.insert(id).second)
                id = r.record_id + "-" + std::to_string(n++);
            r.record_id = id;
            result.records.push_back(std::move(r));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::MissingTitle)
                throw;
            result.rejected.push_back({draft, "missing_title"});
        }
    }
    return result;
}

DedupResult deduplicate(const std::vector<Record>& records) {
    DedupResult result;
    // Keyed within each review so that concatenated multi-review corpora
    // never collapse records across reviews.
    std::map<std::pair<std::string, RecordKey>, std::string> first_seen;
    for (const auto& r : records) {
        auto [it, inserted] = first_seen.emplace(std::make_pair(r.review_id, key_of(r)),
                                                 r.record_id);
        if (inserted)
            result.kept.push_back(r);
        else
            result.dropped.emplace_back(r, it->second);
    }
    return result;
}

CleanResult clean_records(const std::vector<Record>& records, int search_year) {
    CleanResult result;
    for (const auto& r : records) {
        if (!r.has_abstract())
            result.dropped_missing_abstract.push_back(r);
        else if (r.year && *r.year > search_year)
            result.dropped_post_search.push_back(r);
        else
            result.kept.push_back(r);
    }
    return result;
}

GroundTruthResult attach_ground_truth(
    std::vector<Record> records,
    const std::vector<std::pair<std::string, std::optional<int>>>& inclusion_list) {
    std::map<RecordKey, bool> wanted; // key -> matched yet
    for (const auto& [title, year] : inclusion_list)
        wanted.emplace(RecordKey{util::normalize_title(title), year}, false);

    for (auto& r : records) {
        auto it = wanted.find(key_of(r));
        if (it != wanted.end()) {
            r.ground_truth = GroundTruth::IncludedInReview;
            it->second = true;
        } else {
            r.ground_truth = GroundTruth::ExcludedFromReview;
        }
    }

    GroundTruthResult result;
    result.records = std::move(records);
    for (const auto& [key, matched] : wanted)
        if (!matched)
            result.unmatched.push_back(key);
    return result;
}

namespace {

// Unbiased bounded draw via rejection sampling on the raw 64-bit stream.
std::uint64_t bounded_uniform(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

} // namespace

std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (k > n)
        throw Error(ErrorCode::InsufficientExcludes,
                    "cannot sample " + std::to_string(k) + " of " + std::to_string(n));
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i)
        pool[i] = i;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(bounded_uniform(rng, n - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

std::uint64_t review_seed(std::uint64_t seed, const std::string& review_id) {
    return seed ^ util::fnv1a64(review_id);
}

std::vector<Record> build_balanced_subset(const std::vector<Record>& records,
                                          const SubsetSpec& spec) {
    if (spec.excludes_per_review < 0)
        throw Error(ErrorCode::ConfigError, "excludes_per_review must be >= 0");

    struct PerReview {
        std::vector<std::size_t> negatives; // positions in `records`
    };
    std::map<std::string, PerReview> by_review;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        if (r.drop_reason)
            continue;
        if (r.ground_truth == GroundTruth::ExcludedFromReview)
            by_review[r.review_id].negatives.push_back(i);
        else
            by_review[r.review_id]; // ensure the review is represented
    }

    std::vector<bool> selected(records.size(), false);
    const auto k = static_cast<std::size_t>(spec.excludes_per_review);
    for (const auto& [review_id, group] : by_review) {
        if (group.negatives.size() < k)
            throw Error(ErrorCode::InsufficientExcludes,
                        "review " + review_id + " has " + std::to_string(group.negatives.size()) +
                            " excluded records, need " + std::to_string(k));
        for (std::size_t idx :
             sample_indices(group.negatives.size(), k, review_seed(spec.seed, review_id)))
            selected[group.negatives[idx]] = true;
    }

    std::vector<Record> subset;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        if (r.drop_reason)
            continue;
        const bool positive = r.ground_truth == GroundTruth::IncludedInReview;
        if ((positive && spec.include_all_positives) || selected[i])
            subset.push_back(r);
    }
    return subset;
}

std::string to_jsonl(const std::vector<Record>& records) {
    std::string out;
    for (const auto& r : records) {
        json line;
        line["record_id"] = r.record_id;
        line["review_id"] = r.review_id;
        line["title"] = r.title;
        if (r.abstract)
            line["abstract"] = *r.abstract;
        if (r.year)
            line["year"] = *r.year;
        line["authors"] = r.authors;
        line["ground_truth"] = to_string(r.ground_truth);
        if (r.drop_reason)
            line["drop_reason"] = *r.drop_reason;
        out += line.dump();
        out += "\n";
    }
    return out;
}

std::vector<Record> from_jsonl(std::string_view text) {
    std::vector<Record> records;
    std::set<std::string> ids;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (util::trim(line).empty())
            continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw Error(ErrorCode::InvalidFormat,
                        "corpus line " + std::to_string(line_no) + ": " + e.what());
        }
        Record r;
        r.record_id = j.at("record_id").get<std::string>();
        r.review_id = j.at("review_id").get<std::string>();
        r.title = j.at("title").get<std::string>();
        if (j.contains("abstract"))
            r.abstract = j["abstract"].get<std::string>();
        if (j.contains("year"))
            r.year = j["year"].get<int>();
        if (j.contains("authors"))
            r.authors = j["authors"].get<std::vector<std::string>>();
        r.ground_truth = ground_truth_from_string(j.at("ground_truth").get<std::string>());
        if (j.contains("drop_reason"))
            r.drop_reason = j["drop_reason"].get<std::string>();
        if (!ids.insert(r.record_id).second)
            throw Error(ErrorCode::InvalidFormat,
                        "duplicate record_id '" + r.record_id + "' at corpus line " +
                            std::to_string(line_no));
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<Record> load_corpus(const std::string& path) {
    return from_jsonl(util::read_file(path));
}

void save_corpus(const std::string& path, const std::vector<Record>& records) {
    util::write_file(path, to_jsonl(records));
}

std::vector<Record> active_records(const std::vector<Record>& records) {
    std::vector<Record> out;
    for (const auto& r : records)
        if (!r.drop_reason)
            out.push_back(r);
    return out;
}

std::vector<std::pair<std::string, std::optional<int>>>
load_inclusion_list(const std::string& path) {
    const std::string text = util::read_file(path);
    std::vector<std::pair<std::string, std::optional<int>>> entries;

    const bool is_ris = path.size() > 4 && path.substr(path.size() - 4) == ".ris";
    if (is_ris) {
        RisParseResult parsed = parse_ris(text, path);
        if (!parsed.errors.empty())
            throw Error(ErrorCode::MalformedRecord,
                        path + ": " + parsed.errors.front().message);
        for (const auto& draft : parsed.drafts) {
            auto title = draft.first("TI");
            if (!title || util::trim(*title).empty())
                title = draft.first("T1");
            if (!title)
                throw Error(ErrorCode::MissingTitle, path + ": inclusion entry without title");
            auto year_tag = draft.first("PY");
            auto year = year_tag ? util::parse_year_prefix(*year_tag) : std::nullopt;
            if (!year) {
                year_tag = draft.first("Y1");
                year = year_tag ? util::parse_year_prefix(*year_tag) : std::nullopt;
            }
            entries.emplace_back(util::trim(*title), year);
        }
    } else {
        auto rows = util::parse_csv(text);
        if (rows.empty())
            return entries;
        size_t start = 0;
        if (rows[0].size() >= 2 && util::to_lower(util::trim(rows[0][0])) == "title" &&
            util::to_lower(util::trim(rows[0][1])) == "year")
            start = 1;
        for (size_t i = start; i < rows.size(); ++i) {
            const auto& row = rows[i];
            if (row.empty() || util::trim(row[0]).empty())
                continue;
            std::optional<int> year;
            if (row.size() >= 2)
                year = util::parse_year_prefix(row[1]);
            entries.emplace_back(util::trim(row[0]), year);
        }
    }

    // Deduplicate under the matching key, first occurrence wins.
    std::set<RecordKey> seen;
    std::vector<std::pair<std::string, std::optional<int>>> unique;
    for (auto& e : entries)
        if (seen.insert(RecordKey{util::normalize_title(e.first), e.second}).second)
            unique.push_back(std::move(e));
    return unique;
}

} // namespace abscreen::corpus
