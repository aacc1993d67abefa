#include "abscreen/store.hpp"

#include "abscreen/errors.hpp"
#include "abscreen/util.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace abscreen::engine {

using nlohmann::json;

namespace {
constexpr const char* kFormat = "abscreen.decisions";
constexpr int kVersion = 1;

std::string decision_line(const ScreeningDecision& d) {
    json j;
    j["record_id"] = d.record_id;
    j["source"] = d.source.key();
    j["verdict"] = protocol::to_string(d.verdict);
    if (d.raw_text)
        j["raw_text"] = *d.raw_text;
    j["fallback"] = d.fallback;
    j["attempts"] = d.attempts;
    j["status"] = gateway::to_string(d.status);
    j["created_at"] = d.created_at;
    return j.dump();
}

} // namespace

DecisionStore::DecisionStore(DecisionStore&& other) noexcept {
    std::lock_guard lock(other.mutex_);
    path_ = std::move(other.path_);
    decisions_ = std::move(other.decisions_);
    index_ = std::move(other.index_);
}

DecisionStore& DecisionStore::operator=(DecisionStore&& other) noexcept {
    if (this != &other) {
        std::scoped_lock lock(mutex_, other.mutex_);
        path_ = std::move(other.path_);
        decisions_ = std::move(other.decisions_);
        index_ = std::move(other.index_);
    }
    return *this;
}

void DecisionStore::insert_loaded(ScreeningDecision decision, int line_no) {
    const auto key = std::make_pair(decision.record_id, decision.source.key());
    if (index_.count(key))
        throw Error(ErrorCode::InvalidFormat,
                    path_ + " line " + std::to_string(line_no) + ": duplicate decision for (" +
                        key.first + ", " + key.second + ")");
    index_.emplace(key, decisions_.size());
    decisions_.push_back(std::move(decision));
}

DecisionStore DecisionStore::open(const std::string& path) {
    DecisionStore store;
    store.path_ = path;

    if (!std::filesystem::exists(path)) {
        json header;
        header["format"] = kFormat;
        header["version"] = kVersion;
        util::write_file(path, header.dump() + "\n");
        return store;
    }

    std::istringstream in(util::read_file(path));
    std::string line;
    bool first = true;
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
                        path + " line " + std::to_string(line_no) + ": " + e.what());
        }
        if (first) {
            first = false;
            if (j.value("format", "") != kFormat || j.value("version", -1) != kVersion)
                throw Error(ErrorCode::InvalidFormat, path + ": not a decision store");
            continue;
        }
        ScreeningDecision d;
        try {
            d.record_id = j.at("record_id").get<std::string>();
            d.source = ScreeningSource::parse(j.at("source").get<std::string>());
            const std::string verdict = j.at("verdict").get<std::string>();
            if (verdict == "include")
                d.verdict = protocol::Verdict::Include;
            else if (verdict == "exclude")
                d.verdict = protocol::Verdict::Exclude;
            else
                throw Error(ErrorCode::InvalidFormat,
                            "decision verdict must be include/exclude, got '" + verdict + "'");
            if (j.contains("raw_text"))
                d.raw_text = j["raw_text"].get<std::string>();
            d.fallback = j.value("fallback", false);
            d.attempts = j.value("attempts", 0);
            d.status = gateway::completion_status_from_string(j.value("status", "ok"));
            d.created_at = j.value("created_at", "");
        } catch (const json::exception& e) {
            throw Error(ErrorCode::InvalidFormat,
                        path + " line " + std::to_string(line_no) + ": " + e.what());
        }
        store.insert_loaded(std::move(d), line_no);
    }
    return store;
}

void DecisionStore::append(const ScreeningDecision& decision) {
    if (decision.verdict == protocol::Verdict::Uninterpretable)
        throw Error(ErrorCode::InvalidFormat,
                    "decision verdicts must be binary (record " + decision.record_id + ")");
    std::lock_guard lock(mutex_);
    const auto key = std::make_pair(decision.record_id, decision.source.key());
    if (index_.count(key))
        throw Error(ErrorCode::InvalidFormat,
                    "duplicate decision for (" + key.first + ", " + key.second + ")");
    if (!path_.empty()) {
        std::ofstream out(path_, std::ios::binary | std::ios::app);
        if (!out)
            throw Error(ErrorCode::IoError, "cannot append to store " + path_);
        out << decision_line(decision) << "\n";
        out.flush();
        if (!out)
            throw Error(ErrorCode::IoError, "short write to store " + path_);
    }
    index_.emplace(key, decisions_.size());
    decisions_.push_back(decision);
}

bool DecisionStore::contains(const std::string& record_id,
                             const ScreeningSource& source) const {
    std::lock_guard lock(mutex_);
    return index_.count({record_id, source.key()}) > 0;
}

std::optional<ScreeningDecision> DecisionStore::find(const std::string& record_id,
                                                     const ScreeningSource& source) const {
    std::lock_guard lock(mutex_);
    auto it = index_.find({record_id, source.key()});
    if (it == index_.end())
        return std::nullopt;
    return decisions_[it->second];
}

std::vector<ScreeningDecision> DecisionStore::decisions_for(const ScreeningSource& source) const {
    std::lock_guard lock(mutex_);
    std::vector<ScreeningDecision> out;
    const std::string key = source.key();
    for (const auto& d : decisions_)
        if (d.source.key() == key)
            out.push_back(d);
    return out;
}

std::vector<std::string> DecisionStore::source_keys() const {
    std::lock_guard lock(mutex_);
    std::set<std::string> keys;
    for (const auto& d : decisions_)
        keys.insert(d.source.key());
    return {keys.begin(), keys.end()};
}

std::set<std::string> DecisionStore::decided_records(const ScreeningSource& source) const {
    std::lock_guard lock(mutex_);
    std::set<std::string> out;
    const std::string key = source.key();
    for (const auto& d : decisions_)
        if (d.source.key() == key)
            out.insert(d.record_id);
    return out;
}

std::size_t DecisionStore::size() const {
    std::lock_guard lock(mutex_);
    return decisions_.size();
}

} // namespace abscreen::engine
