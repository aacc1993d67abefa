#pragma once

#include "abscreen/corpus.hpp"
#include "abscreen/manifest.hpp"
#include "abscreen/protocol.hpp"
#include "abscreen/source.hpp"

#include <map>
#include <string>
#include <vector>

namespace abscreen::cli {

#ifndef ABSCREEN_VERSION
#define ABSCREEN_VERSION "0.0.0"
#endif

/// Collects the audit manifest for one run and writes it next to the
/// output file as "<out>.manifest.json".
class ManifestBuilder {
public:
    explicit ManifestBuilder(std::string subcommand);

    void flag(const std::string& name, const std::string& value);
    void flag(const std::string& name, long long value);
    /// Record an input file digest; `role` may additionally bind it to one
    /// of the named manifest fields (config/prompt_file/corpus).
    void input(const std::string& path, const std::string& role = "");
    void write(const std::string& out_path);

private:
    RunManifest manifest_;
};

/// Load a corpus and return only records that survived cleaning.
std::vector<corpus::Record> load_active_corpus(const std::string& path);

/// Load protocols keyed by review_id; duplicate review ids are an error.
std::map<std::string, protocol::ReviewProtocol>
load_protocols(const std::vector<std::string>& paths);

/// Parse "k1,k2,..." into sources; the literal "all" (or empty) yields
/// every source present in the store file.
std::vector<engine::ScreeningSource> resolve_sources(const std::string& spec,
                                                     const std::vector<std::string>& store_keys);

int run_ingest(int argc, char** argv);
int run_sample(int argc, char** argv);
int run_screen(int argc, char** argv);
int run_evaluate(int argc, char** argv);
int run_ensemble(int argc, char** argv);
int run_kappa(int argc, char** argv);
int run_import_human(int argc, char** argv);

} // namespace abscreen::cli
