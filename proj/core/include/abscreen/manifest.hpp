#pragma once

#include <map>
#include <optional>
#include <string>

namespace abscreen {

/// Audit record emitted for every CLI run: digests of the inputs that
/// determined the output, tool version, timing and the resolved flags.
/// Digests are plain SHA-256 of the file bytes, recomputable by anyone.
struct RunManifest {
    std::string tool_version;
    std::string subcommand;
    std::map<std::string, std::string> flags;
    std::optional<std::string> config_digest;
    std::optional<std::string> prompt_file_digest;
    std::optional<std::string> corpus_digest;
    std::map<std::string, std::string> input_digests; // path -> sha256
    std::string started_at;
    std::string finished_at;
};

std::string manifest_to_json(const RunManifest& manifest);
RunManifest manifest_from_json(const std::string& text);

void save_manifest(const std::string& path, const RunManifest& manifest);

} // namespace abscreen
