#pragma once

#include <string>
#include <string_view>

namespace abscreen::digest {

/// Hex-encoded SHA-256.
std::string sha256_hex(std::string_view data);

/// Digest of a file's raw bytes.
std::string sha256_file_hex(const std::string& path);

} // namespace abscreen::digest
