#pragma once

#include <cstddef>
#include <filesystem>
#include <string>

namespace ucbs {

// Lowercase hex SHA-256 digest of a memory buffer.
std::string sha256_hex(const void* data, std::size_t size);

inline std::string sha256_hex(const std::string& s) {
  return sha256_hex(s.data(), s.size());
}

// Digest of a file's contents. Throws IoError if unreadable.
std::string sha256_file(const std::filesystem::path& path);

}  // namespace ucbs
