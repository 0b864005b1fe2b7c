#pragma once

#include <cstdint>
#include <string>

#include "wm/rational.hpp"

namespace wm {

uint64_t fnv1a64(const void* data, size_t len);

// Hex FNV-1a digest of a file's bytes, for input provenance in run reports.
std::string file_digest(const std::string& path);

}  // namespace wm
