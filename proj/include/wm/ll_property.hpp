#pragma once

#include <cstdint>
#include <optional>

#include "wm/integer_set.hpp"

namespace wm {

// Least L such that every length-L window inside [1, horizon] contains l
// consecutive non-members, or nullopt when no L up to horizon/2 works.
// A sequence admitting such L for every l cannot be central.
std::optional<uint64_t> ll_window(const IntegerSet& a, uint64_t l);

}  // namespace wm
