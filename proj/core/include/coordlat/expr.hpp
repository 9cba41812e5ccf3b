#pragma once

#include <string>
#include <string_view>

#include "coordlat/finmod.hpp"
#include "coordlat/finring.hpp"

namespace coordlat {

// Colon-separated constructor expressions:
//
//   ring    := zmod:N | matrix:<ring>:K | product:<ring>:<ring> | <file.json>
//   module  := free:<ring>:K | <file.json>
//
// e.g. "matrix:zmod:2:2", "product:zmod:2:zmod:3", "free:zmod:6:1".
// Anything that is not a constructor keyword is treated as a path to a
// ring or module document. Malformed expressions raise UsageError.

RingPtr parse_ring_expr(std::string_view text, const Limits& limits = {});
ModulePtr parse_module_expr(std::string_view text, const Limits& limits = {});

}  // namespace coordlat
