#pragma once

// Reader and writer for `.fps` project specification files:
//
//   # comment
//   project "Billing"
//   ilf "Customers" rets=2 dets=25
//   eif "Rates" rets=1 dets=4
//   ei  "Add customer" ftrs=1 dets=12
//   eo  "Monthly statement" ftrs=3 dets=22
//   eq  "Find customer" ftrs=1 dets=6
//
// One declaration per line. The project header comes first, exactly once.
// Attributes may appear in any order. Names are double-quoted and may hold
// any character except the quote itself. LF and CRLF are accepted.

#include <string>
#include <string_view>

#include "efpm/error.hpp"
#include "efpm/fpa.hpp"

namespace efpm {

/// Parses a whole document. All errors in the file are reported together,
/// in line order.
Parsed<Project> parse_spec(std::string_view source);

/// Canonical form: header, data functions, then transactional functions,
/// each in insertion order; single spaces; LF line endings.
std::string render_spec(const Project& project);

}  // namespace efpm
