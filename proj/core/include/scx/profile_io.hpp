#pragma once

// Plain-text profile documents.
//
//   m n                 (or: multi m K, followed by a line of K multiplicities)
//   a b ...             m rows; row r lists the rank-r alternative of each column
//
// Lines whose first non-blank character is '#' are comments. Alternatives are
// declared in order of first appearance, reading rows top to bottom.

#include <string>
#include <string_view>
#include <variant>

#include "scx/profile.hpp"
#include "scx/variable_states.hpp"

namespace scx {

using ProfileDocument = std::variant<Profile, MultiProfile>;

/// Throws ParseError carrying the offending line number.
ProfileDocument parse_profile_document(std::string_view text);

/// Parses either form; a multi document is expanded.
Profile parse_profile(std::string_view text);

std::string format_profile(const Profile& p);
std::string format_multi_profile(const MultiProfile& mp);

/// Reads a file and parses it; errors mention the path.
ProfileDocument load_profile_document(const std::string& path);

}  // namespace scx
