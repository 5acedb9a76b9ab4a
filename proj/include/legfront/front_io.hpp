#pragma once

#include <string>
#include <string_view>

#include "legfront/front.hpp"

namespace legfront {

/// Canonical `front v1` text: header line, then one `L|R|X <level>` line per
/// event, each newline-terminated.
std::string serialize(const FrontDiagram& front);

/// Accepts `#` comments and blank lines anywhere; the first content line must
/// be the `front v1` header. Throws ParseError at the first problem. The
/// result is not validated structurally.
FrontDiagram parse_front(std::string_view text);

FrontDiagram read_front_file(const std::string& path);

}  // namespace legfront
