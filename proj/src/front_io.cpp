#include "legfront/front_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "legfront/error.hpp"

namespace legfront {

std::string serialize(const FrontDiagram& front) {
  std::string out = "front v1\n";
  for (const Event& e : front.events()) {
    switch (e.kind) {
      case EventKind::LeftCusp: out += 'L'; break;
      case EventKind::RightCusp: out += 'R'; break;
      case EventKind::Crossing: out += 'X'; break;
    }
    out += ' ';
    out += std::to_string(e.level);
    out += '\n';
  }
  return out;
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

}  // namespace

FrontDiagram parse_front(std::string_view text) {
  std::vector<Event> events;
  bool header = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::size_t i = 0;
    while (i < line.size() && is_space(line[i])) ++i;
    if (i == line.size()) {
      if (end == text.size()) break;
      continue;
    }
    int col = static_cast<int>(i) + 1;
    std::size_t last = line.size();
    while (last > i && is_space(line[last - 1])) --last;
    std::string_view body = line.substr(i, last - i);

    if (!header) {
      if (body != "front v1") throw ParseError(line_no, col, "expected header 'front v1'");
      header = true;
      continue;
    }
    EventKind kind{};
    switch (body[0]) {
      case 'L': kind = EventKind::LeftCusp; break;
      case 'R': kind = EventKind::RightCusp; break;
      case 'X': kind = EventKind::Crossing; break;
      default: throw ParseError(line_no, col, std::string("unknown event '") + body[0] + "'");
    }
    std::size_t j = 1;
    if (j >= body.size() || !is_space(body[j])) throw ParseError(line_no, col + 1, "expected space and level");
    while (j < body.size() && is_space(body[j])) ++j;
    int level = 0;
    auto [ptr, ec] = std::from_chars(body.data() + j, body.data() + body.size(), level);
    if (ec != std::errc{} || j == body.size())
      throw ParseError(line_no, col + static_cast<int>(j), "expected integer level");
    if (ptr != body.data() + body.size())
      throw ParseError(line_no, col + static_cast<int>(ptr - body.data()), "trailing characters");
    if (level < 1) throw ParseError(line_no, col + static_cast<int>(j), "level must be positive");
    events.push_back({kind, level});
    if (end == text.size()) break;
  }
  if (!header) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'front v1' header");
  return FrontDiagram(std::move(events));
}

FrontDiagram read_front_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_front(ss.str());
}

}  // namespace legfront
