#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "pkenum/diagram.hpp"

namespace pkenum {

class diagram_format_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Text format:
 *   line 1:   n=<int>
 *   then one arc per line, "<i> <j>" with 1 <= i < j <= n.
 * '#' starts a comment (rest of line ignored); blank lines are skipped.
 * write_diagram emits the canonical form, which round-trips exactly.
 */
inline diagram read_diagram(std::istream& in) {
  auto strip = [](std::string s) {
    if (auto pos = s.find('#'); pos != std::string::npos) s.erase(pos);
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string::npos) return std::string();
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
  };

  std::string line;
  std::string header;
  while (std::getline(in, line)) {
    header = strip(line);
    if (!header.empty()) break;
  }
  if (header.rfind("n=", 0) != 0)
    throw diagram_format_error("diagram file: expected leading \"n=<int>\" line");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(header.substr(2), &used);
    if (used != header.size() - 2) throw std::invalid_argument("trailing junk");
  } catch (const std::exception&) {
    throw diagram_format_error("diagram file: malformed vertex count \"" +
                               header + "\"");
  }
  if (n < 0) throw diagram_format_error("diagram file: negative vertex count");

  std::vector<arc> arcs;
  while (std::getline(in, line)) {
    const std::string body = strip(line);
    if (body.empty()) continue;
    std::istringstream row(body);
    int i = 0, j = 0;
    char extra = 0;
    if (!(row >> i >> j) || (row >> extra))
      throw diagram_format_error("diagram file: malformed arc line \"" + body +
                                 "\"");
    arcs.push_back(arc{i, j});
  }
  try {
    return diagram(n, std::move(arcs));
  } catch (const std::invalid_argument& e) {
    throw diagram_format_error(std::string("diagram file: ") + e.what());
  }
}

inline void write_diagram(std::ostream& out, const diagram& d) {
  out << "n=" << d.vertices() << '\n';
  for (const arc& a : d.arcs()) out << a.lo << ' ' << a.hi << '\n';
}

inline std::string to_text(const diagram& d) {
  std::ostringstream out;
  write_diagram(out, d);
  return out.str();
}

inline diagram parse_diagram(const std::string& text) {
  std::istringstream in(text);
  return read_diagram(in);
}

}  // namespace pkenum
