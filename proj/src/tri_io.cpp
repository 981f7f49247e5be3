#include <istream>
#include <ostream>
#include <sstream>

#include "nsenum/triangulation.hpp"

namespace nsenum {

namespace {

bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

int parse_int(const std::string& s, const std::string& context) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("expected a non-negative integer in " + context + ", got '" + s + "'");
  try {
    return std::stoi(s);
  } catch (const std::exception&) {
    throw ParseError("integer out of range in " + context);
  }
}

std::optional<Gluing> parse_token(const std::string& tok, int tet, int face) {
  const std::string context =
      "token '" + tok + "' (tetrahedron " + std::to_string(tet) + ", face " +
      std::to_string(face) + ")";
  if (tok == "b") return std::nullopt;
  const auto c1 = tok.find(':');
  const auto c2 = c1 == std::string::npos ? c1 : tok.find(':', c1 + 1);
  if (c2 == std::string::npos) throw ParseError("malformed " + context);
  Gluing g;
  g.tet = parse_int(tok.substr(0, c1), context);
  g.face = parse_int(tok.substr(c1 + 1, c2 - c1 - 1), context);
  const auto perm = Perm4::from_string(tok.substr(c2 + 1));
  if (!perm) throw ParseError("bad permutation in " + context);
  g.perm = *perm;
  return g;
}

}  // namespace

Triangulation read_triangulation(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) throw ParseError("empty input, expected 'tri <n>'");
  std::istringstream header(line);
  std::string word, count, extra;
  header >> word >> count;
  if (word != "tri" || count.empty() || (header >> extra))
    throw ParseError("expected header 'tri <n>', got '" + line + "'");
  const int n = parse_int(count, "header");

  GluingTable table(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) {
    if (!next_content_line(in, line))
      throw ParseError("expected " + std::to_string(n) + " tetrahedron lines, got " +
                       std::to_string(t));
    std::istringstream row(line);
    std::string tok;
    int f = 0;
    while (row >> tok) {
      if (f == 4) throw ParseError("more than 4 tokens on line for tetrahedron " + std::to_string(t));
      table[t][f] = parse_token(tok, t, f);
      ++f;
    }
    if (f != 4) throw ParseError("fewer than 4 tokens on line for tetrahedron " + std::to_string(t));
  }
  return Triangulation::from_table(std::move(table));
}

Triangulation parse_triangulation(const std::string& text) {
  std::istringstream in(text);
  Triangulation t = read_triangulation(in);
  std::string rest;
  if (next_content_line(in, rest))
    throw ParseError("unexpected content after triangulation: '" + rest + "'");
  return t;
}

void write_triangulation(std::ostream& out, const Triangulation& tri) {
  out << "tri " << tri.size() << '\n';
  for (int t = 0; t < tri.size(); ++t) {
    for (int f = 0; f < 4; ++f) {
      if (f) out << ' ';
      const auto& g = tri.gluing(t, f);
      if (!g)
        out << 'b';
      else
        out << g->tet << ':' << g->face << ':' << g->perm.str();
    }
    out << '\n';
  }
}

std::string to_text(const Triangulation& tri) {
  std::ostringstream out;
  write_triangulation(out, tri);
  return out.str();
}

}  // namespace nsenum
