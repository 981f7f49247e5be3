#include "nsenum/normal.hpp"

#include <sstream>

namespace nsenum {

namespace {

constexpr int kPairing[4][4] = {
    {-1, 0, 1, 2},
    {0, -1, 2, 1},
    {1, 2, -1, 0},
    {2, 1, 0, -1},
};

void require_size(const NormalVector& v, const Triangulation& tri) {
  if (v.size() != kCoordsPerTet * tri.size())
    throw std::invalid_argument("normal vector has " + std::to_string(v.size()) +
                                " coordinates, expected " +
                                std::to_string(kCoordsPerTet * tri.size()));
}

void require_matching(const NormalVector& v, const Triangulation& tri) {
  require_size(v, tri);
  if (!matching_matrix(tri).satisfied_by(v))
    throw InconsistentVector("vector does not satisfy the matching equations");
}

Integer weight_on(const NormalVector& v, int tet, int edge) {
  const auto [a, b] = kEdgeVertices[edge];
  const int together = quad_pairing(a, b);
  Integer w = v[tri_coord(tet, a)] + v[tri_coord(tet, b)];
  for (int q = 0; q < 3; ++q)
    if (q != together) w += v[quad_coord(tet, q)];
  return w;
}

}  // namespace

int quad_pairing(int a, int b) { return kPairing[a][b]; }

int corner_quad(int v, int face) { return kPairing[v][face]; }

NormalVector NormalVector::from_ints(const std::vector<long>& values) {
  NormalVector v;
  v.coords.reserve(values.size());
  for (long x : values) v.coords.emplace_back(x);
  return v;
}

bool NormalVector::is_zero() const {
  for (const auto& c : coords)
    if (c != 0) return false;
  return true;
}

NormalVector NormalVector::operator+(const NormalVector& other) const {
  NormalVector out = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) out.coords[i] += other.coords[i];
  return out;
}

std::string to_string(const NormalVector& v) {
  std::string out;
  for (int i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += v[i].str();
  }
  return out;
}

NormalVector parse_normal_vector(const std::string& line) {
  std::istringstream in(line);
  NormalVector v;
  std::string tok;
  while (in >> tok) {
    if (tok.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("normal vector coordinates must be non-negative integers, got '" + tok +
                       "'");
    v.coords.emplace_back(tok);
  }
  if (v.size() % kCoordsPerTet != 0)
    throw ParseError("normal vector length " + std::to_string(v.size()) +
                     " is not a multiple of 7");
  return v;
}

void MatchingSystem::add_row(std::vector<std::int64_t> row, Origin origin) {
  rows.push_back(std::move(row));
  origins.push_back(origin);
}

void MatchingSystem::append(const MatchingSystem& other) {
  if (other.columns != columns && !other.rows.empty())
    throw std::invalid_argument("equation column counts differ");
  for (std::size_t i = 0; i < other.rows.size(); ++i) add_row(other.rows[i], other.origins[i]);
}

bool MatchingSystem::satisfied_by(const NormalVector& v) const {
  if (v.size() != columns) return false;
  for (const auto& row : rows) {
    Integer acc = 0;
    for (int j = 0; j < columns; ++j)
      if (row[j] != 0) acc += v[j] * row[j];
    if (acc != 0) return false;
  }
  return true;
}

MatchingSystem matching_matrix(const Triangulation& tri) {
  MatchingSystem m;
  m.columns = kCoordsPerTet * tri.size();
  for (int t = 0; t < tri.size(); ++t) {
    for (int f = 0; f < 4; ++f) {
      const auto& g = tri.gluing(t, f);
      if (!g) continue;
      // One representative direction per glued pair.
      if (g->tet < t || (g->tet == t && g->face < f)) continue;
      for (int v = 0; v < 4; ++v) {
        if (v == f) continue;
        const int pv = g->perm[v];
        std::vector<std::int64_t> row(static_cast<std::size_t>(m.columns), 0);
        row[tri_coord(t, v)] += 1;
        row[quad_coord(t, corner_quad(v, f))] += 1;
        row[tri_coord(g->tet, pv)] -= 1;
        row[quad_coord(g->tet, corner_quad(pv, g->face))] -= 1;
        m.add_row(std::move(row), {MatchingSystem::Origin::Kind::FaceCorner, t, f, v});
      }
    }
  }
  return m;
}

MatchingSystem parse_equations(const std::string& text, int columns) {
  MatchingSystem m;
  m.columns = columns;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    std::istringstream row_in(line);
    std::vector<std::int64_t> row;
    std::string tok;
    while (row_in >> tok) {
      try {
        std::size_t used = 0;
        row.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError("bad equation coefficient '" + tok + "'");
      }
    }
    if (static_cast<int>(row.size()) != columns)
      throw ParseError("equation has " + std::to_string(row.size()) + " coefficients, expected " +
                       std::to_string(columns));
    m.add_row(std::move(row), {});
  }
  return m;
}

bool is_admissible(const NormalVector& v) {
  for (int t = 0; t < v.tetrahedra(); ++t) {
    int nonzero = 0;
    for (int q = 0; q < 3; ++q)
      if (v[quad_coord(t, q)] != 0) ++nonzero;
    if (nonzero > 1) return false;
  }
  return true;
}

Integer corner_arcs(const NormalVector& v, int tet, int face, int corner) {
  return v[tri_coord(tet, corner)] + v[quad_coord(tet, corner_quad(corner, face))];
}

Integer edge_weight(const NormalVector& v, const Triangulation& tri, int edge_class) {
  require_matching(v, tri);
  return edge_weight(v, tri, skeleton(tri), edge_class);
}

Integer edge_weight(const NormalVector& v, const Triangulation& tri, const Skeleton& skel,
                    int edge_class) {
  require_size(v, tri);
  const auto& members = skel.edges.at(static_cast<std::size_t>(edge_class)).members;
  const Integer w = weight_on(v, members.front().tet, members.front().edge);
  for (const auto& m : members)
    if (weight_on(v, m.tet, m.edge) != w)
      throw InconsistentVector("edge weights disagree around edge class " +
                               std::to_string(edge_class));
  return w;
}

NormalVector vertex_link(const Triangulation& tri, int vertex_class) {
  const Skeleton s = skeleton(tri);
  NormalVector v = NormalVector::zero(tri.size());
  for (const auto& c : s.vertices.at(static_cast<std::size_t>(vertex_class)).corners)
    v[tri_coord(c.tet, c.vertex)] = 1;
  return v;
}

Integer euler_char(const NormalVector& v, const Triangulation& tri) {
  require_matching(v, tri);
  return euler_char(v, tri, skeleton(tri));
}

Integer euler_char(const NormalVector& v, const Triangulation& tri, const Skeleton& skel) {
  require_size(v, tri);
  Integer discs = 0;
  for (const auto& c : v.coords) discs += c;
  Integer arcs = 0;
  for (const auto& fc : skel.faces)
    for (int corner = 0; corner < 4; ++corner)
      if (corner != fc.face) arcs += corner_arcs(v, fc.tet, fc.face, corner);
  Integer points = 0;
  for (std::size_t e = 0; e < skel.edges.size(); ++e)
    points += edge_weight(v, tri, skel, static_cast<int>(e));
  return points - arcs + discs;
}

BoundaryProfile boundary_profile(const NormalVector& v, const Triangulation& tri) {
  require_size(v, tri);
  const Skeleton s = skeleton(tri);
  BoundaryProfile prof;
  std::vector<int> slot(s.vertices.size(), -1);
  for (std::size_t c = 0; c < s.vertices.size(); ++c) {
    if (!s.vertices[c].boundary) continue;
    slot[c] = static_cast<int>(prof.entries.size());
    prof.entries.push_back({static_cast<int>(c), {}, true, 0});
  }
  for (const auto& fc : s.faces) {
    if (!fc.boundary) continue;
    for (int corner = 0; corner < 4; ++corner) {
      if (corner == fc.face) continue;
      auto& entry = prof.entries[slot[s.vertex_of[fc.tet][corner]]];
      entry.corner_counts.push_back(corner_arcs(v, fc.tet, fc.face, corner));
    }
  }
  for (auto& e : prof.entries) {
    e.multiplicity = e.corner_counts.front();
    for (const auto& c : e.corner_counts)
      if (c != e.multiplicity) e.consistent = false;
    if (!e.consistent) prof.consistent = false;
  }
  return prof;
}

MatchingSystem equalize_boundary_equations(const Triangulation& tri) {
  const Skeleton s = skeleton(tri);
  MatchingSystem m;
  m.columns = kCoordsPerTet * tri.size();

  // Representative boundary corner (first in face order) for each class.
  std::vector<char> seen(s.vertices.size(), 0);
  std::vector<int> order;
  std::vector<std::pair<int, Corner>> rep_of(s.vertices.size());  // (face, corner)
  for (const auto& fc : s.faces) {
    if (!fc.boundary) continue;
    for (int corner = 0; corner < 4; ++corner) {
      if (corner == fc.face) continue;
      const int c = s.vertex_of[fc.tet][corner];
      if (seen[c]) continue;
      seen[c] = 1;
      rep_of[c] = {fc.face, Corner{fc.tet, corner}};
    }
  }
  for (std::size_t c = 0; c < s.vertices.size(); ++c)
    if (seen[c]) order.push_back(static_cast<int>(c));

  auto add_form = [](std::vector<std::int64_t>& row, int face, Corner c, int sign) {
    row[tri_coord(c.tet, c.vertex)] += sign;
    row[quad_coord(c.tet, corner_quad(c.vertex, face))] += sign;
  };
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    std::vector<std::int64_t> row(static_cast<std::size_t>(m.columns), 0);
    const auto [fa, ca] = rep_of[order[i]];
    const auto [fb, cb] = rep_of[order[i + 1]];
    add_form(row, fa, ca, 1);
    add_form(row, fb, cb, -1);
    m.add_row(std::move(row),
              {MatchingSystem::Origin::Kind::BoundaryEqualizer, ca.tet, fa, ca.vertex});
  }
  return m;
}

}  // namespace nsenum
