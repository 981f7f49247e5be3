#include "nsenum/triangulation.hpp"

#include <numeric>

namespace nsenum {

namespace {

std::string face_name(int tet, int face) {
  return "(" + std::to_string(tet) + "," + std::to_string(face) + ")";
}

}  // namespace

Triangulation Triangulation::from_table(GluingTable table) {
  const int n = static_cast<int>(table.size());
  for (int t = 0; t < n; ++t) {
    for (int f = 0; f < 4; ++f) {
      const auto& g = table[t][f];
      if (!g) continue;
      if (g->tet < 0 || g->tet >= n || g->face < 0 || g->face > 3)
        throw TriangulationError("gluing target out of range at " + face_name(t, f), t, f);
      if (g->perm[f] != g->face)
        throw TriangulationError("permutation does not carry face " + std::to_string(f) +
                                     " to face " + std::to_string(g->face) + " at " +
                                     face_name(t, f),
                                 t, f);
      if (g->tet == t && g->face == f)
        throw TriangulationError("face glued to itself at " + face_name(t, f), t, f);
      const auto& back = table[g->tet][g->face];
      if (!back || back->tet != t || back->face != f || back->perm != g->perm.inverse())
        throw TriangulationError("missing or inconsistent reverse gluing for " +
                                     face_name(t, f),
                                 t, f);
    }
  }
  return Triangulation(std::move(table));
}

Triangulation Triangulation::make(int n, std::span<const FaceEntry> entries) {
  if (n < 0) throw TriangulationError("negative tetrahedron count", -1, -1);
  GluingTable table(static_cast<std::size_t>(n));
  for (const auto& e : entries) {
    if (e.tet < 0 || e.tet >= n || e.face < 0 || e.face > 3)
      throw TriangulationError("face index out of range at " + face_name(e.tet, e.face),
                               e.tet, e.face);
    table[e.tet][e.face] = e.gluing;
  }
  return from_table(std::move(table));
}

bool Triangulation::is_closed() const { return boundary_face_count() == 0; }

int Triangulation::boundary_face_count() const {
  int count = 0;
  for (const auto& row : table_)
    for (const auto& g : row)
      if (!g) ++count;
  return count;
}

Triangulation Triangulation::relabel(std::span<const int> tet_map,
                                     std::span<const Perm4> vertex_maps) const {
  GluingTable out(table_.size());
  for (int t = 0; t < size(); ++t) {
    const Perm4& vt = vertex_maps[t];
    for (int f = 0; f < 4; ++f) {
      const auto& g = table_[t][f];
      if (!g) continue;
      const Perm4& vu = vertex_maps[g->tet];
      out[tet_map[t]][vt[f]] =
          Gluing{tet_map[g->tet], vu[g->face], vu * g->perm * vt.inverse()};
    }
  }
  return from_table(std::move(out));
}

int TriangulationBuilder::add_tetrahedra(int count) {
  const int first = size();
  table_.resize(table_.size() + static_cast<std::size_t>(count));
  return first;
}

int TriangulationBuilder::append(const Triangulation& tri) {
  const int offset = size();
  for (const auto& row : tri.table()) {
    auto copy = row;
    for (auto& g : copy)
      if (g) g->tet += offset;
    table_.push_back(copy);
  }
  return offset;
}

TriangulationBuilder& TriangulationBuilder::join(int tet, int face, int other, Perm4 perm) {
  const int other_face = perm[face];
  if (table_[tet][face] || table_[other][other_face])
    throw TriangulationError("face already glued", tet, face);
  if (tet == other && face == other_face)
    throw TriangulationError("face glued to itself", tet, face);
  table_[tet][face] = Gluing{other, other_face, perm};
  table_[other][other_face] = Gluing{tet, face, perm.inverse()};
  return *this;
}

int edge_index(int a, int b) {
  if (a > b) std::swap(a, b);
  // 01->0 02->1 03->2 12->3 13->4 23->5
  return a == 0 ? b - 1 : a + b;
}

}  // namespace nsenum
