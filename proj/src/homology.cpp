#include <algorithm>

#include "nsenum/triangulation.hpp"

namespace nsenum {

namespace {

using Matrix = std::vector<std::vector<Integer>>;

void swap_cols(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

std::vector<Integer> invariant_factors(Matrix m) {
  std::vector<Integer> diag;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;

  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    // Smallest nonzero entry of the remaining block becomes the pivot.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = k; i < rows; ++i)
      for (std::size_t j = k; j < cols; ++j)
        if (m[i][j] != 0 && (pi == rows || abs(m[i][j]) < abs(m[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    std::swap(m[k], m[pi]);
    swap_cols(m, k, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (m[i][k] == 0) continue;
        const Integer q = m[i][k] / m[k][k];
        for (std::size_t j = k; j < cols; ++j) m[i][j] -= q * m[k][j];
        if (m[i][k] != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (m[k][j] == 0) continue;
        const Integer q = m[k][j] / m[k][k];
        for (std::size_t i = k; i < rows; ++i) m[i][j] -= q * m[i][k];
        if (m[k][j] != 0) clean = false;
      }
      if (clean) break;
      // A remainder survived: move the smallest one in the pivot cross up.
      std::size_t bi = k, bj = k;
      for (std::size_t i = k + 1; i < rows; ++i)
        if (m[i][k] != 0 && abs(m[i][k]) < abs(m[bi][bj])) {
          bi = i;
          bj = k;
        }
      for (std::size_t j = k + 1; j < cols; ++j)
        if (m[k][j] != 0 && abs(m[k][j]) < abs(m[bi][bj])) {
          bi = k;
          bj = j;
        }
      std::swap(m[k], m[bi]);
      swap_cols(m, k, bj);
    }
    diag.push_back(abs(m[k][k]));
  }

  // Diagonal to divisibility chain.
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      const Integer g = gcd(diag[i], diag[j]);
      const Integer l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

std::string HomologyGroup::str() const {
  std::vector<std::string> parts;
  if (rank == 1)
    parts.push_back("Z");
  else if (rank > 1)
    parts.push_back(std::to_string(rank) + " Z");
  for (const auto& t : torsion) parts.push_back("Z_" + t.str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

HomologyGroup homology_h1(const Triangulation& tri) {
  const Skeleton s = skeleton(tri);
  const std::size_t nv = s.vertices.size();
  const std::size_t ne = s.edges.size();
  const std::size_t nf = s.faces.size();

  Matrix d1(nv, std::vector<Integer>(ne));
  for (std::size_t e = 0; e < ne; ++e) {
    const TetEdge m = s.edges[e].members.front();
    auto [lo, hi] = kEdgeVertices[m.edge];
    if (s.edge_sign[m.tet][m.edge] < 0) std::swap(lo, hi);
    d1[s.vertex_of[m.tet][hi]][e] += 1;
    d1[s.vertex_of[m.tet][lo]][e] -= 1;
  }

  Matrix d2(ne, std::vector<Integer>(nf));
  for (std::size_t f = 0; f < nf; ++f) {
    const auto& fc = s.faces[f];
    std::array<int, 3> v{};
    int k = 0;
    for (int i = 0; i < 4; ++i)
      if (i != fc.face) v[k++] = i;
    // boundary of [v0 v1 v2] = [v1 v2] - [v0 v2] + [v0 v1]
    const std::array<std::pair<int, int>, 3> terms{{{edge_index(v[1], v[2]), 1},
                                                    {edge_index(v[0], v[2]), -1},
                                                    {edge_index(v[0], v[1]), 1}}};
    for (auto [edge, coef] : terms)
      d2[s.edge_of[fc.tet][edge]][f] += coef * s.edge_sign[fc.tet][edge];
  }

  const auto f1 = invariant_factors(std::move(d1));
  const auto f2 = invariant_factors(std::move(d2));
  HomologyGroup h;
  h.rank = static_cast<int>(ne) - static_cast<int>(f1.size()) - static_cast<int>(f2.size());
  for (const auto& d : f2)
    if (d > 1) h.torsion.push_back(d);
  return h;
}

}  // namespace nsenum
