#include <algorithm>
#include <numeric>

#include "nsenum/triangulation.hpp"

namespace nsenum {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

// Tracks orientation parity relative to the root alongside membership.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(int n)
      : parent_(static_cast<std::size_t>(n)), parity_(static_cast<std::size_t>(n), 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::pair<int, int> find(int x) {
    int par = 0;
    int r = x;
    while (parent_[r] != r) {
      par ^= parity_[r];
      r = parent_[r];
    }
    // Compress with corrected parities.
    int cur = x;
    int cur_par = par;
    while (parent_[cur] != cur) {
      const int next = parent_[cur];
      const int next_par = cur_par ^ parity_[cur];
      parent_[cur] = r;
      parity_[cur] = cur_par;
      cur = next;
      cur_par = next_par;
    }
    return {r, par};
  }
  /// Records that a and b differ by `rel`; returns false on contradiction.
  bool unite(int a, int b, int rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == rel;
    if (ra > rb) {
      std::swap(ra, rb);
      std::swap(pa, pb);
    }
    parent_[rb] = ra;
    parity_[rb] = pa ^ pb ^ rel;
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> parity_;
};

// Renumbers union-find roots densely in order of first appearance.
std::vector<int> dense_ids(const std::vector<int>& roots, int& count) {
  std::vector<int> id(roots.size(), -1);
  std::vector<int> out(roots.size());
  count = 0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (id[roots[i]] < 0) id[roots[i]] = count++;
    out[i] = id[roots[i]];
  }
  return out;
}

}  // namespace

int Skeleton::boundary_vertex_count() const {
  return static_cast<int>(
      std::count_if(vertices.begin(), vertices.end(), [](const auto& v) { return v.boundary; }));
}

Skeleton skeleton(const Triangulation& tri) {
  const int n = tri.size();
  Skeleton s;
  s.vertex_of.resize(n);
  s.edge_of.resize(n);
  s.edge_sign.resize(n);
  s.face_of.resize(n);

  UnionFind vuf(4 * n);
  ParityUnionFind euf(6 * n);
  std::vector<int> bad_pairs;

  for (int t = 0; t < n; ++t) {
    for (int f = 0; f < 4; ++f) {
      const auto& g = tri.gluing(t, f);
      if (!g) continue;
      for (int v = 0; v < 4; ++v)
        if (v != f) vuf.unite(4 * t + v, 4 * g->tet + g->perm[v]);
      for (int e = 0; e < 6; ++e) {
        const int a = kEdgeVertices[e][0];
        const int b = kEdgeVertices[e][1];
        if (a == f || b == f) continue;
        const int pa = g->perm[a];
        const int pb = g->perm[b];
        const int rel = pa > pb ? 1 : 0;
        if (!euf.unite(6 * t + e, 6 * g->tet + edge_index(pa, pb), rel))
          bad_pairs.push_back(6 * t + e);
      }
    }
  }

  // Vertex classes.
  std::vector<int> roots(4 * static_cast<std::size_t>(n));
  for (int i = 0; i < 4 * n; ++i) roots[i] = vuf.find(i);
  int nv = 0;
  auto vid = dense_ids(roots, nv);
  s.vertices.resize(nv);
  for (int t = 0; t < n; ++t)
    for (int v = 0; v < 4; ++v) {
      s.vertex_of[t][v] = vid[4 * t + v];
      s.vertices[vid[4 * t + v]].corners.push_back({t, v});
    }

  // Edge classes.
  roots.assign(6 * static_cast<std::size_t>(n), 0);
  std::vector<int> parity(6 * static_cast<std::size_t>(n));
  for (int i = 0; i < 6 * n; ++i) std::tie(roots[i], parity[i]) = euf.find(i);
  int ne = 0;
  auto eid = dense_ids(roots, ne);
  s.edges.resize(ne);
  for (int t = 0; t < n; ++t)
    for (int e = 0; e < 6; ++e) {
      const int i = 6 * t + e;
      s.edge_of[t][e] = eid[i];
      s.edge_sign[t][e] = parity[i] ? -1 : 1;
      s.edges[eid[i]].members.push_back({t, e});
    }
  for (int i : bad_pairs) s.edges[eid[i]].valid = false;

  // Face classes.
  for (int t = 0; t < n; ++t) s.face_of[t].fill(-1);
  for (int t = 0; t < n; ++t)
    for (int f = 0; f < 4; ++f) {
      if (s.face_of[t][f] >= 0) continue;
      const int id = static_cast<int>(s.faces.size());
      const auto& g = tri.gluing(t, f);
      s.faces.push_back({t, f, !g});
      s.face_of[t][f] = id;
      if (g) s.face_of[g->tet][g->face] = id;
    }

  // Boundary flags.
  for (const auto& fc : s.faces) {
    if (!fc.boundary) continue;
    for (int v = 0; v < 4; ++v) {
      if (v == fc.face) continue;
      s.vertices[s.vertex_of[fc.tet][v]].boundary = true;
      for (int w = v + 1; w < 4; ++w)
        if (w != fc.face) s.edges[s.edge_of[fc.tet][edge_index(v, w)]].boundary = true;
    }
  }

  // Vertex link Euler characteristics: one triangle per corner, one link
  // edge per (face class, corner), one link vertex per edge-class end.
  for (auto& vc : s.vertices) vc.link_euler = static_cast<long>(vc.corners.size());
  for (const auto& fc : s.faces)
    for (int v = 0; v < 4; ++v)
      if (v != fc.face) s.vertices[s.vertex_of[fc.tet][v]].link_euler -= 1;
  for (const auto& ec : s.edges) {
    const TetEdge m = ec.members.front();
    const auto [a, b] = kEdgeVertices[m.edge];
    if (ec.valid) {
      s.vertices[s.vertex_of[m.tet][a]].link_euler += 1;
      s.vertices[s.vertex_of[m.tet][b]].link_euler += 1;
    } else {
      s.vertices[s.vertex_of[m.tet][a]].link_euler += 1;
    }
  }
  return s;
}

bool is_valid_3manifold(const Triangulation& /*tri*/, const Skeleton& skel) {
  for (const auto& e : skel.edges)
    if (!e.valid) return false;
  for (const auto& v : skel.vertices)
    if (v.link_euler != (v.boundary ? 1 : 2)) return false;
  return true;
}

bool is_valid_3manifold(const Triangulation& tri) {
  return is_valid_3manifold(tri, skeleton(tri));
}

bool is_connected(const Triangulation& tri) {
  const int n = tri.size();
  if (n == 0) return true;
  UnionFind uf(n);
  for (int t = 0; t < n; ++t)
    for (int f = 0; f < 4; ++f)
      if (const auto& g = tri.gluing(t, f)) uf.unite(t, g->tet);
  for (int t = 0; t < n; ++t)
    if (uf.find(t) != 0) return false;
  return true;
}

long euler_characteristic(const Triangulation& tri) {
  const Skeleton s = skeleton(tri);
  return static_cast<long>(s.vertices.size()) - static_cast<long>(s.edges.size()) +
         static_cast<long>(s.faces.size()) - tri.size();
}

}  // namespace nsenum
