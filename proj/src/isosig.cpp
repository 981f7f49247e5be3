#include <algorithm>
#include <numeric>

#include "nsenum/triangulation.hpp"

namespace nsenum {

namespace {

constexpr int kBoundaryCode = -1;

// Relabels the component containing `start` by breadth-first search, giving
// `start` index 0 with vertex map `seed`. Each newly reached tetrahedron is
// labelled so that the gluing that discovered it reads as the identity.
// Returns false as soon as the code is known to exceed `best`.
bool canonical_code(const Triangulation& tri, int start, Perm4 seed,
                    const std::vector<int>* best, std::vector<int>& code,
                    std::vector<int>& new_index, std::vector<Perm4>& vmap,
                    std::vector<int>& order) {
  code.clear();
  order.clear();
  order.push_back(start);
  new_index[start] = 0;
  vmap[start] = seed;
  bool strictly_less = (best == nullptr);
  bool ok = true;

  for (std::size_t i = 0; i < order.size() && ok; ++i) {
    const int t = order[i];
    const Perm4 sigma = vmap[t];
    const Perm4 sigma_inv = sigma.inverse();
    for (int nf = 0; nf < 4; ++nf) {
      const int f = sigma_inv[nf];
      const auto& g = tri.gluing(t, f);
      int value = kBoundaryCode;
      if (g) {
        const int u = g->tet;
        if (new_index[u] < 0) {
          new_index[u] = static_cast<int>(order.size());
          order.push_back(u);
          vmap[u] = sigma * g->perm.inverse();
        }
        const Perm4 np = vmap[u] * g->perm * sigma_inv;
        value = new_index[u] * 96 + vmap[u][g->face] * 24 + np.index();
      }
      const std::size_t pos = code.size();
      code.push_back(value);
      if (!strictly_less) {
        if (value < (*best)[pos])
          strictly_less = true;
        else if (value > (*best)[pos]) {
          ok = false;
          break;
        }
      }
    }
  }
  for (int t : order) new_index[t] = -1;
  return ok && strictly_less;
}

std::string encode(const std::vector<int>& code) {
  std::string out = std::to_string(code.size() / 4) + ":";
  for (int value : code) {
    if (value == kBoundaryCode) {
      out += '_';
      continue;
    }
    out += std::to_string(value / 96);
    out += static_cast<char>('a' + (value / 24) % 4);
    out += static_cast<char>('A' + value % 24);
  }
  return out;
}

}  // namespace

std::string iso_signature(const Triangulation& tri) {
  const int n = tri.size();
  if (n == 0) return "empty";

  // Split into connected components.
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> members;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int c = static_cast<int>(members.size());
    members.emplace_back();
    std::vector<int> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      const int t = stack.back();
      stack.pop_back();
      members[c].push_back(t);
      for (int f = 0; f < 4; ++f)
        if (const auto& g = tri.gluing(t, f); g && comp[g->tet] < 0) {
          comp[g->tet] = c;
          stack.push_back(g->tet);
        }
    }
  }

  std::vector<int> new_index(static_cast<std::size_t>(n), -1);
  std::vector<Perm4> vmap(static_cast<std::size_t>(n));
  std::vector<int> order;
  std::vector<int> code;
  std::vector<std::string> parts;
  for (const auto& m : members) {
    std::vector<int> best;
    bool have = false;
    for (int start : m) {
      for (int p = 0; p < 24; ++p) {
        if (canonical_code(tri, start, Perm4::from_index(p), have ? &best : nullptr, code,
                           new_index, vmap, order)) {
          best = code;
          have = true;
        }
      }
    }
    parts.push_back(encode(best));
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += '+';
    out += parts[i];
  }
  return out;
}

}  // namespace nsenum
