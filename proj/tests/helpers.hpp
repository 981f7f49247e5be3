#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <random>
#include <vector>

#include "nsenum/normal.hpp"
#include "nsenum/triangulation.hpp"

namespace testing {

using nsenum::Perm4;
using nsenum::Triangulation;

inline Triangulation random_relabel(const Triangulation& t, std::mt19937& rng) {
  std::vector<int> tets(static_cast<std::size_t>(t.size()));
  std::iota(tets.begin(), tets.end(), 0);
  std::shuffle(tets.begin(), tets.end(), rng);
  std::vector<Perm4> maps;
  std::uniform_int_distribution<int> pick(0, 23);
  for (int i = 0; i < t.size(); ++i) maps.push_back(Perm4::from_index(pick(rng)));
  return t.relabel(tets, maps);
}

// Exhaustive isomorphism test over every tetrahedron permutation and every
// vertex relabelling; only for n <= 2.
inline bool isomorphic_brute(const Triangulation& a, const Triangulation& b) {
  if (a.size() != b.size()) return false;
  const int n = a.size();
  std::vector<int> tets(static_cast<std::size_t>(n));
  std::iota(tets.begin(), tets.end(), 0);
  do {
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    while (true) {
      std::vector<Perm4> maps;
      for (int i = 0; i < n; ++i) maps.push_back(Perm4::from_index(idx[i]));
      if (a.relabel(tets, maps) == b) return true;
      int k = 0;
      while (k < n && ++idx[k] == 24) idx[k++] = 0;
      if (k == n) break;
    }
  } while (std::next_permutation(tets.begin(), tets.end()));
  return false;
}

// Dimension of the kernel of the rows restricted to the columns in `support`,
// by exact rational elimination.
inline int restricted_nullity(const std::vector<std::vector<std::int64_t>>& rows,
                              const std::vector<int>& support) {
  using Q = boost::multiprecision::cpp_rational;
  std::vector<std::vector<Q>> m;
  for (const auto& r : rows) {
    std::vector<Q> row;
    for (int c : support) row.emplace_back(r[c]);
    m.push_back(std::move(row));
  }
  const int cols = static_cast<int>(support.size());
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(m.size()); ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Q f = m[r][c] / m[rank][c];
      for (int j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return cols - rank;
}

inline std::vector<int> support_of(const nsenum::NormalVector& v) {
  std::vector<int> s;
  for (int i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.push_back(i);
  return s;
}

}  // namespace testing
