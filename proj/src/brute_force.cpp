#include <boost/multiprecision/cpp_int.hpp>

#include "nsenum/enumerate.hpp"

namespace nsenum {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// Kernel of `m` restricted to the columns in `cols`, if it is exactly one
// dimensional. Returns the spanning vector over those columns.
std::optional<std::vector<Rational>> one_dim_kernel(const MatchingSystem& m,
                                                    const std::vector<int>& cols) {
  const std::size_t k = cols.size();
  std::vector<std::vector<Rational>> a;
  a.reserve(m.rows.size());
  for (const auto& row : m.rows) {
    std::vector<Rational> r(k);
    bool any = false;
    for (std::size_t j = 0; j < k; ++j) {
      r[j] = row[cols[j]];
      if (row[cols[j]] != 0) any = true;
    }
    if (any) a.push_back(std::move(r));
  }

  // Reduced row echelon form.
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < k && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[rank], a[piv]);
    const Rational lead = a[rank][c];
    for (auto& x : a[rank]) x /= lead;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == rank || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < k; ++j) a[i][j] -= f * a[rank][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++rank;
  }
  if (k - rank != 1) return std::nullopt;

  std::vector<char> is_pivot(k, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<Rational> x(k);
  x[free_col] = 1;
  for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = -a[r][free_col];
  return x;
}

}  // namespace

EnumerationResult brute_force_vertices(const Triangulation& tri, const MatchingSystem* extra) {
  const int dim = kCoordsPerTet * tri.size();
  if (dim > kBruteForceMaxCoords)
    throw ResourceLimitExceeded("brute force oracle limited to " +
                                std::to_string(kBruteForceMaxCoords) + " coordinates, got " +
                                std::to_string(dim));
  MatchingSystem eqs = matching_matrix(tri);
  if (extra) eqs.append(*extra);

  EnumerationResult result;
  const std::uint32_t limit = std::uint32_t{1} << dim;
  for (std::uint32_t support = 1; support < limit; ++support) {
    std::vector<int> cols;
    for (int i = 0; i < dim; ++i)
      if (support & (std::uint32_t{1} << i)) cols.push_back(i);

    NormalVector probe = NormalVector::zero(tri.size());
    for (int c : cols) probe[c] = 1;
    if (!is_admissible(probe)) continue;

    const auto kernel = one_dim_kernel(eqs, cols);
    if (!kernel) continue;
    const auto& x = *kernel;
    const int sign = x[0] > 0 ? 1 : -1;
    bool strict = true;
    for (const auto& xi : x)
      if (xi == 0 || (xi > 0) != (sign > 0)) {
        strict = false;
        break;
      }
    if (!strict) continue;

    // Clear denominators, then reduce to a primitive vector.
    Integer den = 1;
    for (const auto& xi : x) den = lcm(den, Integer(denominator(xi)));
    NormalVector v = NormalVector::zero(tri.size());
    Integer g = 0;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const Rational scaled = x[j] * den * sign;
      v[cols[j]] = numerator(scaled);
      g = gcd(g, v[cols[j]]);
    }
    for (auto& c : v.coords) c /= g;
    result.surfaces.push_back(Ray::from_vector(std::move(v)));
  }
  std::sort(result.surfaces.begin(), result.surfaces.end(),
            [](const Ray& a, const Ray& b) { return a.vector < b.vector; });
  result.sigma = result.surfaces.size();
  return result;
}

}  // namespace nsenum
