#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "nsenum/census.hpp"
#include "nsenum/constructions.hpp"

using namespace nsenum;

namespace {

Integer content(const NormalVector& v) {
  Integer g = 0;
  for (const auto& x : v.coords) g = gcd(g, x);
  return g;
}

bool contains(const std::vector<int>& big, const std::vector<int>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Every output is a primitive admissible solution, the list is sorted, and
// each ray is extremal: its support carries a one-dimensional solution space
// and no other output has support inside it.
void check_output(const Triangulation& t, const EnumerationResult& r,
                  const MatchingSystem* extra = nullptr) {
  MatchingSystem m = matching_matrix(t);
  if (extra) m.append(*extra);
  CHECK(r.sigma == r.surfaces.size());
  CHECK(std::is_sorted(r.surfaces.begin(), r.surfaces.end(),
                       [](const Ray& a, const Ray& b) { return a.vector < b.vector; }));
  for (std::size_t i = 0; i < r.surfaces.size(); ++i) {
    const NormalVector& v = r.surfaces[i].vector;
    CHECK_FALSE(v.is_zero());
    CHECK(m.satisfied_by(v));
    CHECK(is_admissible(v));
    CHECK(content(v) == 1);
    for (const auto& x : v.coords) CHECK(x >= 0);
    const auto supp = testing::support_of(v);
    CHECK(testing::restricted_nullity(m.rows, supp) == 1);
    for (std::size_t j = 0; j < r.surfaces.size(); ++j)
      if (j != i) CHECK_FALSE(contains(supp, testing::support_of(r.surfaces[j].vector)));
    std::vector<int> zeros;
    for (int c = 0; c < v.size(); ++c)
      if (v[c] == 0) zeros.push_back(c);
    CHECK(r.surfaces[i].zero_set == zeros);
  }
}

}  // namespace

TEST_CASE("lone tetrahedron") {
  const Triangulation t = Triangulation::make(1, {});
  const auto r = enumerate(t);
  // Four vertex discs and three quads.
  CHECK(r.sigma == 7);
  CHECK(r.surfaces == brute_force_vertices(t).surfaces);
  check_output(t, r);
}

TEST_CASE("double description agrees with the exhaustive oracle") {
  std::vector<Triangulation> cases = generate_closed(1);
  cases.push_back(pillow());
  cases.push_back(Triangulation::make(1, {}));
  for (const auto& t : generate_closed(2))
    if (7 * t.size() <= kBruteForceMaxCoords) cases.push_back(t);
  for (const auto& t : cases) {
    const auto dd = enumerate(t);
    const auto bf = brute_force_vertices(t);
    CHECK(dd.surfaces == bf.surfaces);
    CHECK(dd.sigma == bf.sigma);
    check_output(t, dd);
  }
}

TEST_CASE("oracle agrees with extra equations") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coef(-1, 1);
  for (const auto& t : {pillow(), generate_closed(1)[2], Triangulation::make(1, {})}) {
    for (int trial = 0; trial < 4; ++trial) {
      MatchingSystem extra;
      extra.columns = 7 * t.size();
      std::vector<std::int64_t> row(static_cast<std::size_t>(extra.columns));
      for (auto& x : row) x = coef(rng);
      extra.add_row(row, {});
      const auto dd = enumerate(t, &extra);
      CHECK(dd.surfaces == brute_force_vertices(t, &extra).surfaces);
      check_output(t, dd, &extra);
    }
  }
}

TEST_CASE("oracle size guard") {
  CHECK_THROWS_AS(brute_force_vertices(four_block()), ResourceLimitExceeded);
}

TEST_CASE("output is independent of row order and threads") {
  std::mt19937 rng(4);
  for (const auto& t : {four_block(), x_k(1), s2xs1(), generate_closed(3)[40]}) {
    const MatchingSystem eqs = matching_matrix(t);
    const auto ref = enumerate_cone(eqs, t.size());
    for (unsigned threads : {1u, 2u, 4u}) {
      MatchingSystem shuffled = eqs;
      std::shuffle(shuffled.rows.begin(), shuffled.rows.end(), rng);
      EnumerationOptions o;
      o.threads = threads;
      const auto r = enumerate_cone(shuffled, t.size(), o);
      CHECK(r.surfaces == ref.surfaces);
      CHECK(r.stats.peak_rays == ref.stats.peak_rays);
      CHECK(r.stats.hyperplanes == ref.stats.hyperplanes);
    }
  }
}

TEST_CASE("larger instances are extremal") {
  for (const auto& t : {four_block(), x_k(1), s2xs1()}) check_output(t, enumerate(t));
  const Triangulation b = four_block();
  const MatchingSystem eq = equalize_boundary_equations(b);
  const auto r = enumerate(b, &eq);
  CHECK(r.sigma == 18);
  check_output(b, r, &eq);
}

TEST_CASE("known counts") {
  CHECK(sigma(four_block()) == 17);
  CHECK(sigma(x_k(1)) == 18);
  CHECK(sigma(x_k(2)) == 291);
  const std::size_t s = sigma(s2xs1());
  CHECK(s >= 2);
  CHECK(s <= 7);
}

TEST_CASE("resource guard") {
  EnumerationOptions o;
  o.max_rays = 10;
  CHECK_THROWS_AS(enumerate(x_k(1), nullptr, o), ResourceLimitExceeded);
}

TEST_CASE("width mismatch is rejected") {
  MatchingSystem m;
  m.columns = 5;
  m.rows.push_back({1, -1, 0, 0, 0});
  CHECK_THROWS_AS(enumerate_cone(m, 1), std::invalid_argument);
}

TEST_CASE("stats are populated") {
  const auto r = enumerate(x_k(1));
  CHECK(r.stats.hyperplanes > 0);
  CHECK(r.stats.peak_rays >= r.sigma);
  CHECK(r.stats.elapsed_seconds >= 0.0);
}
