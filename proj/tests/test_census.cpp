#include <map>
#include <set>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "nsenum/bounds.hpp"
#include "nsenum/census.hpp"

using namespace nsenum;

namespace {

// Connected 4-regular multigraphs on n nodes up to isomorphism, counted by
// brute force over every perfect matching of the 4n face slots.
std::size_t brute_pairing_classes(int n) {
  const int slots = 4 * n;
  std::set<std::vector<int>> classes;
  std::vector<int> mate(static_cast<std::size_t>(slots), -1);
  std::vector<int> perm(static_cast<std::size_t>(n));

  auto canonical = [&]() {
    std::vector<int> adj(static_cast<std::size_t>(n * n), 0);
    for (int s = 0; s < slots; ++s)
      if (s < mate[s]) {
        const int a = s / 4, b = mate[s] / 4;
        ++adj[a * n + b];
        if (a != b) ++adj[b * n + a];
      }
    // Connectivity.
    std::vector<int> seen{0};
    std::vector<bool> in(static_cast<std::size_t>(n), false);
    in[0] = true;
    for (std::size_t i = 0; i < seen.size(); ++i)
      for (int j = 0; j < n; ++j)
        if (adj[seen[i] * n + j] && !in[j]) {
          in[j] = true;
          seen.push_back(j);
        }
    if (static_cast<int>(seen.size()) != n) return std::vector<int>{};
    std::vector<int> best;
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
      std::vector<int> m(static_cast<std::size_t>(n * n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[perm[i] * n + perm[j]] = adj[i * n + j];
      if (best.empty() || m < best) best = m;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  };

  auto rec = [&](auto&& self) -> void {
    int s = 0;
    while (s < slots && mate[s] >= 0) ++s;
    if (s == slots) {
      auto c = canonical();
      if (!c.empty()) classes.insert(std::move(c));
      return;
    }
    for (int t = s + 1; t < slots; ++t) {
      if (mate[t] >= 0) continue;
      mate[s] = t;
      mate[t] = s;
      self(self);
      mate[s] = mate[t] = -1;
    }
  };
  rec(rec);
  return classes.size();
}

CensusStats stats_of(int n, std::vector<std::size_t> sigmas) {
  std::vector<CensusRecord> recs;
  for (std::size_t i = 0; i < sigmas.size(); ++i)
    recs.push_back({n, i + 1, "s" + std::to_string(i), sigmas[i]});
  return census_stats(recs, n);
}

}  // namespace

TEST_CASE("face pairings match brute force") {
  for (int n = 1; n <= 3; ++n) {
    const auto fps = face_pairings(n);
    CHECK(fps.size() == brute_pairing_classes(n));
    for (const auto& fp : fps) {
      CHECK(fp.pairs.size() == 2u * static_cast<std::size_t>(n));
      std::set<std::pair<int, int>> used;
      for (const auto& [a, b] : fp.pairs) {
        used.insert(a);
        used.insert(b);
      }
      CHECK(used.size() == 4u * static_cast<std::size_t>(n));
    }
  }
  CHECK(face_pairings(4).size() == 10);
}

TEST_CASE("census invariants") {
  for (int n = 1; n <= 3; ++n) {
    const auto tris = generate_closed(n);
    std::set<std::string> sigs;
    for (const auto& t : tris) {
      CHECK(t.size() == n);
      CHECK(t.is_closed());
      CHECK(is_valid_3manifold(t));
      CHECK(is_connected(t));
      sigs.insert(iso_signature(t));
    }
    CHECK(sigs.size() == tris.size());
    CHECK(std::is_sorted(tris.begin(), tris.end(), [](const auto& a, const auto& b) {
      return iso_signature(a) < iso_signature(b);
    }));
  }
  CHECK(generate_closed(1).size() == 4);
  CHECK(generate_closed(2).size() == 17);
  CHECK(generate_closed(3).size() == 81);
}

TEST_CASE("census threads do not change the result") {
  CensusOptions one, many;
  many.threads = 3;
  const Census a = run_census(3, one);
  const Census b = run_census(3, many);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].isosig == b.records[i].isosig);
    CHECK(a.records[i].sigma == b.records[i].sigma);
    CHECK(a.records[i].index == i + 1);
  }
}

TEST_CASE("census guards") {
  CHECK_THROWS_AS(generate_closed(6), ResourceLimitExceeded);
  CensusOptions small;
  small.size_limit = 2;
  CHECK_THROWS_AS(generate_closed(3, small), ResourceLimitExceeded);
  CHECK_THROWS_AS(generate_closed(0), std::invalid_argument);
}

TEST_CASE("census sigma within bounds") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& r : run_census(n).records) {
      CHECK(Integer(r.sigma) <= theorem_bound(n));
      CHECK(Integer(r.sigma) <= hass_bound(n));
    }
}

TEST_CASE("statistics") {
  const CensusStats s = stats_of(1, {1, 2, 2, 3});
  CHECK(s.count == 4);
  CHECK(s.sum == 8);
  CHECK(s.sum_squares == 18);
  CHECK(s.min == 1);
  CHECK(s.max == 3);
  CHECK(s.mean() == doctest::Approx(2.0));
  // Population deviation: sqrt(2/4).
  CHECK(s.stddev() == doctest::Approx(std::sqrt(0.5)));

  const CensusStats one = census_stats(1);
  CHECK(one.count == 4);
  CHECK(one.mean() == doctest::Approx(2.0));
  CHECK(one.stddev() == doctest::Approx(0.7071).epsilon(0.001));
}

TEST_CASE("conjecture checks") {
  // Means 2, 3, 4.5, 5.2; max at n = 4 equals the worst-case value 18.
  std::vector<CensusStats> ok{stats_of(1, {1, 3}), stats_of(2, {2, 4}), stats_of(3, {4, 5}),
                              stats_of(4, {2, 2, 2, 2, 18})};
  ConjectureReport rep = conjecture_checks(ok);
  CHECK(rep.all_hold());
  int skipped = 0;
  for (const auto& l : rep.lines) skipped += l.skipped;
  CHECK(skipped == 3);

  std::vector<CensusStats> bad{stats_of(1, {1}), stats_of(2, {1}), stats_of(3, {5})};
  CHECK_FALSE(conjecture_checks(bad).all_hold());

  std::vector<CensusStats> wrong_max = ok;
  wrong_max[3] = stats_of(4, {2, 2, 2, 2, 17});
  CHECK_FALSE(conjecture_checks(wrong_max).all_hold());

  CHECK_THROWS(conjecture_checks({stats_of(2, {1})}));
}

TEST_CASE("census output formats") {
  const Census c = run_census(1);
  std::ostringstream csv;
  write_census_csv(csv, c.records);
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "n,index,isosig,sigma");
  int rows = 0;
  while (std::getline(lines, line)) {
    CHECK(line.rfind("1,", 0) == 0);
    ++rows;
  }
  CHECK(rows == 4);

  std::ostringstream js;
  write_stats_json(js, census_stats(c.records, 1));
  const auto j = nlohmann::json::parse(js.str());
  CHECK(j["count"] == 4);
  CHECK(j["mean"].get<double>() == doctest::Approx(2.0));
  CHECK(j["stddev"].get<double>() == doctest::Approx(0.71));
  CHECK(j["min"] == 1);
  CHECK(j["max"] == 3);

  std::ostringstream txt;
  write_stats_text(txt, census_stats(c.records, 1));
  CHECK(txt.str().find("mean    2.00") != std::string::npos);
}
