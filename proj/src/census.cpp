#include "nsenum/census.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"
#include "nsenum/bounds.hpp"

namespace nsenum {

namespace {

// --- Face pairing graphs -------------------------------------------------

// Multigraph key: loops per node, then upper-triangle multiplicities.
using GraphKey = std::vector<int>;

GraphKey key_of(int n, const std::vector<int>& loops, const std::vector<std::vector<int>>& adj,
                const std::vector<int>& perm) {
  // perm[new] = old
  GraphKey k;
  for (int i = 0; i < n; ++i) k.push_back(loops[perm[i]]);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) k.push_back(adj[perm[i]][perm[j]]);
  return k;
}

bool graph_connected(int n, const std::vector<std::vector<int>>& adj) {
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v)
      if (!seen[v] && adj[u][v] > 0) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
  }
  return count == n;
}

void enumerate_graphs(int n, int i, int j, std::vector<int>& deg, std::vector<int>& loops,
                      std::vector<std::vector<int>>& adj, std::set<GraphKey>& out) {
  if (i == n) {
    if (!graph_connected(n, adj)) return;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    GraphKey best = key_of(n, loops, adj, perm);
    while (std::next_permutation(perm.begin(), perm.end()))
      best = std::max(best, key_of(n, loops, adj, perm));
    out.insert(best);
    return;
  }
  if (j == i) {
    // Choose the loop count at node i, then its edges to later nodes.
    for (int l = deg[i] / 2; l >= 0; --l) {
      loops[i] = l;
      deg[i] -= 2 * l;
      enumerate_graphs(n, i, i + 1, deg, loops, adj, out);
      deg[i] += 2 * l;
    }
    loops[i] = 0;
    return;
  }
  if (j == n) {
    if (deg[i] == 0) enumerate_graphs(n, i + 1, i + 1, deg, loops, adj, out);
    return;
  }
  for (int m = std::min(deg[i], deg[j]); m >= 0; --m) {
    adj[i][j] = adj[j][i] = m;
    deg[i] -= m;
    deg[j] -= m;
    enumerate_graphs(n, i, j + 1, deg, loops, adj, out);
    deg[i] += m;
    deg[j] += m;
  }
  adj[i][j] = adj[j][i] = 0;
}

// --- Gluing search -------------------------------------------------------

// Parity union-find with undo, for incremental edge-identification checks.
class RollbackParityUF {
 public:
  explicit RollbackParityUF(int n)
      : parent_(static_cast<std::size_t>(n)),
        parity_(static_cast<std::size_t>(n), 0),
        rank_(static_cast<std::size_t>(n), 0),
        classes_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int classes() const { return classes_; }
  std::pair<int, int> find(int x) const {
    int par = 0;
    while (parent_[x] != x) {
      par ^= parity_[x];
      x = parent_[x];
    }
    return {x, par};
  }
  bool unite(int a, int b, int rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == rel;
    if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
    const bool bump = rank_[ra] == rank_[rb];
    parent_[rb] = ra;
    parity_[rb] = pa ^ pb ^ rel;
    if (bump) ++rank_[ra];
    --classes_;
    history_.push_back({rb, bump ? ra : -1});
    return true;
  }
  std::size_t checkpoint() const { return history_.size(); }
  void rollback(std::size_t mark) {
    while (history_.size() > mark) {
      const auto [child, bumped] = history_.back();
      history_.pop_back();
      parent_[child] = child;
      parity_[child] = 0;
      if (bumped >= 0) --rank_[bumped];
      ++classes_;
    }
  }

 private:
  std::vector<int> parent_;
  std::vector<int> parity_;
  std::vector<int> rank_;
  std::vector<std::pair<int, int>> history_;
  int classes_;
};

class GluingSearch {
 public:
  GluingSearch(const FacePairing& fp, std::map<std::string, Triangulation>& found)
      : fp_(fp),
        found_(found),
        euf_(6 * fp.n),
        vuf_(4 * fp.n),
        table_(static_cast<std::size_t>(fp.n)) {
    for (const auto& [a, b] : fp_.pairs) {
      std::vector<Perm4> perms;
      for (int i = 0; i < 24; ++i) {
        const Perm4 p = Perm4::from_index(i);
        if (p[a.second] == b.second) perms.push_back(p);
      }
      candidates_.push_back(std::move(perms));
    }
  }

  void run_from(std::size_t first_choice) {
    const auto mark = euf_.checkpoint();
    const auto vmark = vuf_.checkpoint();
    if (apply(0, candidates_[0][first_choice])) descend(1);
    unapply(0);
    euf_.rollback(mark);
    vuf_.rollback(vmark);
  }

  std::size_t first_choices() const { return candidates_.empty() ? 0 : candidates_[0].size(); }

 private:
  bool apply(std::size_t k, Perm4 p) {
    const auto [from, to] = fp_.pairs[k];
    const auto [t, f] = from;
    const auto [u, g] = to;
    table_[t][f] = Gluing{u, g, p};
    table_[u][g] = Gluing{t, f, p.inverse()};
    for (int a = 0; a < 4; ++a)
      if (a != f) vuf_.unite(4 * t + a, 4 * u + p[a], 0);
    for (int e = 0; e < 6; ++e) {
      const int a = kEdgeVertices[e][0];
      const int b = kEdgeVertices[e][1];
      if (a == f || b == f) continue;
      const int pa = p[a], pb = p[b];
      if (!euf_.unite(6 * t + e, 6 * u + edge_index(pa, pb), pa > pb ? 1 : 0)) return false;
    }
    return true;
  }

  void unapply(std::size_t k) {
    const auto [from, to] = fp_.pairs[k];
    table_[from.first][from.second].reset();
    table_[to.first][to.second].reset();
  }

  void descend(std::size_t k) {
    if (k == fp_.pairs.size()) {
      leaf();
      return;
    }
    for (const Perm4& p : candidates_[k]) {
      const auto mark = euf_.checkpoint();
      const auto vmark = vuf_.checkpoint();
      if (apply(k, p)) descend(k + 1);
      unapply(k);
      euf_.rollback(mark);
      vuf_.rollback(vmark);
    }
  }

  void leaf() {
    // With valid edges, chi = V - E + n is a sum of non-negative vertex
    // terms 1 - chi(link)/2, so zero means every link is a sphere.
    if (vuf_.classes() - euf_.classes() + fp_.n != 0) return;
    Triangulation tri = Triangulation::from_table(table_);
    // Edge validity already holds; vertex links must be spheres.
    const Skeleton s = skeleton(tri);
    for (const auto& v : s.vertices)
      if (v.link_euler != 2) return;
    std::string sig = iso_signature(tri);
    found_.emplace(std::move(sig), std::move(tri));
  }

  const FacePairing& fp_;
  std::map<std::string, Triangulation>& found_;
  RollbackParityUF euf_;
  RollbackParityUF vuf_;
  GluingTable table_;
  std::vector<std::vector<Perm4>> candidates_;
};

unsigned resolve_threads(unsigned threads) {
  return threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
}

}  // namespace

std::vector<FacePairing> face_pairings(int n) {
  if (n < 1) return {};
  std::vector<int> deg(static_cast<std::size_t>(n), 4), loops(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n), 0));
  std::set<GraphKey> keys;
  enumerate_graphs(n, 0, 0, deg, loops, adj, keys);

  std::vector<FacePairing> out;
  for (const auto& key : keys) {
    FacePairing fp;
    fp.n = n;
    std::vector<int> next_face(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < key[i]; ++l) {
        const int f = next_face[i];
        next_face[i] += 2;
        fp.pairs.push_back({{i, f}, {i, f + 1}});
      }
    std::size_t idx = static_cast<std::size_t>(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++idx)
        for (int m = 0; m < key[idx]; ++m)
          fp.pairs.push_back({{i, next_face[i]++}, {j, next_face[j]++}});
    // Glue in slot order so edge cycles close as early as possible.
    std::sort(fp.pairs.begin(), fp.pairs.end());
    out.push_back(std::move(fp));
  }
  return out;
}

std::vector<Triangulation> generate_closed(int n, const CensusOptions& options) {
  if (n < 1) throw std::invalid_argument("census size must be at least 1");
  if (n > options.size_limit)
    throw ResourceLimitExceeded("census size " + std::to_string(n) + " exceeds limit " +
                                std::to_string(options.size_limit));

  // Independent branches: (pairing, first gluing choice).
  const auto pairings = face_pairings(n);
  std::vector<std::pair<std::size_t, std::size_t>> branches;
  for (std::size_t i = 0; i < pairings.size(); ++i)
    for (std::size_t c = 0; c < 6; ++c) branches.push_back({i, c});

  const unsigned threads = std::min<unsigned>(resolve_threads(options.threads),
                                              static_cast<unsigned>(branches.size()));
  std::vector<std::map<std::string, Triangulation>> found(threads);
  std::atomic<std::size_t> next{0};
  auto worker = [&](unsigned w) {
    for (std::size_t b; (b = next.fetch_add(1)) < branches.size();) {
      GluingSearch search(pairings[branches[b].first], found[w]);
      search.run_from(branches[b].second);
    }
  };
  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();
  }

  std::map<std::string, Triangulation> merged;
  for (auto& m : found) merged.merge(m);
  std::vector<Triangulation> out;
  out.reserve(merged.size());
  for (auto& [sig, tri] : merged) out.push_back(std::move(tri));
  return out;
}

Census run_census(int n, const CensusOptions& options) {
  Census c;
  c.n = n;
  c.triangulations = generate_closed(n, options);
  c.records.resize(c.triangulations.size());

  const unsigned threads = resolve_threads(options.threads);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < c.triangulations.size();) {
      const auto& tri = c.triangulations[i];
      c.records[i] = CensusRecord{n, i + 1, iso_signature(tri), sigma(tri)};
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return c;
}

double CensusStats::mean() const {
  if (count == 0) return 0.0;
  return sum.convert_to<double>() / static_cast<double>(count);
}

double CensusStats::stddev() const {
  if (count == 0) return 0.0;
  const Integer c = count;
  const Integer num = c * sum_squares - sum * sum;
  return std::sqrt(num.convert_to<double>()) / static_cast<double>(count);
}

CensusStats census_stats(const std::vector<CensusRecord>& records, int n) {
  CensusStats s;
  s.n = n;
  s.count = records.size();
  bool first = true;
  for (const auto& r : records) {
    s.sum += r.sigma;
    s.sum_squares += Integer(r.sigma) * r.sigma;
    if (first || r.sigma < s.min) s.min = r.sigma;
    if (first || r.sigma > s.max) s.max = r.sigma;
    first = false;
  }
  return s;
}

CensusStats census_stats(int n, const CensusOptions& options) {
  return census_stats(run_census(n, options).records, n);
}

bool ConjectureReport::all_hold() const {
  return std::all_of(lines.begin(), lines.end(),
                     [](const ConjectureLine& l) { return l.skipped || l.holds; });
}

ConjectureReport conjecture_checks(const std::vector<CensusStats>& stats) {
  using Rational = boost::multiprecision::cpp_rational;
  for (std::size_t i = 0; i < stats.size(); ++i)
    if (stats[i].n != static_cast<int>(i) + 1 || stats[i].count == 0)
      throw std::invalid_argument("conjecture checks need census data for every n from 1 to " +
                                  std::to_string(stats.size()));
  auto mean = [&](std::size_t i) { return Rational(stats[i].sum, Integer(stats[i].count)); };

  ConjectureReport rep;
  for (std::size_t i = 0; i < stats.size(); ++i) {
    const int n = stats[i].n;
    if (n >= 3) {
      ConjectureLine l{n, "mean(n) < mean(n-1) + mean(n-2)", false, true, ""};
      l.holds = mean(i) < mean(i - 1) + mean(i - 2);
      std::ostringstream d;
      d << std::fixed << std::setprecision(2) << stats[i].mean() << " vs "
        << stats[i - 1].mean() << " + " << stats[i - 2].mean();
      l.detail = d.str();
      rep.lines.push_back(l);
    }
    ConjectureLine w{n, "max sigma(n) = worst_case_sigma(n)", false, true, ""};
    const auto worst = worst_case_sigma(n);
    if (!worst) {
      w.skipped = true;
      w.detail = "worst_case_sigma undefined for n = " + std::to_string(n);
    } else {
      w.holds = Integer(stats[i].max) == *worst;
      w.detail = std::to_string(stats[i].max) + " vs " + worst->str();
    }
    rep.lines.push_back(w);
  }
  return rep;
}

void write_census_csv(std::ostream& out, const std::vector<CensusRecord>& records) {
  out << "n,index,isosig,sigma\n";
  for (const auto& r : records) out << r.n << ',' << r.index << ',' << r.isosig << ',' << r.sigma << '\n';
}

void write_stats_json(std::ostream& out, const CensusStats& s) {
  nlohmann::ordered_json j;
  j["n"] = s.n;
  j["count"] = s.count;
  j["mean"] = std::round(s.mean() * 100.0) / 100.0;
  j["stddev"] = std::round(s.stddev() * 100.0) / 100.0;
  j["min"] = s.min;
  j["max"] = s.max;
  j["sigma_sum"] = s.sum.str();
  j["sigma_sum_squares"] = s.sum_squares.str();
  out << j.dump() << '\n';
}

void write_stats_text(std::ostream& out, const CensusStats& s) {
  out << std::fixed << std::setprecision(2);
  out << "n       " << s.n << '\n'
      << "count   " << s.count << '\n'
      << "mean    " << s.mean() << '\n'
      << "stddev  " << s.stddev() << '\n'
      << "min     " << s.min << '\n'
      << "max     " << s.max << '\n';
}

}  // namespace nsenum
