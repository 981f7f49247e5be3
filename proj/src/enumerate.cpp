#include "nsenum/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <thread>

namespace nsenum {

namespace {

using Word = std::uint64_t;
constexpr Word kLowBits = 0x5555555555555555ULL;

// Nonzero-field indicator for 2-bit packed quad codes.
inline Word nonzero_fields(Word w) { return (w | (w >> 1)) & kLowBits; }

// Columnar storage for the current ray set. Zero sets and packed quad codes
// (2 bits per tetrahedron: 0 = no quad, else type + 1) sit in flat arrays.
struct RaySet {
  int dim = 0;
  int zwords = 0;
  int qwords = 0;
  std::vector<std::vector<Integer>> coords;
  std::vector<Word> zero;
  std::vector<Word> quad;
  std::vector<int> zero_count;

  RaySet(int d, int tets)
      : dim(d), zwords((d + 63) / 64), qwords(std::max(1, (2 * tets + 63) / 64)) {}

  std::size_t size() const { return coords.size(); }
  const Word* z(std::size_t i) const { return zero.data() + i * zwords; }
  const Word* q(std::size_t i) const { return quad.data() + i * qwords; }

  void push(std::vector<Integer> c, const Word* zbits, const Word* qbits) {
    coords.push_back(std::move(c));
    zero.insert(zero.end(), zbits, zbits + zwords);
    quad.insert(quad.end(), qbits, qbits + qwords);
    int cnt = 0;
    for (int w = 0; w < zwords; ++w) cnt += std::popcount(zbits[w]);
    zero_count.push_back(cnt);
  }
};

void make_primitive(std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v)
    if (x != 0) {
      g = (g == 0) ? Integer(abs(x)) : Integer(gcd(g, x));
      if (g == 1) return;
    }
  if (g > 1)
    for (auto& x : v) x /= g;
}

struct SparseRow {
  std::vector<std::pair<int, std::int64_t>> entries;
};

// Incremental rank of processed rows via fraction-free elimination.
class RankTracker {
 public:
  explicit RankTracker(int dim) : dim_(dim) {}
  int rank() const { return static_cast<int>(basis_.size()); }
  void add(const std::vector<std::int64_t>& row) {
    std::vector<Integer> r(row.begin(), row.end());
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      const int p = pivots_[b];
      if (r[p] == 0) continue;
      const Integer a = basis_[b][p];
      const Integer c = r[p];
      for (int j = 0; j < dim_; ++j) r[j] = r[j] * a - basis_[b][j] * c;
      make_primitive(r);
    }
    for (int j = 0; j < dim_; ++j)
      if (r[j] != 0) {
        pivots_.push_back(j);
        basis_.push_back(std::move(r));
        return;
      }
  }

 private:
  int dim_;
  std::vector<std::vector<Integer>> basis_;
  std::vector<int> pivots_;
};

struct PairContext {
  const RaySet* rays;
  const std::vector<std::size_t>* pos;
  const std::vector<std::size_t>* neg;
  const std::vector<Integer>* value;
  int min_common_zeros;
};

// Combines every adjacent, quad-compatible (pos, neg) pair whose pos index
// lies in [begin, end). Output order is deterministic for a given range.
void combine_range(const PairContext& ctx, std::size_t begin, std::size_t end, RaySet& out) {
  const RaySet& R = *ctx.rays;
  const int zw = R.zwords;
  const int qw = R.qwords;
  std::vector<Word> common(static_cast<std::size_t>(zw));
  std::vector<Word> qcode(static_cast<std::size_t>(qw));
  const std::size_t total = R.size();

  for (std::size_t pi = begin; pi < end; ++pi) {
    const std::size_t p = (*ctx.pos)[pi];
    const Word* zp = R.z(p);
    const Word* qp = R.q(p);
    for (std::size_t n : *ctx.neg) {
      const Word* qn = R.q(n);
      bool compatible = true;
      for (int w = 0; w < qw; ++w) {
        const Word diff = qp[w] ^ qn[w];
        if (nonzero_fields(qp[w]) & nonzero_fields(qn[w]) & nonzero_fields(diff)) {
          compatible = false;
          break;
        }
      }
      if (!compatible) continue;

      const Word* zn = R.z(n);
      int cnt = 0;
      for (int w = 0; w < zw; ++w) {
        common[w] = zp[w] & zn[w];
        cnt += std::popcount(common[w]);
      }
      if (cnt < ctx.min_common_zeros) continue;

      // Combinatorial adjacency: no other ray vanishes on the common zeros.
      bool adjacent = true;
      for (std::size_t r = 0; r < total; ++r) {
        if (r == p || r == n || R.zero_count[r] < cnt) continue;
        const Word* zr = R.z(r);
        bool contains = true;
        for (int w = 0; w < zw; ++w)
          if (common[w] & ~zr[w]) {
            contains = false;
            break;
          }
        if (contains) {
          adjacent = false;
          break;
        }
      }
      if (!adjacent) continue;

      const Integer& vp = (*ctx.value)[p];
      const Integer neg_abs = -(*ctx.value)[n];
      std::vector<Integer> c(static_cast<std::size_t>(R.dim));
      const auto& cp = R.coords[p];
      const auto& cn = R.coords[n];
      for (int j = 0; j < R.dim; ++j) {
        if (cp[j] == 0 && cn[j] == 0) continue;
        c[j] = neg_abs * cp[j] + vp * cn[j];
      }
      make_primitive(c);
      for (int w = 0; w < qw; ++w) qcode[w] = qp[w] | qn[w];
      out.push(std::move(c), common.data(), qcode.data());
    }
  }
}

}  // namespace

Ray Ray::from_vector(NormalVector v) {
  Ray r;
  for (int i = 0; i < v.size(); ++i)
    if (v[i] == 0) r.zero_set.push_back(i);
  r.vector = std::move(v);
  return r;
}

EnumerationResult enumerate_cone(const MatchingSystem& equations, int tetrahedra,
                                 const EnumerationOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  const int dim = kCoordsPerTet * tetrahedra;
  if (equations.columns != dim && !equations.rows.empty())
    throw std::invalid_argument("equation width does not match 7n");

  // Fixed insertion order: fewest nonzeros first, then lexicographic.
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& r : equations.rows)
    if (std::any_of(r.begin(), r.end(), [](std::int64_t x) { return x != 0; })) rows.push_back(r);
  auto nnz = [](const std::vector<std::int64_t>& r) {
    return std::count_if(r.begin(), r.end(), [](std::int64_t x) { return x != 0; });
  };
  std::stable_sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
    const auto na = nnz(a), nb = nnz(b);
    return na != nb ? na < nb : a < b;
  });

  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                          : options.threads;

  RaySet rays(dim, tetrahedra);
  {
    std::vector<Word> zbits(static_cast<std::size_t>(rays.zwords));
    std::vector<Word> qbits(static_cast<std::size_t>(rays.qwords));
    for (int i = 0; i < dim; ++i) {
      std::fill(zbits.begin(), zbits.end(), ~Word{0});
      if (dim % 64) zbits.back() &= (Word{1} << (dim % 64)) - 1;
      zbits[i / 64] &= ~(Word{1} << (i % 64));
      std::fill(qbits.begin(), qbits.end(), Word{0});
      const int local = i % kCoordsPerTet;
      if (local >= 4) {
        const int tet = i / kCoordsPerTet;
        const int bit = 2 * tet;
        qbits[bit / 64] |= Word(local - 3) << (bit % 64);
      }
      std::vector<Integer> c(static_cast<std::size_t>(dim));
      c[i] = 1;
      rays.push(std::move(c), zbits.data(), qbits.data());
    }
  }

  EnumerationResult result;
  result.stats.peak_rays = rays.size();
  RankTracker rank(dim);

  for (const auto& row : rows) {
    SparseRow sparse;
    for (int j = 0; j < dim; ++j)
      if (row[j] != 0) sparse.entries.emplace_back(j, row[j]);

    std::vector<Integer> value(rays.size());
    std::vector<std::size_t> zero_idx, pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      Integer acc = 0;
      for (auto [j, a] : sparse.entries)
        if (rays.coords[i][j] != 0) acc += rays.coords[i][j] * a;
      if (acc > 0)
        pos.push_back(i);
      else if (acc < 0)
        neg.push_back(i);
      else
        zero_idx.push_back(i);
      value[i] = std::move(acc);
    }
    ++result.stats.hyperplanes;
    const int rank_before = rank.rank();
    rank.add(row);
    if (pos.empty() && neg.empty()) continue;

    RaySet next(dim, tetrahedra);
    for (std::size_t i : zero_idx) next.push(rays.coords[i], rays.z(i), rays.q(i));

    PairContext ctx{&rays, &pos, &neg, &value, dim - rank_before - 2};
    if (threads <= 1 || pos.size() < 2) {
      combine_range(ctx, 0, pos.size(), next);
    } else {
      const std::size_t chunks = std::min<std::size_t>(threads, pos.size());
      std::vector<RaySet> parts(chunks, RaySet(dim, tetrahedra));
      std::vector<std::thread> workers;
      for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t b = pos.size() * c / chunks;
        const std::size_t e = pos.size() * (c + 1) / chunks;
        workers.emplace_back([&, b, e, c] { combine_range(ctx, b, e, parts[c]); });
      }
      for (auto& w : workers) w.join();
      for (auto& part : parts)
        for (std::size_t i = 0; i < part.size(); ++i)
          next.push(std::move(part.coords[i]), part.z(i), part.q(i));
    }

    rays = std::move(next);
    result.stats.peak_rays = std::max(result.stats.peak_rays, rays.size());
    if (options.max_rays != 0 && rays.size() > options.max_rays)
      throw ResourceLimitExceeded("intermediate ray count " + std::to_string(rays.size()) +
                                  " exceeds limit " + std::to_string(options.max_rays));
  }

  result.surfaces.reserve(rays.size());
  for (auto& c : rays.coords) result.surfaces.push_back(Ray::from_vector(NormalVector(std::move(c))));
  std::sort(result.surfaces.begin(), result.surfaces.end(),
            [](const Ray& a, const Ray& b) { return a.vector < b.vector; });
  result.sigma = result.surfaces.size();
  result.stats.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

EnumerationResult enumerate(const Triangulation& tri, const MatchingSystem* extra,
                            const EnumerationOptions& options) {
  MatchingSystem eqs = matching_matrix(tri);
  if (extra) eqs.append(*extra);
  return enumerate_cone(eqs, tri.size(), options);
}

std::size_t sigma(const Triangulation& tri, const EnumerationOptions& options) {
  return enumerate(tri, nullptr, options).sigma;
}

}  // namespace nsenum
