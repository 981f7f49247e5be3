#include "nsenum/bounds.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace nsenum {

Integer fibonacci(int k) {
  if (k < 0) throw std::invalid_argument("fibonacci index must be non-negative");
  Integer a = 0, b = 1;
  for (int i = 0; i < k; ++i) {
    Integer next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Integer facet_vertex_bound(int k) {
  if (k < 3) throw std::invalid_argument("facet_vertex_bound needs k >= 3");
  return fibonacci(k + 1);
}

Integer mcmullen(int k, int d) {
  if (d < 3 || d >= k) throw std::invalid_argument("mcmullen needs 3 <= d < k");
  return binomial(k - (d + 1) / 2, k - d) + binomial(k - (d + 2) / 2, k - d);
}

Integer max_mcmullen(int k) {
  Integer best = 0;
  for (int d = 3; d < k; ++d) best = std::max(best, mcmullen(k, d));
  return best;
}

Integer theorem_bound(int n) {
  if (n < 1) throw std::invalid_argument("theorem_bound needs n >= 1");
  return fibonacci(7 * n + 1);
}

Integer hass_bound(int n) {
  if (n < 1) throw std::invalid_argument("hass_bound needs n >= 1");
  return Integer(pow(Integer(128), static_cast<unsigned>(n)));
}

std::optional<Integer> worst_case_sigma(int n) {
  if (n < 4 || n == 5) return std::nullopt;
  const int k = n / 4;
  auto pow17 = [](int e) -> Integer { return pow(Integer(17), static_cast<unsigned>(e)); };
  switch (n % 4) {
    case 0:
      return pow17(k) + k;
    case 1:
      return 581 * pow17(k - 2) + k + 1;
    case 2:
      return 69 * pow17(k - 1) + k;
    default:
      return 141 * pow17(k - 1) + k + 2;
  }
}

double mcmullen_growth_base(int lo, int hi) {
  // Fit log M(k) = a + b k; the base is exp(b).
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (int k = lo; k <= hi; ++k) {
    const double y = std::log(max_mcmullen(k).convert_to<double>());
    sx += k;
    sy += y;
    sxx += static_cast<double>(k) * k;
    sxy += k * y;
    ++count;
  }
  const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  return std::exp(slope);
}

BoundReport bound_report(int n) {
  return BoundReport{n, theorem_bound(n), hass_bound(n), worst_case_sigma(n)};
}

std::string to_text(const BoundReport& r) {
  std::ostringstream out;
  out << "n           " << r.n << '\n';
  out << "fib_bound   " << r.fib_bound << '\n';
  out << "hass_bound  " << r.hass_bound << '\n';
  out << "worst_case  " << (r.worst_case ? r.worst_case->str() : std::string("undefined"))
      << '\n';
  return out.str();
}

std::string to_json(const BoundReport& r) {
  // Values can exceed 64 bits, so they travel as decimal strings.
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["fib_bound"] = r.fib_bound.str();
  j["hass_bound"] = r.hass_bound.str();
  j["worst_case"] = r.worst_case ? nlohmann::ordered_json(r.worst_case->str())
                                 : nlohmann::ordered_json(nullptr);
  return j.dump();
}

}  // namespace nsenum
