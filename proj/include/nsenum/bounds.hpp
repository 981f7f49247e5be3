#pragma once

#include <optional>
#include <string>

#include "nsenum/integer.hpp"

namespace nsenum {

/// F_k with F_0 = 0, F_1 = 1.
Integer fibonacci(int k);
Integer binomial(long n, long k);

/// Upper bound F_{k+1} on the vertex count of a polytope with k >= 3 facets.
Integer facet_vertex_bound(int k);

/// Maximum vertex count of a d-polytope with k facets (upper bound theorem
/// in dual form); requires 3 <= d < k.
Integer mcmullen(int k, int d);

/// Largest mcmullen(k, d) over 3 <= d < k.
Integer max_mcmullen(int k);

/// sigma <= F_{7n+1} for a triangulation of size n >= 1.
Integer theorem_bound(int n);

/// 128^n.
Integer hass_bound(int n);

/// Admissible vertex count of the known worst-case family of size n;
/// absent for n in {1, 2, 3, 5}.
std::optional<Integer> worst_case_sigma(int n);

/// Least-squares growth base of max_mcmullen(k) over k in [lo, hi].
double mcmullen_growth_base(int lo, int hi);

struct BoundReport {
  int n = 0;
  Integer fib_bound;
  Integer hass_bound;
  std::optional<Integer> worst_case;
};

BoundReport bound_report(int n);
std::string to_text(const BoundReport& r);
std::string to_json(const BoundReport& r);

}  // namespace nsenum
