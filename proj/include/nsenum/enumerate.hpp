#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nsenum/normal.hpp"
#include "nsenum/triangulation.hpp"

namespace nsenum {

/// A primitive integer vector on an extremal ray of the solution cone.
struct Ray {
  NormalVector vector;
  /// Coordinate indices where the vector vanishes, ascending.
  std::vector<int> zero_set;

  static Ray from_vector(NormalVector v);
  friend bool operator==(const Ray& a, const Ray& b) { return a.vector == b.vector; }
};

struct EnumerationStats {
  std::size_t hyperplanes = 0;
  std::size_t peak_rays = 0;
  double elapsed_seconds = 0.0;
};

struct EnumerationResult {
  /// Sorted lexicographically by coordinates; never contains the zero vector.
  std::vector<Ray> surfaces;
  std::size_t sigma = 0;
  EnumerationStats stats;
};

struct EnumerationOptions {
  /// Worker threads for the pair-combination step; 0 means hardware
  /// concurrency. Results do not depend on this value.
  unsigned threads = 1;
  /// Abort once an intermediate ray set exceeds this size (0: no limit).
  std::size_t max_rays = 0;
};

/// The search outgrew a configured resource guard. Distinct from any
/// mathematical failure.
class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Admissible extremal rays of {x >= 0, Mx = 0, Ex = 0} with M the matching
/// equations of `tri` and E the optional extra rows, by a filtered double
/// description method.
EnumerationResult enumerate(const Triangulation& tri, const MatchingSystem* extra = nullptr,
                            const EnumerationOptions& options = {});

/// Same method over an arbitrary homogeneous system on 7 * tetrahedra
/// coordinates.
EnumerationResult enumerate_cone(const MatchingSystem& equations, int tetrahedra,
                                 const EnumerationOptions& options = {});

std::size_t sigma(const Triangulation& tri, const EnumerationOptions& options = {});

/// Largest coordinate count brute_force_vertices() accepts.
inline constexpr int kBruteForceMaxCoords = 21;

/// Exhaustive oracle: tries every admissible support, keeping those on which
/// the restricted system has a one-dimensional kernel spanned by a strictly
/// positive vector. Tiny inputs only.
EnumerationResult brute_force_vertices(const Triangulation& tri,
                                       const MatchingSystem* extra = nullptr);

}  // namespace nsenum
