#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "nsenum/integer.hpp"
#include "nsenum/triangulation.hpp"

namespace nsenum {

// Each tetrahedron owns seven consecutive coordinates (t0,t1,t2,t3,q0,q1,q2):
// t_v counts triangles at vertex v, and q0, q1, q2 count quadrilaterals
// separating {0,1}|{2,3}, {0,2}|{1,3} and {0,3}|{1,2}.
inline constexpr int kCoordsPerTet = 7;

constexpr int tri_coord(int tet, int vertex) { return kCoordsPerTet * tet + vertex; }
constexpr int quad_coord(int tet, int type) { return kCoordsPerTet * tet + 4 + type; }

/// Quad type whose partition keeps labels a and b on the same side.
int quad_pairing(int a, int b);
/// Quad type meeting face `face` in the arc that cuts off corner `v`.
int corner_quad(int v, int face);

/// Thrown when a vector fails the matching equations it must satisfy.
class InconsistentVector : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NormalVector {
  std::vector<Integer> coords;

  NormalVector() = default;
  explicit NormalVector(std::vector<Integer> c) : coords(std::move(c)) {}
  static NormalVector zero(int tetrahedra) {
    return NormalVector(std::vector<Integer>(7 * static_cast<std::size_t>(tetrahedra)));
  }
  static NormalVector from_ints(const std::vector<long>& values);

  int size() const { return static_cast<int>(coords.size()); }
  int tetrahedra() const { return size() / kCoordsPerTet; }
  const Integer& operator[](int i) const { return coords[i]; }
  Integer& operator[](int i) { return coords[i]; }
  bool is_zero() const;
  NormalVector operator+(const NormalVector& other) const;

  friend bool operator==(const NormalVector&, const NormalVector&) = default;
  friend auto operator<=>(const NormalVector& a, const NormalVector& b) {
    return a.coords <=> b.coords;
  }
};

/// Space-separated decimal coordinates on one line.
std::string to_string(const NormalVector& v);
NormalVector parse_normal_vector(const std::string& line);

/// Homogeneous linear system over the 7n coordinates.
struct MatchingSystem {
  struct Origin {
    enum class Kind { FaceCorner, BoundaryEqualizer, User };
    Kind kind = Kind::User;
    int tet = -1;
    int face = -1;
    int corner = -1;
  };

  int columns = 0;
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<Origin> origins;

  std::size_t row_count() const { return rows.size(); }
  void add_row(std::vector<std::int64_t> row, Origin origin);
  void append(const MatchingSystem& other);
  bool satisfied_by(const NormalVector& v) const;
};

/// Three rows per internal face class (one per corner); boundary faces add
/// nothing.
MatchingSystem matching_matrix(const Triangulation& tri);

/// Reads extra equations: one row of 7n integers per line.
MatchingSystem parse_equations(const std::string& text, int columns);

/// At most one nonzero quadrilateral coordinate per tetrahedron.
bool is_admissible(const NormalVector& v);

/// Number of arcs cutting off corner v of face `face` in tetrahedron `tet`.
Integer corner_arcs(const NormalVector& v, int tet, int face, int corner);

Integer edge_weight(const NormalVector& v, const Triangulation& tri, int edge_class);
Integer edge_weight(const NormalVector& v, const Triangulation& tri, const Skeleton& skel,
                    int edge_class);

/// The linking surface of a vertex class: one triangle at each of its corners.
NormalVector vertex_link(const Triangulation& tri, int vertex_class);

Integer euler_char(const NormalVector& v, const Triangulation& tri);
Integer euler_char(const NormalVector& v, const Triangulation& tri, const Skeleton& skel);

struct BoundaryProfile {
  struct Entry {
    int vertex_class = -1;
    std::vector<Integer> corner_counts;
    bool consistent = true;
    /// Meaningful only when consistent.
    Integer multiplicity;
  };
  std::vector<Entry> entries;
  bool consistent = true;
};

BoundaryProfile boundary_profile(const NormalVector& v, const Triangulation& tri);

/// Rows equating the corner-arc forms of consecutive boundary vertex
/// classes; empty when fewer than two boundary vertex classes exist.
MatchingSystem equalize_boundary_equations(const Triangulation& tri);

}  // namespace nsenum
