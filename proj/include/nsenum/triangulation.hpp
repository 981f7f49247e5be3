#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nsenum/integer.hpp"
#include "nsenum/perm4.hpp"

namespace nsenum {

/// Destination of a face gluing: face `face` of tetrahedron `tet`, with `perm`
/// carrying vertex labels of the source tetrahedron to labels of `tet`.
struct Gluing {
  int tet = 0;
  int face = 0;
  Perm4 perm;

  friend bool operator==(const Gluing&, const Gluing&) = default;
};

/// One row of a gluing list: (tet, face) is either boundary or glued.
struct FaceEntry {
  int tet = 0;
  int face = 0;
  std::optional<Gluing> gluing;
};

/// Rejection of a malformed gluing table; carries the offending face.
class TriangulationError : public std::runtime_error {
 public:
  TriangulationError(const std::string& what, int tet, int face)
      : std::runtime_error(what), tet_(tet), face_(face) {}
  int tet() const { return tet_; }
  int face() const { return face_; }

 private:
  int tet_;
  int face_;
};

/// Malformed text input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using GluingTable = std::vector<std::array<std::optional<Gluing>, 4>>;

/// A generalized 3-manifold triangulation: n tetrahedra with some of their
/// faces identified in pairs. Immutable once built; every instance satisfies
/// the involution and face-correspondence invariants.
class Triangulation {
 public:
  Triangulation() = default;

  /// Validates a complete table (both directions of every gluing present).
  static Triangulation from_table(GluingTable table);
  /// Builds from a list of entries; faces not mentioned are boundary.
  static Triangulation make(int n, std::span<const FaceEntry> entries);

  int size() const { return static_cast<int>(table_.size()); }
  const std::optional<Gluing>& gluing(int tet, int face) const {
    return table_[tet][face];
  }
  bool is_boundary(int tet, int face) const { return !table_[tet][face]; }
  bool is_closed() const;
  int boundary_face_count() const;
  const GluingTable& table() const { return table_; }

  /// Applies a relabelling: tetrahedron t becomes tet_map[t] and its vertex v
  /// becomes vertex_maps[t][v].
  Triangulation relabel(std::span<const int> tet_map,
                        std::span<const Perm4> vertex_maps) const;

  friend bool operator==(const Triangulation&, const Triangulation&) = default;

 private:
  explicit Triangulation(GluingTable table) : table_(std::move(table)) {}
  GluingTable table_;
};

/// Mutable staging area for constructing triangulations gluing by gluing.
class TriangulationBuilder {
 public:
  explicit TriangulationBuilder(int n = 0) : table_(static_cast<std::size_t>(n)) {}
  explicit TriangulationBuilder(const Triangulation& tri) : table_(tri.table()) {}

  int size() const { return static_cast<int>(table_.size()); }
  /// Appends `count` unglued tetrahedra; returns the index of the first.
  int add_tetrahedra(int count);
  /// Appends a copy of `tri`; returns the index offset of the copy.
  int append(const Triangulation& tri);
  /// Glues face `face` of `tet` to face perm[face] of `other`, in both
  /// directions. Throws if either face is already glued.
  TriangulationBuilder& join(int tet, int face, int other, Perm4 perm);
  bool is_boundary(int tet, int face) const { return !table_[tet][face]; }

  Triangulation build() const { return Triangulation::from_table(table_); }

 private:
  GluingTable table_;
};

// Tetrahedron edges are numbered 0..5 as 01, 02, 03, 12, 13, 23.
constexpr std::array<std::array<int, 2>, 6> kEdgeVertices{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
int edge_index(int a, int b);

struct Corner {
  int tet;
  int vertex;
};

struct TetEdge {
  int tet;
  int edge;
};

/// Equivalence classes of tetrahedron vertices, edges and faces under the
/// gluing identifications.
struct Skeleton {
  struct VertexClass {
    std::vector<Corner> corners;
    bool boundary = false;
    long link_euler = 0;
  };
  struct EdgeClass {
    std::vector<TetEdge> members;
    bool boundary = false;
    /// False iff some identification maps the edge to itself reversed.
    bool valid = true;
  };
  struct FaceClass {
    int tet = 0;
    int face = 0;
    bool boundary = false;
  };

  std::vector<VertexClass> vertices;
  std::vector<EdgeClass> edges;
  std::vector<FaceClass> faces;

  std::vector<std::array<int, 4>> vertex_of;
  std::vector<std::array<int, 6>> edge_of;
  /// +1 if tetrahedron edge (lo -> hi) agrees with its class orientation.
  std::vector<std::array<int, 6>> edge_sign;
  std::vector<std::array<int, 4>> face_of;

  int boundary_vertex_count() const;
};

Skeleton skeleton(const Triangulation& tri);

bool is_valid_3manifold(const Triangulation& tri);
bool is_valid_3manifold(const Triangulation& tri, const Skeleton& skel);
bool is_connected(const Triangulation& tri);
long euler_characteristic(const Triangulation& tri);

/// Canonical string, equal for two triangulations iff they differ by a
/// relabelling of tetrahedra and their vertices.
std::string iso_signature(const Triangulation& tri);

struct HomologyGroup {
  int rank = 0;
  std::vector<Integer> torsion;

  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  std::string str() const;
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Invariant factors of an integer matrix (nonzero diagonal of its Smith
/// normal form), each dividing the next.
std::vector<Integer> invariant_factors(std::vector<std::vector<Integer>> m);

HomologyGroup homology_h1(const Triangulation& tri);

// Text format: "tri <n>" then one line per tetrahedron with four tokens,
// each "b" or "<tet>:<face>:<perm>".
/// Reads one triangulation, leaving any later input unread.
Triangulation read_triangulation(std::istream& in);
/// Parses text holding exactly one triangulation.
Triangulation parse_triangulation(const std::string& text);
void write_triangulation(std::ostream& out, const Triangulation& tri);
std::string to_text(const Triangulation& tri);

}  // namespace nsenum
