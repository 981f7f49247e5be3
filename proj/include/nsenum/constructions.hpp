#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nsenum/triangulation.hpp"

namespace nsenum {

/// Raised when a triangulation lacks the two-triangle block boundary, or a
/// requested identification is not allowed.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class BoundaryVertex { P, Q, R };

/// The two boundary triangles of a ball whose boundary sphere is made of
/// two triangles: `first` has corners (P, P, R) and `second` has (Q, P, P),
/// where P is the vertex shared by both triangles.
struct BlockBoundary {
  struct Triangle {
    int tet = 0;
    int face = 0;
    /// Tetrahedron vertices of the face, ascending.
    std::array<int, 3> corners{};
    std::array<BoundaryVertex, 3> labels{};
  };
  Triangle first;
  Triangle second;
  int p_class = -1;
  int q_class = -1;
  int r_class = -1;
};

struct Block {
  Triangulation tri;
  BlockBoundary boundary;
};

/// Reads off the block boundary with the given triangle playing `first`.
/// Throws ConstructionError if the boundary is not two triangles sharing
/// exactly one doubled vertex.
BlockBoundary block_boundary(const Triangulation& tri, int first_tet, int first_face);

/// +1/-1 per tetrahedron such that every gluing preserves orientation, or
/// nothing if the triangulation is non-orientable. Tetrahedron 0 of each
/// component gets +1.
std::optional<std::vector<int>> orientation(const Triangulation& tri);

/// Whether gluing face (a, fa) to (b, perm[fa]) by `perm` is consistent with
/// the given orientation signs.
bool preserves_orientation(const std::vector<int>& signs, int a, int b, Perm4 perm);

/// Two tetrahedra: one folded onto itself, the other wrapped around it.
/// Three vertices, two boundary faces.
Triangulation pillow();

/// The pillow with a folded tetrahedron glued onto each of its faces.
/// Three boundary vertices, one internal vertex, 17 vertex normal surfaces.
Triangulation four_block();
Block four_block_with_boundary();

// Identification k in 1..6 maps the i-th corner of one triangle to corner
// s[i] of the other, where s is the k-th permutation of {0,1,2} in
// lexicographic order (012, 021, 102, 120, 201, 210). Corners are the face's
// tetrahedron vertices in ascending order.
inline constexpr int kIdentifications = 6;
std::array<int, 3> identification_map(int id);

/// Glues b1.first onto b2.second. The result keeps b2.first as its first
/// triangle and b1.second as its second, with b2's tetrahedra renumbered
/// after b1's.
Block join_blocks(const Block& b1, const Block& b2, int identification);

/// Ids (from 1..6) that glue first onto second preserving orientation.
std::vector<int> orientation_preserving_closures(const Block& b);

/// Glues the first boundary triangle onto the second. Throws
/// ConstructionError if the identification reverses orientation.
Triangulation close_block(const Block& b, int identification);

/// The id gluing b1.first (P,P,R) onto b2.second (Q,P,P) with P -> Q and
/// R -> P while preserving orientation across both blocks.
int twist_identification(const Block& b1, const Block& b2);

/// Cyclic chain of k four-blocks with twisted joins; 4k tetrahedra, closed,
/// k + 1 vertices.
Triangulation x_k(int k);

/// Two-tetrahedron triangulation of S^2 x S^1 with one vertex and three
/// edges.
Triangulation s2xs1();

}  // namespace nsenum
