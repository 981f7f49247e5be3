#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "nsenum/constructions.hpp"
#include "nsenum/enumerate.hpp"

using namespace nsenum;

namespace {

int count_boundary_edges(const Skeleton& s) {
  int n = 0;
  for (const auto& e : s.edges) n += e.boundary;
  return n;
}

}  // namespace

TEST_CASE("pillow") {
  const Triangulation p = pillow();
  const Skeleton s = skeleton(p);
  CHECK(p.size() == 2);
  CHECK(s.vertices.size() == 3);
  CHECK(s.edges.size() == 5);
  CHECK(count_boundary_edges(s) == 3);
  CHECK(p.boundary_face_count() == 2);
  CHECK(is_valid_3manifold(p));
  CHECK(euler_characteristic(p) == 1);
}

TEST_CASE("four-block structure") {
  const Triangulation b = four_block();
  const Skeleton s = skeleton(b);
  CHECK(b.size() == 4);
  CHECK_FALSE(b.is_closed());
  CHECK(b.boundary_face_count() == 2);
  CHECK(s.vertices.size() == 4);
  CHECK(s.boundary_vertex_count() == 3);
  CHECK(is_valid_3manifold(b));
  CHECK(euler_characteristic(b) == 1);
  CHECK(homology_h1(b).is_trivial());
  CHECK(orientation(b).has_value());

  // The first two tetrahedra are the pillow.
  const Triangulation p = pillow();
  for (int t = 0; t < 2; ++t)
    for (int f = 0; f < 4; ++f) {
      const auto& g = p.gluing(t, f);
      if (g) CHECK(b.gluing(t, f) == g);
    }
}

TEST_CASE("block boundary formation") {
  const Block b = four_block_with_boundary();
  const auto& bb = b.boundary;
  CHECK(bb.p_class != bb.q_class);
  CHECK(bb.p_class != bb.r_class);
  CHECK(bb.q_class != bb.r_class);
  auto count = [](const BlockBoundary::Triangle& t, BoundaryVertex x) {
    return std::count(t.labels.begin(), t.labels.end(), x);
  };
  CHECK(count(bb.first, BoundaryVertex::P) == 2);
  CHECK(count(bb.first, BoundaryVertex::R) == 1);
  CHECK(count(bb.second, BoundaryVertex::P) == 2);
  CHECK(count(bb.second, BoundaryVertex::Q) == 1);

  CHECK_THROWS_AS(block_boundary(Triangulation::make(1, {}), 0, 0), ConstructionError);
  CHECK_THROWS_AS(block_boundary(x_k(1), 0, 0), ConstructionError);
  CHECK_THROWS_AS(block_boundary(four_block(), 0, 0), ConstructionError);
  // Pillow: two boundary triangles with three distinct corners each.
  CHECK_THROWS_AS(block_boundary(pillow(), 1, 2), ConstructionError);
}

TEST_CASE("identification indexing") {
  std::set<std::array<int, 3>> maps;
  for (int id = 1; id <= kIdentifications; ++id) maps.insert(identification_map(id));
  CHECK(maps.size() == 6);
  CHECK(identification_map(1) == std::array<int, 3>{0, 1, 2});
  CHECK(identification_map(6) == std::array<int, 3>{2, 1, 0});
  CHECK_THROWS_AS(identification_map(0), ConstructionError);
  CHECK_THROWS_AS(identification_map(7), ConstructionError);
}

TEST_CASE("joining two blocks gives a ball with the same formation") {
  const Block b = four_block_with_boundary();
  for (int id = 1; id <= kIdentifications; ++id) {
    const Block j = join_blocks(b, b, id);
    const Skeleton s = skeleton(j.tri);
    CHECK(j.tri.size() == 8);
    CHECK(j.tri.boundary_face_count() == 2);
    CHECK(s.boundary_vertex_count() == 3);
    CHECK(is_valid_3manifold(j.tri));
    CHECK(euler_characteristic(j.tri) == 1);
    CHECK(homology_h1(j.tri).is_trivial());
  }
}

TEST_CASE("closing a block") {
  const Block b = four_block_with_boundary();
  const auto ok = orientation_preserving_closures(b);
  CHECK(ok.size() == 3);
  for (int id = 1; id <= kIdentifications; ++id) {
    if (std::find(ok.begin(), ok.end(), id) == ok.end()) {
      CHECK_THROWS_AS(close_block(b, id), ConstructionError);
      continue;
    }
    const Triangulation t = close_block(b, id);
    CHECK(t.is_closed());
    CHECK(is_valid_3manifold(t));
    CHECK(homology_h1(t).is_trivial());
    CHECK(orientation(t).has_value());
  }
  CHECK(iso_signature(close_block(b, twist_identification(b, b))) == iso_signature(x_k(1)));
}

TEST_CASE("twisted identification") {
  const Block b = four_block_with_boundary();
  const int id = twist_identification(b, b);
  const auto s = identification_map(id);
  for (int i = 0; i < 3; ++i) {
    const BoundaryVertex from = b.boundary.first.labels[i];
    const BoundaryVertex to = b.boundary.second.labels[s[i]];
    if (from == BoundaryVertex::R) CHECK(to == BoundaryVertex::P);
    if (to == BoundaryVertex::Q) CHECK(from == BoundaryVertex::P);
  }
}

TEST_CASE("pathological family structure") {
  for (int k = 1; k <= 4; ++k) {
    const Triangulation x = x_k(k);
    const Skeleton s = skeleton(x);
    CHECK(x.size() == 4 * k);
    CHECK(x.is_closed());
    CHECK(is_valid_3manifold(x, s));
    CHECK(static_cast<int>(s.vertices.size()) == k + 1);
    CHECK(homology_h1(x).is_trivial());
    CHECK(orientation(x).has_value());
  }
  CHECK_THROWS_AS(x_k(0), ConstructionError);
}

TEST_CASE("pathological family signatures are stable") {
  std::mt19937 rng(8);
  for (int k = 1; k <= 3; ++k) {
    const std::string sig = iso_signature(x_k(k));
    CHECK(iso_signature(x_k(k)) == sig);
    for (int r = 0; r < 3; ++r) CHECK(iso_signature(testing::random_relabel(x_k(k), rng)) == sig);
  }
  // Pinned after the first computation.
  CHECK(iso_signature(x_k(1)) == "4:0bG0aG1cA1dA2aA3bA0cA0dA1aA2cC2bC3dC3cO1bA3aO2dC");
}

TEST_CASE("pathological family counts") {
  CHECK(sigma(x_k(1)) == 18);
  CHECK(sigma(x_k(2)) == 291);
}

TEST_CASE("orientation") {
  const auto signs = orientation(four_block());
  REQUIRE(signs);
  CHECK((*signs)[0] == 1);
  const Triangulation b = four_block();
  for (int t = 0; t < b.size(); ++t)
    for (int f = 0; f < 4; ++f)
      if (const auto& g = b.gluing(t, f)) CHECK(preserves_orientation(*signs, t, g->tet, g->perm));
  // A single tetrahedron folded by an even gluing is non-orientable.
  TriangulationBuilder nb(1);
  nb.join(0, 0, 0, *Perm4::from_string("1203"));
  CHECK_FALSE(orientation(nb.build()).has_value());
}

TEST_CASE("S2xS1") {
  const Triangulation t = s2xs1();
  const Skeleton s = skeleton(t);
  CHECK(t.size() == 2);
  CHECK(t.is_closed());
  CHECK(is_valid_3manifold(t));
  CHECK(s.vertices.size() == 1);
  CHECK(s.edges.size() == 3);
  CHECK(homology_h1(t).rank == 1);
}
