#include "nsenum/constructions.hpp"

#include <algorithm>
#include <string>

namespace nsenum {

namespace {

// Frozen tables. Each was found by a search over the gluings allowed by the
// construction and checked against the skeletal and enumeration
// post-conditions (see the constructions tests).
constexpr const char* kPillow =
    "tri 2\n"
    "0:1:1023 0:0:1023 1:0:2301 1:1:2301\n"
    "0:2:2301 0:3:2301 b b\n";

// Tetrahedra 0, 1 form the pillow; 2 and 3 are folded along faces 0, 1 and
// keep face 3 free.
constexpr const char* kFourBlock =
    "tri 4\n"
    "0:1:1023 0:0:1023 1:0:2301 1:1:2301\n"
    "0:2:2301 0:3:2301 2:2:0321 3:2:0312\n"
    "2:1:1023 2:0:1023 1:2:0321 b\n"
    "3:1:1023 3:0:1023 1:3:0231 b\n";

constexpr const char* kS2xS1 =
    "tri 2\n"
    "0:1:1230 0:0:3012 1:2:0123 1:3:0123\n"
    "1:1:1230 1:0:3012 0:2:0123 0:3:0123\n";

constexpr std::array<std::array<int, 3>, 6> kPerm3{
    {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

std::array<int, 3> face_corners(int face) {
  std::array<int, 3> c{};
  int i = 0;
  for (int v = 0; v < 4; ++v)
    if (v != face) c[i++] = v;
  return c;
}

// Perm4 sending tri a's corners onto tri b's corners under `id`.
Perm4 gluing_perm(const BlockBoundary::Triangle& a, const BlockBoundary::Triangle& b, int id) {
  const auto s = identification_map(id);
  std::array<int, 4> img{};
  img[a.face] = b.face;
  for (int i = 0; i < 3; ++i) img[a.corners[i]] = b.corners[s[i]];
  return *Perm4::from_images(img);
}

BlockBoundary::Triangle shifted(BlockBoundary::Triangle t, int offset) {
  t.tet += offset;
  return t;
}

}  // namespace

std::array<int, 3> identification_map(int id) {
  if (id < 1 || id > kIdentifications)
    throw ConstructionError("identification must be in 1.." + std::to_string(kIdentifications));
  return kPerm3[static_cast<std::size_t>(id - 1)];
}

BlockBoundary block_boundary(const Triangulation& tri, int first_tet, int first_face) {
  std::vector<std::pair<int, int>> faces;
  for (int t = 0; t < tri.size(); ++t)
    for (int f = 0; f < 4; ++f)
      if (tri.is_boundary(t, f)) faces.emplace_back(t, f);
  if (faces.size() != 2) throw ConstructionError("block boundary needs exactly 2 boundary faces");
  if (faces[1] == std::make_pair(first_tet, first_face)) std::swap(faces[0], faces[1]);
  if (faces[0] != std::make_pair(first_tet, first_face))
    throw ConstructionError("requested first triangle is not a boundary face");

  const Skeleton skel = skeleton(tri);
  if (skel.boundary_vertex_count() != 3)
    throw ConstructionError("block boundary needs exactly 3 boundary vertices");

  BlockBoundary bb;
  auto fill = [&](BlockBoundary::Triangle& tr, std::pair<int, int> slot) {
    tr.tet = slot.first;
    tr.face = slot.second;
    tr.corners = face_corners(tr.face);
  };
  fill(bb.first, faces[0]);
  fill(bb.second, faces[1]);

  auto classes = [&](const BlockBoundary::Triangle& tr) {
    std::array<int, 3> c{};
    for (int i = 0; i < 3; ++i) c[i] = skel.vertex_of[tr.tet][tr.corners[i]];
    return c;
  };
  const auto c1 = classes(bb.first);
  const auto c2 = classes(bb.second);
  auto count = [](const std::array<int, 3>& c, int x) { return std::count(c.begin(), c.end(), x); };

  // P appears twice in each triangle; the leftover corners give R and Q.
  for (int x : c1)
    if (count(c1, x) == 2 && count(c2, x) == 2) bb.p_class = x;
  if (bb.p_class < 0) throw ConstructionError("boundary triangles are not in block formation");
  for (int x : c1)
    if (x != bb.p_class) bb.r_class = x;
  for (int x : c2)
    if (x != bb.p_class) bb.q_class = x;
  if (bb.r_class == bb.q_class)
    throw ConstructionError("boundary triangles are not in block formation");

  for (int i = 0; i < 3; ++i) {
    bb.first.labels[i] = c1[i] == bb.p_class ? BoundaryVertex::P : BoundaryVertex::R;
    bb.second.labels[i] = c2[i] == bb.p_class ? BoundaryVertex::P : BoundaryVertex::Q;
  }
  return bb;
}

std::optional<std::vector<int>> orientation(const Triangulation& tri) {
  std::vector<int> sign(static_cast<std::size_t>(tri.size()), 0);
  std::vector<int> stack;
  for (int root = 0; root < tri.size(); ++root) {
    if (sign[root] != 0) continue;
    sign[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      const int t = stack.back();
      stack.pop_back();
      for (int f = 0; f < 4; ++f) {
        const auto& g = tri.gluing(t, f);
        if (!g) continue;
        // Odd gluings join equally signed tetrahedra.
        const int want = g->perm.sign() < 0 ? sign[t] : -sign[t];
        if (sign[g->tet] == 0) {
          sign[g->tet] = want;
          stack.push_back(g->tet);
        } else if (sign[g->tet] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return sign;
}

bool preserves_orientation(const std::vector<int>& signs, int a, int b, Perm4 perm) {
  return signs[a] * signs[b] * perm.sign() == -1;
}

Triangulation pillow() { return parse_triangulation(kPillow); }

Triangulation four_block() { return parse_triangulation(kFourBlock); }

Block four_block_with_boundary() {
  Triangulation t = four_block();
  BlockBoundary bb = block_boundary(t, 2, 3);
  return Block{std::move(t), bb};
}

Block join_blocks(const Block& b1, const Block& b2, int identification) {
  TriangulationBuilder builder(b1.tri);
  const int offset = builder.append(b2.tri);
  const auto target = shifted(b2.boundary.second, offset);
  builder.join(b1.boundary.first.tet, b1.boundary.first.face, target.tet,
               gluing_perm(b1.boundary.first, target, identification));
  Triangulation t = builder.build();
  const auto first = shifted(b2.boundary.first, offset);
  BlockBoundary bb = block_boundary(t, first.tet, first.face);
  if (bb.second.tet != b1.boundary.second.tet || bb.second.face != b1.boundary.second.face)
    throw ConstructionError("joined boundary lost track of its second triangle");
  return Block{std::move(t), bb};
}

std::vector<int> orientation_preserving_closures(const Block& b) {
  const auto signs = orientation(b.tri);
  if (!signs) throw ConstructionError("block is not orientable");
  std::vector<int> ids;
  for (int id = 1; id <= kIdentifications; ++id)
    if (preserves_orientation(*signs, b.boundary.first.tet, b.boundary.second.tet,
                              gluing_perm(b.boundary.first, b.boundary.second, id)))
      ids.push_back(id);
  return ids;
}

Triangulation close_block(const Block& b, int identification) {
  const auto ok = orientation_preserving_closures(b);
  if (std::find(ok.begin(), ok.end(), identification) == ok.end())
    throw ConstructionError("identification " + std::to_string(identification) +
                            " reverses orientation");
  TriangulationBuilder builder(b.tri);
  builder.join(b.boundary.first.tet, b.boundary.first.face, b.boundary.second.tet,
               gluing_perm(b.boundary.first, b.boundary.second, identification));
  return builder.build();
}

int twist_identification(const Block& b1, const Block& b2) {
  const auto s1 = orientation(b1.tri);
  const auto s2 = orientation(b2.tri);
  if (!s1 || !s2) throw ConstructionError("block is not orientable");
  const auto& from = b1.boundary.first;
  const auto& to = b2.boundary.second;
  for (int id = 1; id <= kIdentifications; ++id) {
    const auto s = identification_map(id);
    // R landing on a P corner forces exactly one P corner onto Q.
    bool twisted = false;
    for (int i = 0; i < 3; ++i)
      if (from.labels[i] == BoundaryVertex::R) twisted = to.labels[s[i]] == BoundaryVertex::P;
    if (!twisted) continue;
    std::vector<int> signs(*s1);
    const int base = static_cast<int>(signs.size());
    signs.insert(signs.end(), s2->begin(), s2->end());
    if (preserves_orientation(signs, from.tet, base + to.tet, gluing_perm(from, to, id)))
      return id;
  }
  throw ConstructionError("no orientation-preserving twisted identification");
}

Triangulation x_k(int k) {
  if (k < 1) throw ConstructionError("x_k needs k >= 1");
  const Block unit = four_block_with_boundary();
  const int twist = twist_identification(unit, unit);
  Block chain = unit;
  for (int i = 1; i < k; ++i) chain = join_blocks(chain, unit, twist);
  return close_block(chain, twist);
}

Triangulation s2xs1() { return parse_triangulation(kS2xS1); }

}  // namespace nsenum
