#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace nsenum {

/// A permutation of the four vertex labels {0,1,2,3} of a tetrahedron.
///
/// Composition follows function notation: (a * b)[i] == a[b[i]].
class Perm4 {
 public:
  constexpr Perm4() : img_{0, 1, 2, 3} {}
  /// Builds the permutation sending i to the i-th argument. The caller must
  /// pass a bijection; use from_images() for unchecked input.
  constexpr Perm4(int a, int b, int c, int d)
      : img_{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
             static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)} {}

  static std::optional<Perm4> from_images(const std::array<int, 4>& images);
  /// Parses the 4-character form "abcd" where character j is the image of j.
  static std::optional<Perm4> from_string(std::string_view s);
  /// The i-th permutation of S4 in lexicographic order of image strings.
  static Perm4 from_index(int i);
  /// The transposition swapping a and b.
  static Perm4 swap(int a, int b);

  constexpr int operator[](int i) const { return img_[i]; }

  Perm4 inverse() const;
  Perm4 operator*(const Perm4& other) const;

  /// +1 for even permutations, -1 for odd ones.
  int sign() const;
  int index() const;
  std::string str() const;

  friend constexpr bool operator==(const Perm4&, const Perm4&) = default;
  friend constexpr auto operator<=>(const Perm4&, const Perm4&) = default;

 private:
  std::array<std::uint8_t, 4> img_;
};

}  // namespace nsenum
