#include "nsenum/perm4.hpp"

#include <algorithm>

namespace nsenum {

namespace {

constexpr std::array<Perm4, 24> make_s4() {
  std::array<Perm4, 24> out{};
  std::array<int, 4> img{0, 1, 2, 3};
  int k = 0;
  do {
    out[k++] = Perm4(img[0], img[1], img[2], img[3]);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

constexpr std::array<Perm4, 24> kS4 = make_s4();

}  // namespace

std::optional<Perm4> Perm4::from_images(const std::array<int, 4>& images) {
  unsigned seen = 0;
  for (int v : images) {
    if (v < 0 || v > 3 || (seen & (1u << v)) != 0) return std::nullopt;
    seen |= 1u << v;
  }
  return Perm4(images[0], images[1], images[2], images[3]);
}

std::optional<Perm4> Perm4::from_string(std::string_view s) {
  if (s.size() != 4) return std::nullopt;
  std::array<int, 4> img{};
  for (int i = 0; i < 4; ++i) img[i] = s[i] - '0';
  return from_images(img);
}

Perm4 Perm4::from_index(int i) { return kS4.at(static_cast<std::size_t>(i)); }

Perm4 Perm4::swap(int a, int b) {
  std::array<int, 4> img{0, 1, 2, 3};
  std::swap(img[a], img[b]);
  return Perm4(img[0], img[1], img[2], img[3]);
}

Perm4 Perm4::inverse() const {
  std::array<int, 4> inv{};
  for (int i = 0; i < 4; ++i) inv[img_[i]] = i;
  return Perm4(inv[0], inv[1], inv[2], inv[3]);
}

Perm4 Perm4::operator*(const Perm4& other) const {
  return Perm4(img_[other.img_[0]], img_[other.img_[1]], img_[other.img_[2]],
               img_[other.img_[3]]);
}

int Perm4::sign() const {
  int inversions = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (img_[i] > img_[j]) ++inversions;
  return (inversions % 2 == 0) ? 1 : -1;
}

int Perm4::index() const {
  // Lehmer code; matches the lexicographic order used by from_index().
  int idx = 0;
  constexpr int fact[4] = {6, 2, 1, 1};
  for (int i = 0; i < 4; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < 4; ++j)
      if (img_[j] < img_[i]) ++smaller;
    idx += smaller * fact[i];
  }
  return idx;
}

std::string Perm4::str() const {
  std::string s(4, '0');
  for (int i = 0; i < 4; ++i) s[i] = static_cast<char>('0' + img_[i]);
  return s;
}

}  // namespace nsenum
