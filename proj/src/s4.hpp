#pragma once

// Character data for the symmetric group on four letters, used to assemble
// the central (isotypic) projectors acting on the four tensor legs.

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

namespace antisym::rep::detail {

struct S4Element {
  std::array<int, 4> perm;  // leg i moves to slot perm[i]
  int sign;
  // characters on this element's conjugacy class, by Young label order
  double chi_1111;
  double chi_22;
  double chi_211;
};

inline int perm_sign4(std::array<int, 4> p) {
  int sign = 1;
  for (int i = 0; i < 4; ++i)
    while (p[static_cast<size_t>(i)] != i) {
      std::swap(p[static_cast<size_t>(i)], p[static_cast<size_t>(p[static_cast<size_t>(i)])]);
      sign = -sign;
    }
  return sign;
}

// Cycle type as sorted cycle lengths, descending.
inline std::array<int, 4> cycle_type(const std::array<int, 4>& p) {
  std::array<int, 4> lengths{0, 0, 0, 0};
  std::array<bool, 4> seen{false, false, false, false};
  int idx = 0;
  for (int i = 0; i < 4; ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    int len = 0, j = i;
    while (!seen[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = true;
      j = p[static_cast<size_t>(j)];
      ++len;
    }
    lengths[static_cast<size_t>(idx++)] = len;
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<int>());
  return lengths;
}

inline const std::vector<S4Element>& s4_elements() {
  static const std::vector<S4Element> table = [] {
    std::vector<S4Element> out;
    std::array<int, 4> p{0, 1, 2, 3};
    do {
      S4Element e;
      e.perm = p;
      e.sign = perm_sign4(p);
      const auto ct = cycle_type(p);
      if (ct == std::array<int, 4>{1, 1, 1, 1}) {
        e.chi_22 = 2;
        e.chi_211 = 3;
      } else if (ct == std::array<int, 4>{2, 1, 1, 0}) {
        e.chi_22 = 0;
        e.chi_211 = -1;
      } else if (ct == std::array<int, 4>{2, 2, 0, 0}) {
        e.chi_22 = 2;
        e.chi_211 = -1;
      } else if (ct == std::array<int, 4>{3, 1, 0, 0}) {
        e.chi_22 = -1;
        e.chi_211 = 0;
      } else {  // 4-cycle
        e.chi_22 = 0;
        e.chi_211 = 1;
      }
      e.chi_1111 = e.sign;
      out.push_back(e);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return table;
}

// Dimension of the irreducible representation attached to each label.
inline constexpr std::array<double, 3> s4_dims{1.0, 2.0, 3.0};

inline double s4_character(const S4Element& e, int young_index) {
  switch (young_index) {
    case 0: return e.chi_1111;
    case 1: return e.chi_22;
    default: return e.chi_211;
  }
}

}  // namespace antisym::rep::detail
