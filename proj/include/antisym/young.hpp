#pragma once

#include <array>

namespace antisym::rep {

/// Labels of the three irreducible components of the two-fold tensor square
/// of the antisymmetric space. Canonical order is fixed globally: every
/// 3-vector and every T-matrix column follows it.
enum class YoungSymbol { Y1111 = 0, Y22 = 1, Y211 = 2 };

inline constexpr std::array<YoungSymbol, 3> young_order{YoungSymbol::Y1111, YoungSymbol::Y22,
                                                        YoungSymbol::Y211};

inline constexpr const char* to_string(YoungSymbol y) {
  switch (y) {
    case YoungSymbol::Y1111: return "[1,1,1,1]";
    case YoungSymbol::Y22: return "[2,2]";
    case YoungSymbol::Y211: return "[2,1,1]";
  }
  return "?";
}

}  // namespace antisym::rep
