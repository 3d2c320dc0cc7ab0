#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "antisym/errors.hpp"

namespace antisym::rep {

/// Ordered list of tensor legs with dimensions. Composite indices are
/// row-major with leg 0 the most significant digit. The fixed convention for
/// the four-system space is (A, B, A', B'), each of dimension d.
struct LegLayout {
  struct Leg {
    std::string name;
    int dim;
  };

  std::vector<Leg> legs;

  int num_legs() const { return static_cast<int>(legs.size()); }

  long total_dim() const {
    long t = 1;
    for (const auto& l : legs) t *= l.dim;
    return t;
  }

  int leg_index(std::string_view name) const {
    for (int i = 0; i < num_legs(); ++i)
      if (legs[static_cast<size_t>(i)].name == name) return i;
    throw InputError("LegLayout: no leg named '" + std::string(name) + "'");
  }

  /// Decomposes a flat index into per-leg digits.
  void decode(long flat, std::vector<int>& digits) const {
    digits.resize(legs.size());
    for (int i = num_legs() - 1; i >= 0; --i) {
      digits[static_cast<size_t>(i)] = static_cast<int>(flat % legs[static_cast<size_t>(i)].dim);
      flat /= legs[static_cast<size_t>(i)].dim;
    }
  }

  long encode(const std::vector<int>& digits) const {
    long flat = 0;
    for (int i = 0; i < num_legs(); ++i) flat = flat * legs[static_cast<size_t>(i)].dim + digits[static_cast<size_t>(i)];
    return flat;
  }

  /// The (A, B, A', B') convention used throughout.
  static LegLayout four_systems(int d) {
    return LegLayout{{{"A", d}, {"B", d}, {"Ap", d}, {"Bp", d}}};
  }

  static LegLayout two_systems(int d) { return LegLayout{{{"A", d}, {"B", d}}}; }

  static LegLayout uniform(int num_legs, int d) {
    LegLayout l;
    for (int i = 0; i < num_legs; ++i) l.legs.push_back({"S" + std::to_string(i), d});
    return l;
  }
};

}  // namespace antisym::rep
