#pragma once

#include <cmath>

#include "vlse/errors.hpp"

namespace vlse {

// Uniform partition of [0, T] into n intervals, nodes t_i = i*T/n.
struct TimeGrid {
  double horizon = 0.0;  // T
  int intervals = 0;     // n

  TimeGrid(double T, int n) : horizon(T), intervals(n) {
    if (!(T > 0.0) || !std::isfinite(T)) throw DomainError("TimeGrid: horizon must be positive");
    if (n < 2) throw DomainError("TimeGrid: need at least 2 intervals");
  }

  double step() const { return horizon / intervals; }
  double node(int i) const { return (static_cast<double>(i) * horizon) / intervals; }
  int points() const { return intervals + 1; }

  bool operator==(const TimeGrid& o) const {
    return horizon == o.horizon && intervals == o.intervals;
  }
  bool operator!=(const TimeGrid& o) const { return !(*this == o); }
};

}  // namespace vlse
