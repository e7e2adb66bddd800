#pragma once

#include <cmath>
#include <set>

namespace scenbdd {

// Values closer than this are one critical value.
constexpr double kCriticalValueTol = 1e-9;

// Maps raw values to a stable representative per cluster of values within
// kCriticalValueTol of each other (first-seen wins).
class ValueClusters {
  public:
    double representative(double v) {
        auto it = reps_.lower_bound(v - kCriticalValueTol);
        if (it != reps_.end() && std::abs(*it - v) <= kCriticalValueTol) return *it;
        reps_.insert(v);
        return v;
    }

  private:
    std::set<double> reps_;
};

}  // namespace scenbdd
