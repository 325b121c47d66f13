#pragma once

#include <boost/rational.hpp>

namespace voteflow {

// Exact score arithmetic for the election core. Estimators and sketches use
// doubles; nothing here ever rounds.
using Rat = boost::rational<long long>;

inline double to_double(const Rat& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace voteflow
