#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "cnlt/adjoint_engine.hpp"
#include "cnlt/cascades.hpp"
#include "cnlt/partitions.hpp"

namespace testing {

using namespace cnlt;

// Rank of the point with index positions x and y, in either order.
inline int pt(const SymplecticAlgebra& g, int x, int y) {
  if (x > y) std::swap(x, y);
  return g.rank(g.index(x), g.index(y));
}

inline int bar(const SymplecticAlgebra& g, int pos) { return 2 * g.n() + 1 - pos; }

inline std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Partition from (point, j, multiplicity) triples.
inline ColoredPartition partition(std::initializer_list<std::tuple<int, int, int>> parts) {
  std::map<std::pair<int, int>, int> mult;
  for (auto [p, j, m] : parts) mult[{p, j}] += m;
  return ColoredPartition::from_multiplicities(mult);
}

}  // namespace testing
