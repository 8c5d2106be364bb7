#pragma once

#include <set>
#include <span>
#include <vector>

#include "cnlt/root_system.hpp"

namespace cnlt {

/// A staircase of basis points going down a column or left along a row.
///
/// Points are ranks. Multiplicities, when present, are aligned with points
/// and may be zero.
struct Cascade {
  std::vector<int> points;
  std::vector<int> multiplicities;

  bool operator==(const Cascade&) const = default;
};

/// True iff each consecutive pair either shares a column with the next row
/// strictly lower, or shares a row with the next column strictly to the left.
bool is_cascade(const SymplecticAlgebra& g, std::span<const int> points);

/// Cascades in a triangular region that are contained in no other cascade
/// of the region. Each is returned as the ordered path from its top-right
/// end; output is sorted.
std::vector<std::vector<int>> maximal_cascades(const SymplecticAlgebra& g,
                                               std::span<const int> region);

/// Σ_{upper} m(p, j+1) + Σ_{lower} m(p, j) <= k for every j >= 1.
struct DifferenceCondition {
  Index pivot;
  std::vector<int> upper;  // ranks, ascending
  std::vector<int> lower;  // ranks, ascending

  bool operator==(const DifferenceCondition&) const = default;
};

/// All conditions from pairs of maximal cascades (△_r, ^r△) over every r.
std::vector<DifferenceCondition> difference_conditions(const SymplecticAlgebra& g);

/// A j-free monomial X_B(-j-1)^... X_A(-j)^...: sorted multisets of ranks.
struct LtMonomial {
  std::vector<int> upper;  // degree -j-1, ascending ranks with repetition
  std::vector<int> lower;  // degree -j

  auto operator<=>(const LtMonomial&) const = default;
};

/// An admissible cascade pair with multiplicities for a concrete pivot.
struct LeadingTerm {
  Index pivot;
  Cascade upper;  // in △_pivot, read at degree -j-1
  Cascade lower;  // in ^pivot△, read at degree -j

  int b() const;
  int a() const;
  LtMonomial monomial() const;
};

/// Distinct monomials over all pivots and cascade multiplicities with
/// Σ upper = b and Σ lower = a.
std::set<LtMonomial> enumerate_leading_terms(const SymplecticAlgebra& g, int k,
                                             int b, int a);

long count_leading_terms(const SymplecticAlgebra& g, int k, int b, int a);

/// Every admissible representation of a monomial. Cascades are trimmed to
/// run from the first to the last point of positive multiplicity, keeping
/// zero-multiplicity points in between.
std::vector<LeadingTerm> admissible_representations(const SymplecticAlgebra& g,
                                                    const LtMonomial& m);

}  // namespace cnlt
