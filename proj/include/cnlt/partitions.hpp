#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cnlt/cascades.hpp"
#include "cnlt/root_system.hpp"

namespace cnlt {

/// The part X_point(-j), j >= 1.
struct Part {
  std::int16_t j = 1;
  std::int16_t point = 0;

  bool operator==(const Part&) const = default;
};

/// Order on parts: X_α(-i) ≺ X_β(-j) iff -i < -j, or i = j and α ≺ β.
inline bool part_less(Part x, Part y) {
  return x.j != y.j ? x.j > y.j : x.point < y.point;
}

/// A colored partition (PBW monomial) with parts kept in ascending order.
class ColoredPartition {
public:
  ColoredPartition() = default;
  explicit ColoredPartition(std::vector<Part> parts);
  /// From multiplicities keyed by (point, j).
  static ColoredPartition from_multiplicities(const std::map<std::pair<int, int>, int>& mult);

  const std::vector<Part>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// |Π| = -Σ j.
  long degree() const;
  long principal_degree(const SymplecticAlgebra& g) const;
  int multiplicity(int point, int j) const;
  int max_j() const { return parts_.empty() ? 0 : parts_.front().j; }

  /// Product ΠΦ in the symmetric algebra.
  ColoredPartition operator*(const ColoredPartition& other) const;
  /// True iff every part of sub occurs in this partition at least as often.
  bool contains(const ColoredPartition& sub) const;

  /// Copy with the part at `index` recolored to `to`, re-sorted.
  ColoredPartition replaced(size_t index, Part to) const;

  std::string to_string(const SymplecticAlgebra& g) const;

  bool operator==(const ColoredPartition&) const = default;

private:
  std::vector<Part> parts_;
};

/// (-ℓ, |Π|, shape read right to left, colors read right to left).
struct OrderKey {
  int neg_length = 0;
  long degree = 0;
  std::vector<int> shape_reversed;
  std::vector<int> colors_reversed;

  auto operator<=>(const OrderKey&) const = default;
};

OrderKey order_key(const ColoredPartition& p);

/// The total order ≺ on colored partitions.
std::strong_ordering compare(const ColoredPartition& x, const ColoredPartition& y);

struct Precedes {
  bool operator()(const ColoredPartition& x, const ColoredPartition& y) const {
    return compare(x, y) < 0;
  }
};

struct PartitionHash {
  size_t operator()(const ColoredPartition& p) const noexcept;
};

/// Embeds a j-free monomial at degrees -j-1 (upper) and -j (lower).
ColoredPartition at_degree(const LtMonomial& m, int j);

bool satisfies_conditions(const ColoredPartition& p, int k,
                          const std::vector<DifferenceCondition>& conds);

/// The leading-term monomials of every shape for fixed (n, k).
class LeadingTermIndex {
public:
  LeadingTermIndex(const SymplecticAlgebra& g, int k);

  int k() const { return k_; }
  /// True iff some leading term at some degree pair (j+1, j) embeds in p.
  bool embeds_in(const ColoredPartition& p) const;

private:
  struct Entry {
    std::vector<std::pair<int, int>> upper;  // (point, count)
    std::vector<std::pair<int, int>> lower;
  };
  int k_;
  int dim_;
  std::vector<Entry> entries_;
};

bool contains_leading_term(const ColoredPartition& p, const LeadingTermIndex& index);

enum class Grading { Principal, Homogeneous };

Grading parse_grading(const std::string& s);
const char* to_string(Grading g);

/// Degree of the part X_point(-j) in the chosen grading.
int part_value(const SymplecticAlgebra& g, int point, int j, Grading grading);

/// Colored partitions of degree m satisfying every difference condition,
/// sorted by ≺.
std::vector<ColoredPartition> enumerate_D(const SymplecticAlgebra& g, int k, int m,
                                          Grading grading);

/// |D| for every degree 0..max_degree in one search.
std::vector<long> count_D(const SymplecticAlgebra& g, int k, int max_degree,
                          Grading grading);

/// All colored partitions (no conditions) of grading degree <= max_degree.
std::vector<ColoredPartition> all_partitions_up_to(const SymplecticAlgebra& g,
                                                   int max_degree, Grading grading);

struct ColoredInteger {
  int value;
  int color;

  auto operator<=>(const ColoredInteger&) const = default;
};

/// Each part maps to (principal degree, row position); sorted descending.
std::vector<ColoredInteger> to_colored_integers(const SymplecticAlgebra& g,
                                                const ColoredPartition& p);

/// "4_3+1_1"; the empty partition prints as "0".
std::string format_colored_integers(const std::vector<ColoredInteger>& v);

}  // namespace cnlt
