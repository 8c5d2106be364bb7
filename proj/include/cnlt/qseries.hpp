#pragma once

#include <set>
#include <vector>

#include "cnlt/root_system.hpp"

namespace cnlt {

/// Power series in q truncated after q^M, with exact integer coefficients.
class PowerSeries {
public:
  explicit PowerSeries(int max_degree);
  static PowerSeries one(int max_degree);

  int max_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& operator[](int m) const { return coeffs_.at(m); }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  /// In-place multiplication by 1/(1 - q^j).
  void divide_by_one_minus_q_power(int j);
  PowerSeries operator*(const PowerSeries& other) const;

  bool operator==(const PowerSeries&) const = default;

private:
  std::vector<BigInt> coeffs_;
};

/// Π over j >= 1 with (j mod modulus) not excluded of 1/(1 - q^j).
struct CongruenceFactor {
  int modulus = 1;
  std::set<int> excluded_residues;

  /// Normalizes signed residues such as ±(k+1) into 0..modulus-1.
  static CongruenceFactor from_signed(int modulus, const std::vector<int>& residues);
  bool allows(int j) const;
};

PowerSeries expand_product(const std::vector<CongruenceFactor>& factors, int max_degree);

/// The three factors of the principally specialized C_2^(1) character of
/// L(kΛ_0).
std::vector<CongruenceFactor> c2_character_factors(int k);

PowerSeries c2_character_product(int k, int max_degree);

struct ColoredValue {
  int value;
  int color;  // 1, 2 or 3

  auto operator<=>(const ColoredValue&) const = default;
};

/// The colored integers of C_k with value <= max_degree, ascending by value
/// then color.
std::vector<ColoredValue> colored_parts_C(int k, int max_degree);

/// Number of multisets of colored parts from C_k summing to m.
BigInt count_three_color_partitions(int k, int m);

}  // namespace cnlt
