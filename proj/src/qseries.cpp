#include "cnlt/qseries.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace cnlt {

PowerSeries::PowerSeries(int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("truncation order must be nonnegative");
  coeffs_.assign(max_degree + 1, 0);
}

PowerSeries PowerSeries::one(int max_degree) {
  PowerSeries s(max_degree);
  s.coeffs_[0] = 1;
  return s;
}

void PowerSeries::divide_by_one_minus_q_power(int j) {
  if (j < 1) throw std::invalid_argument("factor exponent must be positive");
  for (size_t m = j; m < coeffs_.size(); ++m) coeffs_[m] += coeffs_[m - j];
}

PowerSeries PowerSeries::operator*(const PowerSeries& other) const {
  PowerSeries out(std::min(max_degree(), other.max_degree()));
  for (int i = 0; i <= out.max_degree(); ++i)
    for (int j = 0; i + j <= out.max_degree(); ++j)
      out.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
  return out;
}

CongruenceFactor CongruenceFactor::from_signed(int modulus, const std::vector<int>& residues) {
  if (modulus < 1) throw std::invalid_argument("modulus must be positive");
  CongruenceFactor f;
  f.modulus = modulus;
  for (int r : residues) f.excluded_residues.insert(((r % modulus) + modulus) % modulus);
  return f;
}

bool CongruenceFactor::allows(int j) const {
  return excluded_residues.count(j % modulus) == 0;
}

PowerSeries expand_product(const std::vector<CongruenceFactor>& factors, int max_degree) {
  PowerSeries s = PowerSeries::one(max_degree);
  for (const auto& f : factors)
    for (int j = 1; j <= max_degree; ++j)
      if (f.allows(j)) s.divide_by_one_minus_q_power(j);
  return s;
}

std::vector<CongruenceFactor> c2_character_factors(int k) {
  if (k < 1) throw std::invalid_argument("level k must be at least 1");
  int mod = 2 * k + 6;
  return {
      CongruenceFactor::from_signed(2, {0}),
      CongruenceFactor::from_signed(mod, {0, 1, -1, 2, -2, 3, -3}),
      CongruenceFactor::from_signed(mod, {0, 1, -1, k + 1, -(k + 1), k + 2, -(k + 2), k + 3}),
  };
}

PowerSeries c2_character_product(int k, int max_degree) {
  return expand_product(c2_character_factors(k), max_degree);
}

std::vector<ColoredValue> colored_parts_C(int k, int max_degree) {
  auto factors = c2_character_factors(k);
  std::vector<ColoredValue> out;
  for (int j = 1; j <= max_degree; ++j)
    for (int c = 0; c < 3; ++c)
      if (factors[c].allows(j)) out.push_back({j, c + 1});
  return out;
}

BigInt count_three_color_partitions(int k, int m) {
  if (m < 0) return 0;
  auto parts = colored_parts_C(k, m);
  // Parts are taken in non-increasing list order; memoize on (first allowed
  // part, remaining sum).
  std::map<std::pair<size_t, int>, BigInt> memo;
  std::function<BigInt(size_t, int)> count = [&](size_t from, int left) -> BigInt {
    if (left == 0) return 1;
    if (from >= parts.size()) return 0;
    auto key = std::make_pair(from, left);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt total = 0;
    for (size_t i = from; i < parts.size() && parts[i].value <= left; ++i)
      total += count(i, left - parts[i].value);
    memo.emplace(key, total);
    return total;
  };
  return count(0, m);
}

}  // namespace cnlt
