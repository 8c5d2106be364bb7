#include "cnlt/partitions.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace cnlt {

ColoredPartition::ColoredPartition(std::vector<Part> parts) : parts_(std::move(parts)) {
  for (const Part& p : parts_)
    if (p.j < 1) throw std::invalid_argument("parts must have degree -j with j >= 1");
  std::sort(parts_.begin(), parts_.end(), part_less);
}

ColoredPartition ColoredPartition::from_multiplicities(
    const std::map<std::pair<int, int>, int>& mult) {
  std::vector<Part> parts;
  for (const auto& [key, m] : mult) {
    if (m < 0) throw std::invalid_argument("negative multiplicity");
    for (int i = 0; i < m; ++i)
      parts.push_back({static_cast<std::int16_t>(key.second),
                       static_cast<std::int16_t>(key.first)});
  }
  return ColoredPartition(std::move(parts));
}

long ColoredPartition::degree() const {
  long d = 0;
  for (const Part& p : parts_) d -= p.j;
  return d;
}

long ColoredPartition::principal_degree(const SymplecticAlgebra& g) const {
  long d = 0;
  for (const Part& p : parts_) d += cnlt::principal_degree(g.point(p.point), g.n(), p.j);
  return d;
}

int ColoredPartition::multiplicity(int point, int j) const {
  int m = 0;
  for (const Part& p : parts_) m += (p.point == point && p.j == j);
  return m;
}

ColoredPartition ColoredPartition::operator*(const ColoredPartition& other) const {
  ColoredPartition out;
  out.parts_.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
             std::back_inserter(out.parts_), part_less);
  return out;
}

bool ColoredPartition::contains(const ColoredPartition& sub) const {
  return std::includes(parts_.begin(), parts_.end(), sub.parts_.begin(),
                       sub.parts_.end(), part_less);
}

ColoredPartition ColoredPartition::replaced(size_t index, Part to) const {
  ColoredPartition out = *this;
  auto& v = out.parts_;
  v.erase(v.begin() + static_cast<long>(index));
  v.insert(std::upper_bound(v.begin(), v.end(), to, part_less), to);
  return out;
}

std::string ColoredPartition::to_string(const SymplecticAlgebra& g) const {
  if (parts_.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < parts_.size();) {
    size_t e = i;
    while (e < parts_.size() && parts_[e] == parts_[i]) ++e;
    if (i) os << ' ';
    os << g.point(parts_[i].point).label() << "(-" << parts_[i].j << ")";
    if (e - i > 1) os << '^' << (e - i);
    i = e;
  }
  return os.str();
}

OrderKey order_key(const ColoredPartition& p) {
  OrderKey key;
  key.neg_length = -p.length();
  key.degree = p.degree();
  for (auto it = p.parts().rbegin(); it != p.parts().rend(); ++it) {
    key.shape_reversed.push_back(-it->j);
    key.colors_reversed.push_back(it->point);
  }
  return key;
}

std::strong_ordering compare(const ColoredPartition& x, const ColoredPartition& y) {
  if (x.length() != y.length()) return y.length() <=> x.length();
  if (auto c = x.degree() <=> y.degree(); c != 0) return c;
  const auto& a = x.parts();
  const auto& b = y.parts();
  for (size_t i = a.size(); i-- > 0;)
    if (a[i].j != b[i].j) return b[i].j <=> a[i].j;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i].point != b[i].point) return a[i].point <=> b[i].point;
  return std::strong_ordering::equal;
}

size_t PartitionHash::operator()(const ColoredPartition& p) const noexcept {
  size_t h = 1469598103934665603ull;
  for (const Part& q : p.parts()) {
    h ^= static_cast<size_t>(static_cast<std::uint16_t>(q.j)) << 16 |
         static_cast<std::uint16_t>(q.point);
    h *= 1099511628211ull;
  }
  return h;
}

ColoredPartition at_degree(const LtMonomial& m, int j) {
  std::vector<Part> parts;
  for (int r : m.upper)
    parts.push_back({static_cast<std::int16_t>(j + 1), static_cast<std::int16_t>(r)});
  for (int r : m.lower)
    parts.push_back({static_cast<std::int16_t>(j), static_cast<std::int16_t>(r)});
  return ColoredPartition(std::move(parts));
}

namespace {

// mult[j][point] for j in 0..max_j+1.
std::vector<std::vector<int>> multiplicity_table(const ColoredPartition& p, int dim) {
  std::vector<std::vector<int>> t(p.max_j() + 2, std::vector<int>(dim, 0));
  for (const Part& q : p.parts()) ++t[q.j][q.point];
  return t;
}

}  // namespace

bool satisfies_conditions(const ColoredPartition& p, int k,
                          const std::vector<DifferenceCondition>& conds) {
  if (p.empty()) return true;
  int dim = 0;
  for (const Part& q : p.parts()) dim = std::max(dim, q.point + 1);
  for (const auto& c : conds) {
    for (int r : c.upper) dim = std::max(dim, r + 1);
    for (int r : c.lower) dim = std::max(dim, r + 1);
  }
  auto t = multiplicity_table(p, dim);
  for (int j = 1; j <= p.max_j(); ++j)
    for (const auto& c : conds) {
      int s = 0;
      for (int r : c.upper) s += t[j + 1][r];
      for (int r : c.lower) s += t[j][r];
      if (s > k) return false;
    }
  return true;
}

LeadingTermIndex::LeadingTermIndex(const SymplecticAlgebra& g, int k)
    : k_(k), dim_(g.dim()) {
  if (k < 0) throw std::invalid_argument("level k must be nonnegative");
  auto counts = [](const std::vector<int>& v) {
    std::vector<std::pair<int, int>> out;
    for (int r : v) {
      if (!out.empty() && out.back().first == r)
        ++out.back().second;
      else
        out.emplace_back(r, 1);
    }
    return out;
  };
  for (int b = 0; b <= k + 1; ++b)
    for (const auto& m : enumerate_leading_terms(g, k, b, k + 1 - b))
      entries_.push_back({counts(m.upper), counts(m.lower)});
}

bool LeadingTermIndex::embeds_in(const ColoredPartition& p) const {
  if (p.length() < k_ + 1) return false;
  auto t = multiplicity_table(p, dim_);
  for (int j = 1; j <= p.max_j(); ++j)
    for (const auto& e : entries_) {
      bool ok = true;
      for (const auto& [r, c] : e.upper) ok = ok && t[j + 1][r] >= c;
      for (const auto& [r, c] : e.lower) ok = ok && t[j][r] >= c;
      if (ok) return true;
    }
  return false;
}

bool contains_leading_term(const ColoredPartition& p, const LeadingTermIndex& index) {
  return index.embeds_in(p);
}

Grading parse_grading(const std::string& s) {
  if (s == "principal") return Grading::Principal;
  if (s == "homogeneous") return Grading::Homogeneous;
  throw std::invalid_argument("grading must be 'principal' or 'homogeneous'");
}

const char* to_string(Grading g) {
  return g == Grading::Principal ? "principal" : "homogeneous";
}

int part_value(const SymplecticAlgebra& g, int point, int j, Grading grading) {
  return grading == Grading::Principal ? principal_degree(g.point(point), g.n(), j) : j;
}

namespace {

// Depth-first search over levels j = top..1, choosing the multiplicities of
// every point at level j. Conditions couple only levels j+1 and j, so the
// running sums are reset per level.
class PartitionSearch {
public:
  using Emit = std::function<void(const std::vector<Part>&, int degree)>;

  PartitionSearch(const SymplecticAlgebra& g, int k, int budget, Grading grading,
                  const std::vector<DifferenceCondition>* conds, Emit emit)
      : g_(g), k_(k), budget_(budget), grading_(grading), emit_(std::move(emit)) {
    int N = g.dim();
    upper_of_.resize(N);
    lower_of_.resize(N);
    if (conds) {
      for (size_t c = 0; c < conds->size(); ++c) {
        for (int r : (*conds)[c].upper) upper_of_[r].push_back(static_cast<int>(c));
        for (int r : (*conds)[c].lower) lower_of_[r].push_back(static_cast<int>(c));
      }
      upper_sum_.assign(conds->size(), 0);
      lower_sum_.assign(conds->size(), 0);
    }
  }

  void run() {
    if (budget_ < 0) return;
    int top = 0;
    while (min_value(top + 1) <= budget_) ++top;
    level(top, budget_);
  }

private:
  int min_value(int j) const {
    return grading_ == Grading::Principal ? 2 * g_.n() * (j - 1) + 1 : j;
  }

  void level(int j, int remaining) {
    if (j == 0) {
      emit_(stack_, budget_ - remaining);
      return;
    }
    choose(j, g_.dim() - 1, remaining);
  }

  void choose(int j, int point, int remaining) {
    if (point < 0) {
      auto saved_upper = upper_sum_;
      auto saved_lower = lower_sum_;
      std::fill(upper_sum_.begin(), upper_sum_.end(), 0);
      std::fill(lower_sum_.begin(), lower_sum_.end(), 0);
      for (auto it = stack_.rbegin(); it != stack_.rend() && it->j == j; ++it)
        for (int c : upper_of_[it->point]) ++upper_sum_[c];
      level(j - 1, remaining);
      upper_sum_ = std::move(saved_upper);
      lower_sum_ = std::move(saved_lower);
      return;
    }
    choose(j, point - 1, remaining);
    int v = part_value(g_, point, j, grading_);
    int added = 0;
    while (v <= remaining) {
      bool ok = true;
      for (int c : lower_of_[point])
        if (upper_sum_[c] + lower_sum_[c] + 1 > k_) ok = false;
      if (!ok) break;
      for (int c : lower_of_[point]) ++lower_sum_[c];
      stack_.push_back({static_cast<std::int16_t>(j), static_cast<std::int16_t>(point)});
      ++added;
      remaining -= v;
      choose(j, point - 1, remaining);
    }
    for (int i = 0; i < added; ++i) {
      stack_.pop_back();
      for (int c : lower_of_[point]) --lower_sum_[c];
    }
  }

  const SymplecticAlgebra& g_;
  int k_;
  int budget_;
  Grading grading_;
  Emit emit_;
  std::vector<std::vector<int>> upper_of_, lower_of_;
  std::vector<int> upper_sum_, lower_sum_;
  std::vector<Part> stack_;
};

}  // namespace

std::vector<ColoredPartition> enumerate_D(const SymplecticAlgebra& g, int k, int m,
                                          Grading grading) {
  if (m < 0) throw std::invalid_argument("degree m must be nonnegative");
  auto conds = difference_conditions(g);
  std::vector<ColoredPartition> out;
  PartitionSearch search(g, k, m, grading, &conds,
                         [&](const std::vector<Part>& parts, int degree) {
                           if (degree == m) out.emplace_back(parts);
                         });
  search.run();
  std::sort(out.begin(), out.end(), Precedes{});
  return out;
}

std::vector<long> count_D(const SymplecticAlgebra& g, int k, int max_degree,
                          Grading grading) {
  if (max_degree < 0) throw std::invalid_argument("max degree must be nonnegative");
  auto conds = difference_conditions(g);
  std::vector<long> counts(max_degree + 1, 0);
  PartitionSearch search(g, k, max_degree, grading, &conds,
                         [&](const std::vector<Part>&, int degree) { ++counts[degree]; });
  search.run();
  return counts;
}

std::vector<ColoredPartition> all_partitions_up_to(const SymplecticAlgebra& g,
                                                   int max_degree, Grading grading) {
  std::vector<ColoredPartition> out;
  PartitionSearch search(g, 0, max_degree, grading, nullptr,
                         [&](const std::vector<Part>& parts, int) {
                           out.emplace_back(parts);
                         });
  search.run();
  return out;
}

std::vector<ColoredInteger> to_colored_integers(const SymplecticAlgebra& g,
                                                const ColoredPartition& p) {
  std::vector<ColoredInteger> out;
  for (const Part& q : p.parts()) {
    const BasisPoint& bp = g.point(q.point);
    out.push_back({principal_degree(bp, g.n(), q.j), bp.row.position()});
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::string format_colored_integers(const std::vector<ColoredInteger>& v) {
  if (v.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += '+';
    s += std::to_string(v[i].value) + "_" + std::to_string(v[i].color);
  }
  return s;
}

}  // namespace cnlt
