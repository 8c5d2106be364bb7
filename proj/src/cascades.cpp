#include "cnlt/cascades.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>

namespace cnlt {

bool is_cascade(const SymplecticAlgebra& g, std::span<const int> points) {
  for (size_t i = 0; i + 1 < points.size(); ++i) {
    const BasisPoint& p = g.point(points[i]);
    const BasisPoint& q = g.point(points[i + 1]);
    bool down = q.col == p.col && q.row.position() > p.row.position();
    bool left = q.row == p.row && q.col.position() < p.col.position();
    if (!down && !left) return false;
  }
  return true;
}

std::vector<std::vector<int>> maximal_cascades(const SymplecticAlgebra& g,
                                               std::span<const int> region) {
  int n = g.n();
  std::vector<char> inside(g.dim(), 0);
  for (int r : region) inside[r] = 1;
  auto at = [&](int col, int row) -> int {
    if (col < 1 || row > 2 * n || col > row) return -1;
    int r = rank_of(n, col, row);
    return inside[r] ? r : -1;
  };
  auto successors = [&](int r) {
    const BasisPoint& p = g.point(r);
    int c = p.col.position(), w = p.row.position();
    std::vector<int> out;
    if (int s = at(c - 1, w); s >= 0) out.push_back(s);
    if (int s = at(c, w + 1); s >= 0) out.push_back(s);
    return out;
  };
  auto has_predecessor = [&](int r) {
    const BasisPoint& p = g.point(r);
    int c = p.col.position(), w = p.row.position();
    return at(c + 1, w) >= 0 || at(c, w - 1) >= 0;
  };

  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::function<void(int)> walk = [&](int r) {
    path.push_back(r);
    auto next = successors(r);
    if (next.empty()) out.push_back(path);
    for (int s : next) walk(s);
    path.pop_back();
  };
  for (int r : region)
    if (!has_predecessor(r)) walk(r);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DifferenceCondition> difference_conditions(const SymplecticAlgebra& g) {
  std::vector<DifferenceCondition> out;
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  for (int pos = 1; pos <= 2 * g.n(); ++pos) {
    Index r = g.index(pos);
    auto [up, low] = g.triangles(r);
    auto uppers = maximal_cascades(g, up);
    auto lowers = maximal_cascades(g, low);
    for (auto u : uppers) {
      std::sort(u.begin(), u.end());
      for (auto l : lowers) {
        std::sort(l.begin(), l.end());
        if (seen.emplace(u, l).second) out.push_back({r, u, l});
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

int LeadingTerm::b() const {
  int s = 0;
  for (int m : upper.multiplicities) s += m;
  return s;
}

int LeadingTerm::a() const {
  int s = 0;
  for (int m : lower.multiplicities) s += m;
  return s;
}

namespace {

std::vector<int> expand(const Cascade& c) {
  std::vector<int> out;
  for (size_t i = 0; i < c.points.size(); ++i)
    out.insert(out.end(), c.multiplicities.at(i), c.points[i]);
  std::sort(out.begin(), out.end());
  return out;
}

// All sorted multisets of the given size drawn from points.
void multisets(const std::vector<int>& points, int size,
               std::set<std::vector<int>>& out) {
  std::vector<int> pick;
  std::function<void(size_t, int)> rec = [&](size_t from, int left) {
    if (left == 0) {
      auto s = pick;
      std::sort(s.begin(), s.end());
      out.insert(std::move(s));
      return;
    }
    for (size_t i = from; i < points.size(); ++i) {
      pick.push_back(points[i]);
      rec(i, left - 1);
      pick.pop_back();
    }
  };
  rec(0, size);
}

void check_shape(int k, int b, int a) {
  if (a < 0 || b < 0) throw std::invalid_argument("shape (b,a) must be nonnegative");
  if (a + b != k + 1) throw std::invalid_argument("shape (b,a) must satisfy a+b = k+1");
}

}  // namespace

LtMonomial LeadingTerm::monomial() const { return {expand(upper), expand(lower)}; }

std::set<LtMonomial> enumerate_leading_terms(const SymplecticAlgebra& g, int k,
                                             int b, int a) {
  check_shape(k, b, a);
  std::set<LtMonomial> out;
  for (int pos = 1; pos <= 2 * g.n(); ++pos) {
    auto [up, low] = g.triangles(g.index(pos));
    std::set<std::vector<int>> ups, lows;
    for (const auto& c : maximal_cascades(g, up)) multisets(c, b, ups);
    for (const auto& c : maximal_cascades(g, low)) multisets(c, a, lows);
    for (const auto& u : ups)
      for (const auto& l : lows) out.insert({u, l});
  }
  return out;
}

long count_leading_terms(const SymplecticAlgebra& g, int k, int b, int a) {
  return static_cast<long>(enumerate_leading_terms(g, k, b, a).size());
}

std::vector<LeadingTerm> admissible_representations(const SymplecticAlgebra& g,
                                                    const LtMonomial& m) {
  std::map<int, int> up_mult, low_mult;
  for (int r : m.upper) ++up_mult[r];
  for (int r : m.lower) ++low_mult[r];

  // The shortest stretch of a path that carries every point of the multiset.
  auto fit = [](const std::vector<int>& path,
                const std::map<int, int>& mult) -> std::optional<Cascade> {
    int hits = 0;
    long first = -1, last = -1;
    for (size_t i = 0; i < path.size(); ++i)
      if (mult.count(path[i])) {
        ++hits;
        if (first < 0) first = static_cast<long>(i);
        last = static_cast<long>(i);
      }
    if (hits != static_cast<int>(mult.size())) return std::nullopt;
    Cascade c;
    if (first < 0) return c;
    for (long i = first; i <= last; ++i) {
      c.points.push_back(path[i]);
      auto it = mult.find(path[i]);
      c.multiplicities.push_back(it == mult.end() ? 0 : it->second);
    }
    return c;
  };

  std::vector<LeadingTerm> out;
  for (int pos = 1; pos <= 2 * g.n(); ++pos) {
    Index r = g.index(pos);
    auto [up, low] = g.triangles(r);
    std::optional<Cascade> cu, cl;
    for (const auto& path : maximal_cascades(g, up))
      if ((cu = fit(path, up_mult))) break;
    if (!cu) continue;
    for (const auto& path : maximal_cascades(g, low))
      if ((cl = fit(path, low_mult))) break;
    if (!cl) continue;
    out.push_back({r, *cu, *cl});
  }
  return out;
}

}  // namespace cnlt
