#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <set>

#include "cnlt/adjoint_engine.hpp"

namespace cnlt {

namespace {

struct Mass {
  int col;  // position
  int row;  // position
  int m;
};

class Planner {
public:
  Planner(const SymplecticAlgebra& g, int j) : g_(g), n_(g.n()), j_(j) {}

  // Rank of the point with indices at positions x and y, in either order.
  int pt(int x, int y) const {
    if (x > y) std::swap(x, y);
    return rank_of(n_, x, y);
  }

  void repeat(std::vector<int>& out, int arrow, int count) const {
    out.insert(out.end(), std::max(count, 0), arrow);
  }

  void move(std::map<int, int>& block, int from, int to, int count) {
    if (count <= 0) return;
    int& have = block[from];
    if (have < count) throw std::logic_error("construction plan moves a missing factor");
    have -= count;
    if (have == 0) block.erase(from);
    block[to] += count;
  }

  void phase(std::string name, std::vector<int> arrows) {
    std::map<std::pair<int, int>, int> mult;
    for (auto [r, m] : upper) mult[{r, j_ + 1}] += m;
    for (auto [r, m] : lower) mult[{r, j_}] += m;
    phases.push_back({std::move(name), std::move(arrows),
                      ColoredPartition::from_multiplicities(mult)});
  }

  std::vector<Mass> masses(const Cascade& c) const {
    std::vector<Mass> out;
    for (size_t i = 0; i < c.points.size(); ++i)
      if (c.multiplicities.at(i) > 0) {
        const BasisPoint& p = g_.point(c.points[i]);
        out.push_back({p.col.position(), p.row.position(), c.multiplicities[i]});
      }
    return out;
  }

  // Moves a staircase down row by row with simple-root arrows. Mass that
  // belongs to lower rows leaves each row; mass whose row is the mirror w̄ of
  // an unbarred row w leaves through [w̄ w̄] instead. `extra` factors travel
  // along the diagonal, two arrows per row.
  void waterfall(std::vector<Mass> travel, std::map<int, int>& block, int top, int bottom,
                 int extra, std::map<int, int>* diagonal, const std::string& label) {
    const int N2 = 2 * n_;
    for (int w = top; w < bottom; ++w) {
      std::map<int, int> down, jump;  // column -> mass
      int moved = 0, jumped = 0;
      for (Mass& x : travel) {
        if (x.row <= w || x.m == 0) continue;
        if (w < n_ && x.row == N2 + 1 - w && x.col <= w) {
          jump[x.col] += x.m;
          jumped += x.m;
          x.m = 0;  // placed
        } else {
          down[x.col] += x.m;
          moved += x.m;
        }
      }
      std::vector<int> arrows;
      repeat(arrows, pt(w + 1, N2 + 1 - w), moved + 2 * extra);
      repeat(arrows, pt(N2 + 1 - w, N2 + 1 - w), jumped);
      for (auto [c, m] : down) move(block, pt(c, w), pt(c, w + 1), m);
      for (auto [c, m] : jump) move(block, pt(c, w), pt(c, N2 + 1 - w), m);
      if (diagonal) move(*diagonal, pt(w, w), pt(w + 1, w + 1), extra);
      phase(label + " row " + g_.index(w).label() + " to " + g_.index(w + 1).label(),
            std::move(arrows));
    }
  }

  struct Profile {
    int top;     // uppermost row
    int bottom;  // lowest row
    std::map<int, int> col;                 // column sums
    std::map<std::pair<int, int>, int> at;  // (col,row) -> mass
    int m(int c) const { return col.count(c) ? col.at(c) : 0; }
    int d(int c, int w) const { return at.count({c, w}) ? at.at({c, w}) : 0; }
  };

  Profile profile(const std::vector<Mass>& xs) const {
    Profile p{2 * n_, 1, {}, {}};
    for (const Mass& x : xs) {
      p.top = std::min(p.top, x.row);
      p.bottom = std::max(p.bottom, x.row);
      p.col[x.col] += x.m;
      p.at[{x.col, x.row}] += x.m;
    }
    return p;
  }

  static std::vector<Mass> without_column(const std::vector<Mass>& xs, int c,
                                          const std::set<int>& rows) {
    std::vector<Mass> out;
    for (const Mass& x : xs)
      if (x.col != c || !rows.count(x.row)) out.push_back(x);
    return out;
  }

  void plan(const LeadingTerm& target) {
    const int N2 = 2 * n_;
    const int top = pt(1, 1);
    auto B = masses(target.upper);
    auto A = masses(target.lower);
    int b = target.b(), a = target.a();
    if (b) upper[top] = b;
    if (a) lower[top] = a;

    int q = 1;
    // When the upper block reaches row 1̄ the lower one ends at X_1̄1̄, the
    // ≺-minimal point, and is sent there first.
    int ta = a;
    if (b > 0 && a > 0 && profile(B).bottom == N2) {
      std::vector<int> arrows;
      repeat(arrows, pt(N2, N2), 2 * a);
      move(lower, top, pt(N2, N2), a);
      phase("lower block to the last row", std::move(arrows));
      ta = 0;
    }
    if (b > 0) {
      Profile P = profile(B);
      const int t = P.top;
      const int r = t <= n_ ? t : N2 + 1 - t;
      // Column-1 mass in barred rows s̄ with s above r cannot be reached by
      // the waterfall; it is sent from X_11 directly.
      std::set<int> direct;
      if (r > 1)
        for (int w = std::max(t + 1, n_ + 1); w <= P.bottom; ++w)
          if (N2 + 1 - w < r && P.d(1, w) > 0) direct.insert(w);
      int sent = 0;
      for (int w : direct) sent += P.d(1, w);
      const int m1 = P.m(1) - sent;

      if (t <= n_ && r > 1) {
        std::vector<int> arrows;
        repeat(arrows, pt(r, N2), 2 * ta + m1 + P.m(r));
        move(upper, top, pt(1, r), m1 + P.m(r));
        move(lower, top, pt(r, r), ta);
        for (int s = 2; s < r; ++s) {
          repeat(arrows, pt(s, N2), P.m(s));
          move(upper, top, pt(1, s), P.m(s));
        }
        for (int w : direct) {
          repeat(arrows, pt(w, N2), P.d(1, w));
          move(upper, top, pt(1, w), P.d(1, w));
        }
        phase("upper barrier, first column", std::move(arrows));

        arrows.clear();
        int sum = 0;
        for (int s = 2; s <= r; ++s) {
          sum += P.m(s);
          move(upper, pt(1, s), pt(s, r), P.m(s));
        }
        repeat(arrows, pt(r, N2), sum);
        phase("upper barrier", std::move(arrows));
      } else if (t > n_) {
        // Column r reaches the coroot point r r̄ through r̄ r̄ and [r r].
        const int via = r > 1 ? P.m(r) : 0;
        std::vector<int> arrows;
        repeat(arrows, pt(t, N2), 2 * ta + m1 + P.m(t) + via);
        move(upper, top, pt(1, t), m1 + P.m(t) + via);
        move(lower, top, pt(t, t), ta);
        for (int s = 2; s < t; ++s) {
          if (s == r) continue;
          repeat(arrows, pt(s, N2), P.m(s));
          move(upper, top, pt(1, s), P.m(s));
        }
        for (int w : direct) {
          repeat(arrows, pt(w, N2), P.d(1, w));
          move(upper, top, pt(1, w), P.d(1, w));
        }
        phase("upper barrier, first column", std::move(arrows));

        arrows.clear();
        int sum = P.m(t) + via;
        move(upper, pt(1, t), pt(t, t), P.m(t) + via);
        for (int s = 2; s < t; ++s) {
          if (s == r) continue;
          sum += P.m(s);
          move(upper, pt(1, s), pt(s, t), P.m(s));
        }
        repeat(arrows, pt(t, N2), sum);
        repeat(arrows, pt(r, r), via);
        move(upper, pt(t, t), pt(r, t), via);
        phase("upper barrier", std::move(arrows));
      }
      waterfall(without_column(B, 1, direct), upper, t, P.bottom, ta, &lower,
                "upper cascade");
      q = P.bottom;
    }

    if (a > 0) {
      Profile P = profile(A);
      const int t = P.top;
      const int qbar = N2 + 1 - q;
      // Column q is filled straight from X_qq.
      std::set<int> rows;
      std::vector<int> arrows;
      for (int s = q + 1; s < t; ++s) {
        if (s == N2 + 1 - t) continue;
        repeat(arrows, pt(s, qbar), P.m(s));
        move(lower, pt(q, q), pt(q, s), P.m(s));
      }
      // The coroot column t̄ of row t is reached through X_tt and [t̄ t̄].
      const int tbar = N2 + 1 - t;
      const int via = (t > q && tbar > q && tbar < t) ? P.m(tbar) : 0;
      for (int w = std::max(t, q + 1); w <= P.bottom; ++w) {
        int c = P.d(q, w) + (w == t ? P.m(t) + via : 0);
        repeat(arrows, pt(w, qbar), c);
        move(lower, pt(q, q), pt(q, w), c);
        rows.insert(w);
      }
      rows.insert(q);
      if (!arrows.empty()) phase("lower barrier, first column", std::move(arrows));

      if (t > q) {
        arrows.clear();
        int sum = via;
        move(lower, pt(q, t), pt(t, t), via);
        for (int s = q + 1; s <= t; ++s) {
          if (s == tbar) continue;
          sum += P.m(s);
          move(lower, pt(q, s), pt(s, t), P.m(s));
        }
        repeat(arrows, pt(t, qbar), sum);
        repeat(arrows, pt(tbar, tbar), via);
        move(lower, pt(t, t), pt(tbar, t), via);
        phase("lower barrier", std::move(arrows));
      }
      waterfall(without_column(A, q, rows), lower, t, P.bottom, 0, nullptr, "lower cascade");
    }
  }

  std::map<int, int> upper, lower;
  std::vector<ConstructionPhase> phases;

private:
  const SymplecticAlgebra& g_;
  int n_;
  int j_;
};

}  // namespace

std::vector<ConstructionPhase> plan_construction(const SymplecticAlgebra& g,
                                                 const LeadingTerm& target, int j) {
  if (j < 1) throw std::invalid_argument("j must be at least 1");
  Planner planner(g, j);
  planner.plan(target);
  return planner.phases;
}

namespace {

// floor[k][x]: the smallest point a single factor at x can reach using any
// subsequence of arrows k, k+1, ... in order.
std::vector<std::vector<int>> reach_floor(const SymplecticAlgebra& g,
                                          const std::vector<int>& arrows) {
  std::vector<std::vector<int>> floor(arrows.size() + 1, std::vector<int>(g.dim()));
  for (int x = 0; x < g.dim(); ++x) floor.back()[x] = x;
  for (size_t k = arrows.size(); k-- > 0;)
    for (int x = 0; x < g.dim(); ++x) {
      int best = floor[k + 1][x];
      for (const auto& [y, c] : g.bracket_terms(arrows[k], x))
        best = std::min(best, floor[k + 1][y]);
      floor[k][x] = best;
    }
  return floor;
}

// Drops terms all of whose descendants are ≻ target. The coefficients of
// every monomial ≼ target in the final polynomial are unchanged.
SymPolynomial prune(const SymPolynomial& p, const std::vector<int>& floor,
                    const ColoredPartition& target) {
  SymPolynomial out;
  for (const auto& [mono, c] : p.terms()) {
    std::vector<Part> parts = mono.parts();
    for (Part& x : parts) x.point = static_cast<std::int16_t>(floor[x.point]);
    if (compare(ColoredPartition(std::move(parts)), target) <= 0) out.add_term(mono, c);
  }
  return out;
}

}  // namespace

ConstructionReport run_construction(const SymplecticAlgebra& g, const LeadingTerm& target,
                                    int j, bool pruned) {
  ConstructionReport report;
  SymPolynomial p = initial_monomial(g, target.b(), target.a(), j);
  report.expected = at_degree(target.monomial(), j);
  auto phases = plan_construction(g, target, j);
  for (const auto& ph : phases)
    report.arrows.insert(report.arrows.end(), ph.arrows.begin(), ph.arrows.end());
  std::vector<std::vector<int>> floor;
  if (pruned) floor = reach_floor(g, report.arrows);
  size_t k = 0;
  for (const auto& ph : phases) {
    for (int arrow : ph.arrows) {
      p = apply_arrow(g, arrow, p);
      ++k;
      if (pruned) p = prune(p, floor[k], report.expected);
    }
    if (p.is_zero()) {
      report.failed_phase = ph.name;
      return report;
    }
    if (report.drifted_phase.empty() && leading_term(p) != ph.expected)
      report.drifted_phase = ph.name;
  }
  report.final_terms = p.size();
  report.obtained = leading_term(p);
  report.ok = report.obtained == report.expected;
  if (!report.ok) report.failed_phase = report.drifted_phase.empty() ? "final" : report.drifted_phase;
  return report;
}

ConstructionFailure::ConstructionFailure(const std::string& phase, const std::string& detail)
    : std::runtime_error("construction failed in phase '" + phase + "': " + detail),
      phase_(phase) {}

std::vector<int> construct_arrow_sequence(const SymplecticAlgebra& g,
                                          const LeadingTerm& target, int j) {
  ConstructionReport r = run_construction(g, target, j);
  if (!r.ok)
    throw ConstructionFailure(r.failed_phase, "expected " + r.expected.to_string(g) +
                                                  ", obtained " + r.obtained.to_string(g));
  return r.arrows;
}

bool TheoremReport::ok() const {
  for (const auto& s : shapes)
    if (!s.inclusion || !s.construction_failures.empty()) return false;
  return true;
}

namespace {

ShapeReport verify_shape(const SymplecticAlgebra& g, int k, int b, int a, int j,
                         bool construct, size_t dim_cap) {
  ShapeReport s;
  s.b = b;
  s.a = a;
  auto basis = orbit_span(g, k, b, a, j, dim_cap);
  auto lts = leading_term_set(basis);
  auto params = enumerate_leading_terms(g, k, b, a);
  s.orbit_dim = basis.size();
  s.lt_count = lts.size();
  s.parametrized_count = params.size();
  s.inclusion = std::all_of(params.begin(), params.end(), [&](const LtMonomial& m) {
    return lts.count(at_degree(m, j)) > 0;
  });
  s.equality = s.inclusion && lts.size() == params.size();
  if (construct) {
    s.constructed = true;
    for (const auto& m : params)
      for (const auto& rep : admissible_representations(g, m)) {
        auto r = run_construction(g, rep, j);
        if (!r.ok)
          s.construction_failures.push_back(at_degree(m, j).to_string(g) + " (pivot " +
                                            rep.pivot.label() + ", phase '" +
                                            r.failed_phase + "')");
      }
  }
  return s;
}

}  // namespace

TheoremReport verify_theorem(const SymplecticAlgebra& g, int k, int j, bool construct,
                             size_t dim_cap, int jobs) {
  if (k < 1) throw std::invalid_argument("level k must be at least 1");
  if (j < 1) throw std::invalid_argument("j must be at least 1");
  TheoremReport report;
  report.n = g.n();
  report.k = k;
  report.j = j;
  std::vector<std::future<ShapeReport>> pending;
  jobs = std::max(jobs, 1);
  for (int b = 0; b <= k + 1; ++b) {
    auto launch = jobs > 1 ? std::launch::async : std::launch::deferred;
    pending.push_back(std::async(launch, verify_shape, std::cref(g), k, b, k + 1 - b, j,
                                 construct, dim_cap));
    if (static_cast<int>(pending.size()) >= jobs) {
      for (auto& f : pending) report.shapes.push_back(f.get());
      pending.clear();
    }
  }
  for (auto& f : pending) report.shapes.push_back(f.get());
  return report;
}

}  // namespace cnlt
