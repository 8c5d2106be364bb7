#include <doctest.h>

#include "support.hpp"

using namespace cnlt;
using testing::bar;
using testing::pt;

namespace {

Matrix multiply(const Matrix& a, const Matrix& b) {
  size_t s = a.size();
  Matrix c(s, std::vector<long long>(s, 0));
  for (size_t i = 0; i < s; ++i)
    for (size_t k = 0; k < s; ++k)
      if (a[i][k])
        for (size_t j = 0; j < s; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  Matrix ab = multiply(a, b), ba = multiply(b, a);
  for (size_t i = 0; i < ab.size(); ++i)
    for (size_t j = 0; j < ab.size(); ++j) ab[i][j] -= ba[i][j];
  return ab;
}

// ω(e_i, e_ī) = 1 on 0-based positions.
Matrix form(int n) {
  Matrix J(2 * n, std::vector<long long>(2 * n, 0));
  for (int i = 1; i <= n; ++i) {
    J[i - 1][2 * n - i] = 1;
    J[2 * n - i][i - 1] = -1;
  }
  return J;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.size(), std::vector<long long>(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j) t[j][i] = m[i][j];
  return t;
}

LieElement basis(const SymplecticAlgebra& g, int r) { return LieElement::basis(g.n(), r); }

bool moves(const SymplecticAlgebra& g, int arrow, int from, int to) {
  const auto& t = g.bracket_terms(arrow, from);
  return t.size() == 1 && t[0].first == to;
}

bool moved(const SymplecticAlgebra& g, int arrow, int p) {
  return !g.bracket_terms(arrow, p).empty();
}

// Points of △_r: rows 1..r.
std::vector<int> upper_triangle(const SymplecticAlgebra& g, int r_pos) {
  return g.triangles(g.index(r_pos)).first;
}

LieElement coroot_sum(const SymplecticAlgebra& g, int from, int coeff_before, int coeff_after) {
  LieElement h(g.n());
  for (int i = 1; i <= g.n(); ++i)
    h.add_term(pt(g, i, bar(g, i)), i < from ? coeff_before : coeff_after);
  return h;
}

}  // namespace

TEST_CASE("basis has n(2n+1) points in a triangle") {
  for (int n = 1; n <= 5; ++n) {
    SymplecticAlgebra g(n);
    CHECK(g.dim() == n * (2 * n + 1));
    std::set<std::pair<int, int>> cells;
    for (const auto& p : g.points()) cells.insert({p.col.position(), p.row.position()});
    std::set<std::pair<int, int>> expected;
    for (int r = 1; r <= 2 * n; ++r)
      for (int c = 1; c <= r; ++c) expected.insert({c, r});
    CHECK(cells == expected);
  }
}

TEST_CASE("rank order for n=2") {
  SymplecticAlgebra g(2);
  const char* labels[] = {"u1.u1", "u2.u1", "2.u1", "1.u1", "u2.u2",
                          "2.u2",  "1.u2",  "2.2",  "1.2",  "1.1"};
  for (int r = 0; r < 10; ++r) {
    CHECK(g.point(r).label() == labels[r]);
    CHECK(g.parse_point(labels[r]) == r);
    CHECK(g.point(r).rank == r);
  }
  CHECK(g.points().front().label() == "1.1");
}

TEST_CASE("n=3 triangle rows") {
  SymplecticAlgebra g(3);
  std::map<std::string, std::vector<std::string>> rows;
  for (const auto& p : g.points()) rows[p.row.label()].push_back(p.col.label());
  CHECK(rows["1"].size() == 1);
  CHECK(rows["3"].size() == 3);
  CHECK(rows["u3"].size() == 4);
  CHECK(rows["u1"].size() == 6);
  CHECK(g.parse_point("1.u3") == pt(g, 1, 4));
  CHECK_THROWS(g.parse_point("u3.1"));
}

TEST_CASE("root matrices preserve the symplectic form and are independent") {
  for (int n = 1; n <= 4; ++n) {
    SymplecticAlgebra g(n);
    Matrix J = form(n);
    std::set<Matrix> seen;
    for (int r = 0; r < g.dim(); ++r) {
      Matrix m = g.to_matrix(basis(g, r));
      Matrix lhs = multiply(transpose(m), J), rhs = multiply(J, m);
      for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2 * n; ++j) REQUIRE(lhs[i][j] + rhs[i][j] == 0);
      CHECK(g.preserves_form(m));
      seen.insert(m);
      CHECK(g.from_matrix(m) == basis(g, r));
    }
    CHECK(static_cast<int>(seen.size()) == g.dim());
  }
}

TEST_CASE("root vectors are weight vectors for the diagonal torus") {
  for (int n = 1; n <= 4; ++n) {
    SymplecticAlgebra g(n);
    // H = diag(h_1..h_n, -h_n..-h_1) with distinct h_i.
    Matrix H(2 * n, std::vector<long long>(2 * n, 0));
    std::vector<long long> h(n);
    for (int i = 0; i < n; ++i) {
      h[i] = 3 * i + 2;
      H[i][i] = h[i];
      H[2 * n - 1 - i][2 * n - 1 - i] = -h[i];
    }
    for (int r = 0; r < g.dim(); ++r) {
      const auto& p = g.point(r);
      long long weight = 0;
      for (int i = 0; i < n; ++i) weight += p.root[i] * h[i];
      Matrix x = g.to_matrix(basis(g, r));
      Matrix c = commutator(H, x);
      for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2 * n; ++j) REQUIRE(c[i][j] == weight * x[i][j]);
      // The root is e(col) + e(row).
      std::vector<int> root(n, 0);
      for (const Index& ix : {p.col, p.row}) root[ix.value() - 1] += ix.sign();
      CHECK(root == p.root);
    }
  }
}

TEST_CASE("structure constants agree with matrix commutators") {
  for (int n = 1; n <= 4; ++n) {
    SymplecticAlgebra g(n);
    for (int a = 0; a < g.dim(); ++a)
      for (int b = 0; b < g.dim(); ++b) {
        Matrix c = commutator(g.to_matrix(basis(g, a)), g.to_matrix(basis(g, b)));
        REQUIRE(g.to_matrix(g.bracket(basis(g, a), basis(g, b))) == c);
        REQUIRE(g.matrix_bracket(basis(g, a), basis(g, b)) == g.bracket(basis(g, a), basis(g, b)));
      }
  }
}

TEST_CASE("bracket is antisymmetric and satisfies Jacobi" * doctest::test_suite("properties")) {
  for (int n = 1; n <= 4; ++n) {
    SymplecticAlgebra g(n);
    const int d = g.dim();
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        REQUIRE(g.bracket(basis(g, a), basis(g, b)) == -g.bracket(basis(g, b), basis(g, a)));
    std::vector<std::vector<LieElement>> br(d, std::vector<LieElement>(d));
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) br[a][b] = g.bracket(basis(g, a), basis(g, b));
    long failures = 0;
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c) {
          LieElement s = g.bracket(basis(g, a), br[b][c]) + g.bracket(basis(g, b), br[c][a]) +
                         g.bracket(basis(g, c), br[a][b]);
          if (!s.is_zero()) ++failures;
        }
    CHECK(failures == 0);
  }
}

TEST_CASE("opposite root vectors bracket to the coroot" * doctest::test_suite("properties")) {
  for (int n = 1; n <= 4; ++n) {
    SymplecticAlgebra g(n);
    for (int r = 0; r < g.dim(); ++r) {
      const auto& p = g.point(r);
      if (p.kind == RootKind::Coroot) continue;
      std::vector<int> neg(p.root);
      for (int& x : neg) x = -x;
      int opp = g.root_point(neg);
      REQUIRE(opp >= 0);
      LieElement h = g.coroot_of(r);
      CHECK(g.bracket(basis(g, r), basis(g, opp)) == h);
      // α(α^∨) = 2.
      CHECK(g.bracket(h, basis(g, r)) == basis(g, r) * BigInt(2));
    }
  }
}

TEST_CASE("arrow [r 1̄] on the first row" * doctest::test_suite("properties")) {
  for (int n = 2; n <= 4; ++n) {
    SymplecticAlgebra g(n);
    for (int r = 2; r <= n; ++r) {
      int arrow = pt(g, r, 2 * n);
      std::set<int> first_row;
      for (int s = 1; s <= r; ++s) {
        CHECK(moves(g, arrow, pt(g, 1, s), pt(g, s, r)));
        first_row.insert(pt(g, 1, s));
      }
      for (int p : upper_triangle(g, r))
        if (!first_row.count(p)) CHECK_FALSE(moved(g, arrow, p));
    }
  }
}

TEST_CASE("arrows [s 1̄] for s below r" * doctest::test_suite("properties")) {
  for (int n = 3; n <= 4; ++n) {
    SymplecticAlgebra g(n);
    for (int r = 3; r <= n; ++r) {
      std::set<int> first_row;
      for (int s = 1; s <= r; ++s) first_row.insert(pt(g, 1, s));
      for (int s = 2; s <= r - 1; ++s) {
        int arrow = pt(g, s, 2 * n);
        CHECK(moves(g, arrow, pt(g, 1, 1), pt(g, 1, s)));
        for (int p = 2; p <= r - 1; ++p)
          for (const auto& [to, c] : g.bracket_terms(arrow, pt(g, 1, p)))
            CHECK(g.point(to).row.position() <= r - 1);
        CHECK(moves(g, arrow, pt(g, 1, r), pt(g, s, r)));
        for (int p : upper_triangle(g, r))
          if (!first_row.count(p)) CHECK_FALSE(moved(g, arrow, p));
      }
    }
  }
}

TEST_CASE("coroot combinations from [r̄ 1̄] and [r̄ r̄]" * doctest::test_suite("properties")) {
  for (int n = 2; n <= 4; ++n) {
    SymplecticAlgebra g(n);
    for (int r = 2; r <= n; ++r) {
      LieElement first = g.bracket(basis(g, pt(g, bar(g, r), 2 * n)), basis(g, pt(g, 1, r)));
      CHECK(first == coroot_sum(g, r, -1, -2));
      LieElement second = g.bracket(basis(g, pt(g, bar(g, r), bar(g, r))), basis(g, pt(g, r, r)));
      CHECK(second == coroot_sum(g, r, 0, -1));
    }
  }
}

TEST_CASE("arrow [r̄ 1̄] within the triangle of r̄" * doctest::test_suite("properties")) {
  for (int n = 2; n <= 4; ++n) {
    SymplecticAlgebra g(n);
    for (int r = 2; r <= n; ++r) {
      const int rb = bar(g, r), last = 2 * n;
      int arrow = pt(g, rb, last);
      std::set<int> listed{pt(g, 1, r)};
      for (int s = 1; s <= rb; ++s) {
        if (s == r) continue;
        CHECK(moves(g, arrow, pt(g, 1, s), pt(g, s, rb)));
        listed.insert(pt(g, 1, s));
      }
      for (int i = 2; i <= r; ++i) {
        CHECK(moves(g, arrow, pt(g, i, r), pt(g, i, last)));
        listed.insert(pt(g, i, r));
      }
      for (int i = r; i <= rb; ++i) {
        CHECK(moves(g, arrow, pt(g, r, i), pt(g, i, last)));
        listed.insert(pt(g, r, i));
      }
      for (int p : upper_triangle(g, rb))
        if (!listed.count(p)) CHECK_FALSE(moved(g, arrow, p));
    }
  }
}

TEST_CASE("arrows [s 1̄] for s down to the bar of r+1" * doctest::test_suite("properties")) {
  for (int n = 1; n <= 4; ++n) {
    SymplecticAlgebra g(n);
    const int last = 2 * n;
    for (int r = 1; r <= n; ++r) {
      const int rb = bar(g, r);
      for (int s = 2; s <= rb - 1; ++s) {
        const int sb = bar(g, s);
        int arrow = pt(g, s, last);
        std::set<int> listed{pt(g, 1, sb)};
        CHECK(moves(g, arrow, pt(g, 1, 1), pt(g, 1, s)));
        listed.insert(pt(g, 1, 1));
        for (int p = 2; p <= s; ++p) {
          if (p == sb) continue;
          CHECK(moves(g, arrow, pt(g, 1, p), pt(g, p, s)));
          listed.insert(pt(g, 1, p));
        }
        for (int p = s; p <= rb - 1; ++p) {
          if (p == sb) continue;
          CHECK(moves(g, arrow, pt(g, 1, p), pt(g, s, p)));
          listed.insert(pt(g, 1, p));
        }
        for (int i = 2; i <= sb; ++i) {
          CHECK(moves(g, arrow, pt(g, i, sb), pt(g, i, last)));
          listed.insert(pt(g, i, sb));
        }
        for (int i = sb; i <= rb - 1; ++i) {
          CHECK(moves(g, arrow, pt(g, sb, i), pt(g, i, last)));
          listed.insert(pt(g, sb, i));
        }
        // Rows down to the bar of r+1. Coroot points only ever land on the
        // arrow's own point.
        for (int p : upper_triangle(g, rb - 1)) {
          if (listed.count(p)) continue;
          if (g.point(p).kind == RootKind::Coroot) {
            for (const auto& [to, c] : g.bracket_terms(arrow, p)) CHECK(to == arrow);
          } else {
            CHECK_FALSE(moved(g, arrow, p));
          }
        }
      }
    }
  }
}

TEST_CASE("arrow [r̄ r̄] within the triangle of r̄" * doctest::test_suite("properties")) {
  for (int n = 2; n <= 4; ++n) {
    SymplecticAlgebra g(n);
    for (int r = 2; r <= n; ++r) {
      const int rb = bar(g, r);
      int arrow = pt(g, rb, rb);
      std::set<int> listed{pt(g, r, r)};
      for (int i = 1; i <= r - 1; ++i) {
        CHECK(moves(g, arrow, pt(g, i, r), pt(g, i, rb)));
        listed.insert(pt(g, i, r));
      }
      for (int i = r + 1; i <= rb; ++i) {
        CHECK(moves(g, arrow, pt(g, r, i), pt(g, i, rb)));
        listed.insert(pt(g, r, i));
      }
      for (int p : upper_triangle(g, rb))
        if (!listed.count(p)) CHECK_FALSE(moved(g, arrow, p));
    }
  }
}

TEST_CASE("simple root arrows move points one row down" * doctest::test_suite("properties")) {
  for (int n = 1; n <= 4; ++n) {
    SymplecticAlgebra g(n);
    const int last = 2 * n;
    for (int r = 1; r <= n - 1; ++r) {
      const int rb = bar(g, r), r1b = bar(g, r + 1);
      int arrow = pt(g, r + 1, rb);
      for (int i = 1; i <= r; ++i) CHECK(moves(g, arrow, pt(g, i, r), pt(g, i, r + 1)));
      for (int i = r + 1; i <= last; ++i)
        if (i != r1b) CHECK(moves(g, arrow, pt(g, r, i), pt(g, r + 1, i)));
      for (int i = 1; i <= r1b; ++i) CHECK(moves(g, arrow, pt(g, i, r1b), pt(g, i, rb)));
      for (int i = rb; i <= last; ++i) CHECK(moves(g, arrow, pt(g, r1b, i), pt(g, i, rb)));
    }
    const int nb = bar(g, n);
    int arrow = pt(g, nb, nb);
    for (int i = 1; i <= n; ++i) CHECK(moves(g, arrow, pt(g, i, n), pt(g, i, nb)));
    for (int i = nb; i <= last; ++i) CHECK(moves(g, arrow, pt(g, n, i), pt(g, nb, i)));
  }
}

TEST_CASE("principal degrees") {
  SymplecticAlgebra g(2);
  CHECK(principal_degree(g.point(g.parse_point("1.1")), 2, 1) == 1);
  CHECK(principal_degree(g.point(g.parse_point("u2.u1")), 2, 1) == 6);
  CHECK(principal_degree(g.point(g.parse_point("1.1")), 2, 3) == 9);
}

TEST_CASE("Weyl dimension of kθ is the symmetric power dimension") {
  // V(kθ) = S^{2k}(C^{2n}).
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= 4; ++k) {
      BigInt expect = 1;
      for (int i = 1; i <= 2 * k; ++i) expect = expect * (2 * n - 1 + i) / i;
      CHECK(weyl_dim(n, k) == expect);
    }
  CHECK(binomial(7, 4) == 35);
  CHECK(binomial(9, 6) == 84);
}

TEST_CASE("invalid ranks are rejected") {
  CHECK_THROWS(SymplecticAlgebra(0));
  CHECK_THROWS(Index::parse(2, "u3"));
  CHECK_THROWS(Index::parse(2, "x"));
}
