#include "cnlt/root_system.hpp"

#include <stdexcept>

namespace cnlt {

Index::Index(int n, int position) : n_(n), pos_(position) {
  if (n < 1) throw std::invalid_argument("rank n must be at least 1");
  if (position < 1 || position > 2 * n)
    throw std::invalid_argument("index position " + std::to_string(position) +
                                " outside 1.." + std::to_string(2 * n));
}

Index Index::unbarred(int n, int i) { return Index(n, i); }

Index Index::barred(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("barred index out of range");
  return Index(n, 2 * n + 1 - i);
}

Index Index::parse(int n, const std::string& label) {
  if (label.empty()) throw std::invalid_argument("empty index label");
  bool bar = label[0] == 'u';
  std::string digits = bar ? label.substr(1) : label;
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("malformed index label '" + label + "'");
  int i = std::stoi(digits);
  if (i < 1 || i > n) throw std::invalid_argument("index label '" + label + "' out of range");
  return bar ? barred(n, i) : unbarred(n, i);
}

std::string Index::label() const {
  return (is_barred() ? "u" : "") + std::to_string(value());
}

const char* to_string(RootKind kind) {
  switch (kind) {
    case RootKind::Plus: return "plus";
    case RootKind::Minus: return "minus";
    case RootKind::Mixed: return "mixed";
    case RootKind::Coroot: return "coroot";
  }
  return "?";
}

int rank_of(int n, int col_pos, int row_pos) {
  int size = n * (2 * n + 1);
  int reading = (row_pos - 1) * row_pos / 2 + (col_pos - 1);
  return size - 1 - reading;
}

namespace {

std::vector<int> weight(const Index& a) {
  std::vector<int> w(a.n(), 0);
  w[a.value() - 1] = a.sign();
  return w;
}

// Coefficients of a root in the simple roots ε_1-ε_2, ..., ε_{n-1}-ε_n, 2ε_n.
std::vector<int> simple_root_coefficients(const std::vector<int>& v) {
  int n = static_cast<int>(v.size());
  std::vector<int> c(n, 0);
  int running = 0;
  for (int i = 0; i < n - 1; ++i) {
    running += v[i];
    c[i] = running;
  }
  running += v[n - 1];
  c[n - 1] = running / 2;
  return c;
}

}  // namespace

std::vector<BasisPoint> build_basis(int n) {
  if (n < 1) throw std::invalid_argument("rank n must be at least 1");
  std::vector<BasisPoint> pts;
  pts.reserve(n * (2 * n + 1));
  for (int b = 1; b <= 2 * n; ++b) {
    for (int a = 1; a <= b; ++a) {
      BasisPoint p;
      p.col = Index(n, a);
      p.row = Index(n, b);
      p.rank = rank_of(n, a, b);
      std::vector<int> root = weight(p.col);
      auto wb = weight(p.row);
      for (int i = 0; i < n; ++i) root[i] += wb[i];
      bool col_bar = p.col.is_barred(), row_bar = p.row.is_barred();
      if (!col_bar && !row_bar)
        p.kind = RootKind::Plus;
      else if (col_bar && row_bar)
        p.kind = RootKind::Minus;
      else if (p.col.value() == p.row.value())
        p.kind = RootKind::Coroot;
      else
        p.kind = RootKind::Mixed;
      p.height = 0;
      if (p.kind != RootKind::Coroot)
        for (int c : simple_root_coefficients(root)) p.height += c;
      p.root = std::move(root);
      pts.push_back(std::move(p));
    }
  }
  return pts;
}

// ---------------------------------------------------------------------------
// LieElement

LieElement LieElement::basis(int n, int rank) {
  LieElement e(n);
  e.coords_[rank] = 1;
  return e;
}

BigInt LieElement::coefficient(int rank) const {
  auto it = coords_.find(rank);
  return it == coords_.end() ? BigInt(0) : it->second;
}

void LieElement::add_term(int rank, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = coords_.try_emplace(rank, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coords_.erase(it);
  }
}

void LieElement::check_compatible(const LieElement& other) const {
  if (n_ != other.n_ && !is_zero() && !other.is_zero())
    throw std::invalid_argument("Lie elements over different ranks");
}

LieElement& LieElement::operator+=(const LieElement& other) {
  check_compatible(other);
  if (n_ == 0) n_ = other.n_;
  for (const auto& [r, c] : other.coords_) add_term(r, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& other) {
  check_compatible(other);
  if (n_ == 0) n_ = other.n_;
  for (const auto& [r, c] : other.coords_) add_term(r, -c);
  return *this;
}

LieElement LieElement::operator+(const LieElement& other) const {
  LieElement r = *this;
  r += other;
  return r;
}

LieElement LieElement::operator-(const LieElement& other) const {
  LieElement r = *this;
  r -= other;
  return r;
}

LieElement LieElement::operator*(const BigInt& s) const {
  LieElement r(n_);
  if (s == 0) return r;
  for (const auto& [k, c] : coords_) r.coords_[k] = c * s;
  return r;
}

LieElement LieElement::operator-() const { return *this * BigInt(-1); }

bool LieElement::operator==(const LieElement& other) const {
  return coords_ == other.coords_ && (n_ == other.n_ || coords_.empty());
}

// ---------------------------------------------------------------------------
// SymplecticAlgebra

SymplecticAlgebra::SymplecticAlgebra(int n) : n_(n), points_(build_basis(n)) {
  int N = dim();
  by_rank_.resize(N);
  for (const auto& p : points_) by_rank_[p.rank] = p;

  matrices_.reserve(N);
  for (int r = 0; r < N; ++r) matrices_.push_back(root_matrix(r));

  table_.assign(static_cast<size_t>(N) * N * N, 0);
  sparse_.assign(static_cast<size_t>(N) * N, {});
  int size = 2 * n_;
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      const Matrix& x = matrices_[a];
      const Matrix& y = matrices_[b];
      Matrix c(size, std::vector<long long>(size, 0));
      for (int i = 0; i < size; ++i)
        for (int l = 0; l < size; ++l) {
          if (x[i][l] != 0)
            for (int m = 0; m < size; ++m) c[i][m] += x[i][l] * y[l][m];
          if (y[i][l] != 0)
            for (int m = 0; m < size; ++m) c[i][m] -= y[i][l] * x[l][m];
        }
      LieElement e = from_matrix(c);
      for (const auto& [g, coef] : e.coords()) {
        int v = static_cast<int>(coef.get_si());
        table_[(static_cast<size_t>(a) * N + b) * N + g] = v;
        sparse_[static_cast<size_t>(a) * N + b].emplace_back(g, v);
      }
    }
  }
}

int SymplecticAlgebra::rank(const Index& col, const Index& row) const {
  if (col.n() != n_ || row.n() != n_)
    throw std::invalid_argument("index from a different rank");
  if (col.position() > row.position())
    throw std::invalid_argument("point " + col.label() + "." + row.label() +
                                " is not in the triangle");
  return rank_of(n_, col.position(), row.position());
}

int SymplecticAlgebra::parse_point(const std::string& label) const {
  auto dot = label.find('.');
  if (dot == std::string::npos)
    throw std::invalid_argument("point label '" + label + "' must look like a.b");
  return rank(Index::parse(n_, label.substr(0, dot)),
              Index::parse(n_, label.substr(dot + 1)));
}

int SymplecticAlgebra::root_point(const std::vector<int>& root) const {
  bool zero = true;
  for (int v : root) zero = zero && v == 0;
  if (zero) return -1;
  for (const auto& p : points_)
    if (p.kind != RootKind::Coroot && p.root == root) return p.rank;
  return -1;
}

Matrix SymplecticAlgebra::root_matrix(int rank) const {
  int size = 2 * n_;
  Matrix m(size, std::vector<long long>(size, 0));
  const BasisPoint& p = by_rank_[rank];
  // Matrix positions are 0-based index positions.
  auto pos = [&](int i, bool bar) { return (bar ? 2 * n_ + 1 - i : i) - 1; };
  int i = p.col.value(), j = p.row.value();
  switch (p.kind) {
    case RootKind::Plus:  // ε_i + ε_j, i <= j
      if (i == j) {
        m[pos(i, false)][pos(i, true)] = 1;
      } else {
        m[pos(i, false)][pos(j, true)] = 1;
        m[pos(j, false)][pos(i, true)] = 1;
      }
      break;
    case RootKind::Minus:  // -ε_i - ε_j, i >= j
      if (i == j) {
        m[pos(i, true)][pos(i, false)] = 1;
      } else {
        m[pos(j, true)][pos(i, false)] = 1;
        m[pos(i, true)][pos(j, false)] = 1;
      }
      break;
    case RootKind::Mixed:  // ε_i - ε_j
      m[pos(i, false)][pos(j, false)] = 1;
      m[pos(j, true)][pos(i, true)] = -1;
      break;
    case RootKind::Coroot: {  // α_i^∨ = H_i - H_{i+1}, α_n^∨ = H_n
      m[pos(i, false)][pos(i, false)] = 1;
      m[pos(i, true)][pos(i, true)] = -1;
      if (i < n_) {
        m[pos(i + 1, false)][pos(i + 1, false)] = -1;
        m[pos(i + 1, true)][pos(i + 1, true)] = 1;
      }
      break;
    }
  }
  return m;
}

Matrix SymplecticAlgebra::to_matrix(const LieElement& x) const {
  int size = 2 * n_;
  Matrix m(size, std::vector<long long>(size, 0));
  for (const auto& [r, c] : x.coords()) {
    long long s = c.get_si();
    const Matrix& e = matrices_[r];
    for (int i = 0; i < size; ++i)
      for (int l = 0; l < size; ++l) m[i][l] += s * e[i][l];
  }
  return m;
}

LieElement SymplecticAlgebra::from_matrix(const Matrix& m) const {
  auto pos = [&](int i, bool bar) { return (bar ? 2 * n_ + 1 - i : i) - 1; };
  LieElement out(n_);
  long long running = 0;
  for (const auto& p : points_) {
    int i = p.col.value(), j = p.row.value();
    long long c = 0;
    switch (p.kind) {
      case RootKind::Plus: c = m[pos(i, false)][pos(j, true)]; break;
      case RootKind::Minus: c = m[pos(j, true)][pos(i, false)]; break;
      case RootKind::Mixed: c = m[pos(i, false)][pos(j, false)]; break;
      case RootKind::Coroot: continue;
    }
    out.add_term(p.rank, BigInt(static_cast<long>(c)));
  }
  for (int i = 1; i <= n_; ++i) {
    running += m[pos(i, false)][pos(i, false)];
    out.add_term(rank(Index::unbarred(n_, i), Index::barred(n_, i)),
                 BigInt(static_cast<long>(running)));
  }
  if (to_matrix(out) != m)
    throw std::invalid_argument("matrix is not in the symplectic algebra");
  return out;
}

bool SymplecticAlgebra::preserves_form(const Matrix& m) const {
  int size = 2 * n_;
  // J e_q = sign * e_{2n+1-q}: ω(e_i, e_ī) = 1.
  auto J = [&](int r, int c) -> long long {
    if (r + c != size - 1) return 0;
    return r < n_ ? 1 : -1;
  };
  for (int r = 0; r < size; ++r)
    for (int c = 0; c < size; ++c) {
      long long s = 0;
      for (int l = 0; l < size; ++l) s += m[l][r] * J(l, c) + J(r, l) * m[l][c];
      if (s != 0) return false;
    }
  return true;
}

LieElement SymplecticAlgebra::bracket(const LieElement& x, const LieElement& y) const {
  if ((x.n() != n_ && !x.is_zero()) || (y.n() != n_ && !y.is_zero()))
    throw std::invalid_argument("bracket of elements over a different rank");
  LieElement out(n_);
  for (const auto& [a, ca] : x.coords())
    for (const auto& [b, cb] : y.coords()) {
      BigInt s = ca * cb;
      for (const auto& [g, c] : bracket_terms(a, b)) out.add_term(g, s * c);
    }
  return out;
}

LieElement SymplecticAlgebra::matrix_bracket(const LieElement& x,
                                             const LieElement& y) const {
  Matrix a = to_matrix(x), b = to_matrix(y);
  int size = 2 * n_;
  Matrix c(size, std::vector<long long>(size, 0));
  for (int i = 0; i < size; ++i)
    for (int l = 0; l < size; ++l)
      for (int m = 0; m < size; ++m) c[i][m] += a[i][l] * b[l][m] - b[i][l] * a[l][m];
  return from_matrix(c);
}

LieElement SymplecticAlgebra::arrow_apply(int arrow, int target) const {
  LieElement out(n_);
  for (const auto& [g, c] : bracket_terms(arrow, target)) out.add_term(g, c);
  return out;
}

LieElement SymplecticAlgebra::coroot_of(int r) const {
  const BasisPoint& p = by_rank_[r];
  if (p.kind == RootKind::Coroot)
    throw std::invalid_argument("coroot points carry no root");
  int norm = 0;
  for (int v : p.root) norm += v * v;
  LieElement out(n_);
  long long running = 0;
  for (int i = 1; i <= n_; ++i) {
    running += 2 * p.root[i - 1] / norm;
    out.add_term(rank(Index::unbarred(n_, i), Index::barred(n_, i)),
                 BigInt(static_cast<long>(running)));
  }
  return out;
}

std::pair<std::vector<int>, std::vector<int>> SymplecticAlgebra::triangles(
    const Index& r) const {
  std::vector<int> upper, lower;
  for (int rk = 0; rk < dim(); ++rk) {
    const BasisPoint& p = by_rank_[rk];
    if (p.row.position() <= r.position()) upper.push_back(rk);
    if (p.col.position() >= r.position()) lower.push_back(rk);
  }
  return {upper, lower};
}

// ---------------------------------------------------------------------------

int principal_degree(const BasisPoint& p, int n, int j) {
  if (j < 1) throw std::invalid_argument("part degree index j must be >= 1");
  return 2 * n * (j - 1) + p.col.position() + p.row.position() - 1;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

BigInt weyl_dim(int n, int k) {
  if (n < 1) throw std::invalid_argument("rank n must be at least 1");
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  std::vector<long> lambda(n, 0), rho(n);
  lambda[0] = 2L * k;
  for (int i = 0; i < n; ++i) rho[i] = n - i;
  Rational prod = 1;
  auto factor = [&](const std::vector<long>& alpha) {
    long num = 0, den = 0;
    for (int i = 0; i < n; ++i) {
      num += (lambda[i] + rho[i]) * alpha[i];
      den += rho[i] * alpha[i];
    }
    prod *= Rational(num, den);
  };
  for (int i = 0; i < n; ++i) {
    std::vector<long> a(n, 0);
    a[i] = 2;
    factor(a);
    for (int j = i + 1; j < n; ++j) {
      std::vector<long> b(n, 0);
      b[i] = 1;
      b[j] = -1;
      factor(b);
      b[j] = 1;
      factor(b);
    }
  }
  prod.canonicalize();
  if (prod.get_den() != 1) throw std::logic_error("Weyl dimension not integral");
  return prod.get_num();
}

}  // namespace cnlt
