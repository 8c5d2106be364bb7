#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cnlt {

using BigInt = mpz_class;
using Rational = mpq_class;

/// One of the 2n indices 1,...,n, n̄,...,1̄ of the symplectic basis.
///
/// Indices are stored by position: p(i) = i and p(ī) = 2n+1-i. The order
/// 1 ≻ 2 ≻ ... ≻ n ≻ n̄ ≻ ... ≻ 1̄ is increasing position, so a smaller
/// position means a larger index.
class Index {
public:
  Index() = default;
  Index(int n, int position);

  static Index unbarred(int n, int i);
  static Index barred(int n, int i);
  /// Parses "3" or "u3".
  static Index parse(int n, const std::string& label);

  int n() const { return n_; }
  int position() const { return pos_; }
  bool is_barred() const { return pos_ > n_; }
  /// The i of i or ī.
  int value() const { return is_barred() ? 2 * n_ + 1 - pos_ : pos_; }
  /// The index with the bar toggled.
  Index conjugate() const { return Index(n_, 2 * n_ + 1 - pos_); }
  /// +1 for ε_i, -1 for -ε_i.
  int sign() const { return is_barred() ? -1 : 1; }

  std::string label() const;

  bool operator==(const Index&) const = default;
  /// Compares in the index order (≻ is greater).
  std::strong_ordering operator<=>(const Index& other) const {
    return other.pos_ <=> pos_;
  }

private:
  int n_ = 0;
  int pos_ = 0;
};

enum class RootKind { Plus, Minus, Mixed, Coroot };

const char* to_string(RootKind kind);

/// A point ab of the triangular basis B: column a, row b, p(a) <= p(b).
struct BasisPoint {
  Index col;
  Index row;
  RootKind kind = RootKind::Coroot;
  /// Height of the root in simple roots; 0 for coroots.
  int height = 0;
  /// Rank in the basis order: 0 is the minimal point 1̄1̄, N-1 is 11.
  int rank = 0;
  /// Root as a vector in the ε-basis (zero for coroots).
  std::vector<int> root;

  std::string label() const { return col.label() + "." + row.label(); }
};

/// Rank of the basis point in column a, row b (positions, 1-based).
int rank_of(int n, int col_pos, int row_pos);

/// All n(2n+1) basis points, largest first (11, 12, 22, ..., 1̄1̄).
std::vector<BasisPoint> build_basis(int n);

/// Exact integer combination of basis points, keyed by rank.
class LieElement {
public:
  LieElement() = default;
  explicit LieElement(int n) : n_(n) {}
  static LieElement basis(int n, int rank);

  int n() const { return n_; }
  const std::map<int, BigInt>& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  BigInt coefficient(int rank) const;

  void add_term(int rank, const BigInt& c);
  LieElement& operator+=(const LieElement& other);
  LieElement& operator-=(const LieElement& other);
  LieElement operator+(const LieElement& other) const;
  LieElement operator-(const LieElement& other) const;
  LieElement operator*(const BigInt& s) const;
  LieElement operator-() const;
  bool operator==(const LieElement& other) const;

private:
  void check_compatible(const LieElement& other) const;

  int n_ = 0;
  std::map<int, BigInt> coords_;
};

/// Square integer matrix indexed by positions 0..2n-1.
using Matrix = std::vector<std::vector<long long>>;

/// The rank-n symplectic Lie algebra with the triangular basis B.
///
/// Root vectors are fixed 2n×2n integer matrices preserving the form
/// ω(e_i, e_ī) = 1, normalized so that [X_α, X_{-α}] = α^∨. The point i ī
/// holds the simple coroot α_i^∨. Structure constants are tabulated once at
/// construction and the object is immutable afterwards.
class SymplecticAlgebra {
public:
  explicit SymplecticAlgebra(int n);

  int n() const { return n_; }
  int dim() const { return static_cast<int>(points_.size()); }

  /// Points indexed by rank (ascending order).
  const BasisPoint& point(int rank) const { return by_rank_[rank]; }
  /// Points largest first, as build_basis returns them.
  const std::vector<BasisPoint>& points() const { return points_; }
  int rank(const Index& col, const Index& row) const;
  /// Parses "a.b" (e.g. "1.u3").
  int parse_point(const std::string& label) const;
  /// Rank of the point whose root is the given ε-vector; -1 if none.
  int root_point(const std::vector<int>& root) const;

  /// c_{αβγ}: coefficient of X_γ in [X_α, X_β].
  int structure_constant(int alpha, int beta, int gamma) const {
    return table_[(alpha * dim() + beta) * dim() + gamma];
  }
  /// Nonzero terms (γ, c_{αβγ}) of [X_α, X_β].
  const std::vector<std::pair<int, int>>& bracket_terms(int alpha,
                                                        int beta) const {
    return sparse_[alpha * dim() + beta];
  }

  LieElement bracket(const LieElement& x, const LieElement& y) const;
  /// [X_arrow, X_target]; zero when the arrow does not move the target.
  LieElement arrow_apply(int arrow, int target) const;

  Matrix to_matrix(const LieElement& x) const;
  /// Inverse of to_matrix on the image of sp_2n.
  LieElement from_matrix(const Matrix& m) const;
  /// Bracket computed through matrix commutators.
  LieElement matrix_bracket(const LieElement& x, const LieElement& y) const;
  /// True iff mᵀJ + Jm = 0 for the fixed symplectic form J.
  bool preserves_form(const Matrix& m) const;

  /// Coroot α^∨ of the root at a non-coroot point, in coroot coordinates.
  LieElement coroot_of(int rank) const;

  /// Points of △_r (rows 1..r) and ^r△ (columns r..1̄), ascending by rank.
  std::pair<std::vector<int>, std::vector<int>> triangles(const Index& r) const;

  Index index(int position) const { return Index(n_, position); }

private:
  Matrix root_matrix(int rank) const;

  int n_;
  std::vector<BasisPoint> points_;
  std::vector<BasisPoint> by_rank_;
  std::vector<Matrix> matrices_;
  std::vector<int> table_;
  std::vector<std::vector<std::pair<int, int>>> sparse_;
};

/// Principal-specialization degree of X_p(-j): 2n(j-1) + p(a) + p(b) - 1.
int principal_degree(const BasisPoint& p, int n, int j);

/// Dimension of the irreducible C_n-module of highest weight kθ.
BigInt weyl_dim(int n, int k);

/// Binomial coefficient as an exact integer.
BigInt binomial(long n, long k);

}  // namespace cnlt
