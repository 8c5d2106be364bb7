#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cnlt/cascades.hpp"
#include "cnlt/partitions.hpp"
#include "cnlt/root_system.hpp"

namespace cnlt {

/// Finitely supported polynomial in the symmetric algebra of the negative
/// loop algebra, terms kept in ≺ order.
class SymPolynomial {
public:
  using Terms = std::map<ColoredPartition, Rational, Precedes>;

  SymPolynomial() = default;
  static SymPolynomial monomial(const ColoredPartition& p, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  Rational coefficient(const ColoredPartition& p) const;

  void add_term(const ColoredPartition& p, const Rational& c);
  SymPolynomial& operator+=(const SymPolynomial& other);
  SymPolynomial& operator-=(const SymPolynomial& other);
  SymPolynomial operator*(const Rational& s) const;
  bool operator==(const SymPolynomial& other) const { return terms_ == other.terms_; }

  std::string to_string(const SymplecticAlgebra& g) const;

private:
  Terms terms_;
};

/// ad X_arrow as a derivation: every part X_β(-j) is replaced in turn by
/// [X_arrow, X_β](-j).
SymPolynomial apply_arrow(const SymplecticAlgebra& g, int arrow, const SymPolynomial& p);

/// Applies arrows left to right (the first entry acts first).
SymPolynomial apply_arrows(const SymplecticAlgebra& g, const std::vector<int>& arrows,
                           SymPolynomial p);

/// The ≺-minimal monomial with nonzero coefficient.
const ColoredPartition& leading_term(const SymPolynomial& p);

/// Row-echelon form with ≺-minimal pivots.
class Echelon {
public:
  /// Reduces v against the stored rows; stores and returns true if the
  /// remainder is nonzero.
  bool insert(SymPolynomial v);
  size_t rank() const { return rows_.size(); }
  std::vector<SymPolynomial> rows() const;
  std::set<ColoredPartition, Precedes> pivots() const;

private:
  // Pivot monomial -> row normalized to pivot coefficient 1.
  std::map<ColoredPartition, SymPolynomial, Precedes> rows_;
};

class DimensionCapExceeded : public std::runtime_error {
public:
  explicit DimensionCapExceeded(size_t cap);
};

/// Z₀ = X_11(-j-1)^b X_11(-j)^a.
SymPolynomial initial_monomial(const SymplecticAlgebra& g, int b, int a, int j);

/// Basis of the smallest arrow-closed subspace containing Z₀, in echelon
/// form.
std::vector<SymPolynomial> orbit_span(const SymplecticAlgebra& g, int k, int b, int a,
                                      int j, size_t dim_cap = 2000);

std::set<ColoredPartition, Precedes> leading_term_set(const std::vector<SymPolynomial>& basis);

/// One phase of the constructive proof: arrows in acting order and the
/// leading term expected once they have all been applied.
struct ConstructionPhase {
  std::string name;
  std::vector<int> arrows;
  ColoredPartition expected;
};

/// Arrow phases taking Z₀ to a relation with the target's leading term.
std::vector<ConstructionPhase> plan_construction(const SymplecticAlgebra& g,
                                                 const LeadingTerm& target, int j);

struct ConstructionReport {
  bool ok = false;
  std::string failed_phase;  // empty when ok
  std::string drifted_phase;  // first phase whose running leading term was off
  ColoredPartition expected;
  ColoredPartition obtained;
  std::vector<int> arrows;  // all arrows, acting order
  size_t final_terms = 0;
};

/// Applies the planned arrows to Z₀. With `pruned`, terms that cannot reach
/// a monomial ≼ target under the remaining arrows are dropped as they
/// appear; the verdict is unaffected but intermediate leading terms (and so
/// drifted_phase) may differ.
ConstructionReport run_construction(const SymplecticAlgebra& g, const LeadingTerm& target,
                                    int j, bool pruned = true);

class ConstructionFailure : public std::runtime_error {
public:
  ConstructionFailure(const std::string& phase, const std::string& detail);
  const std::string& phase() const { return phase_; }

private:
  std::string phase_;
};

/// The arrow sequence for the target; throws ConstructionFailure naming the
/// phase whose leading term check fails.
std::vector<int> construct_arrow_sequence(const SymplecticAlgebra& g,
                                          const LeadingTerm& target, int j = 1);

struct ShapeReport {
  int b = 0;
  int a = 0;
  size_t orbit_dim = 0;
  size_t lt_count = 0;
  size_t parametrized_count = 0;
  bool inclusion = false;
  bool equality = false;
  bool constructed = false;  // construction was attempted
  std::vector<std::string> construction_failures;
};

struct TheoremReport {
  int n = 0;
  int k = 0;
  int j = 1;
  std::vector<ShapeReport> shapes;
  bool ok() const;
};

TheoremReport verify_theorem(const SymplecticAlgebra& g, int k, int j = 1,
                             bool construct = false, size_t dim_cap = 2000,
                             int jobs = 1);

}  // namespace cnlt
