#include "cnlt/adjoint_engine.hpp"

#include <deque>
#include <sstream>
#include <unordered_map>

namespace cnlt {

SymPolynomial SymPolynomial::monomial(const ColoredPartition& p, const Rational& c) {
  SymPolynomial s;
  s.add_term(p, c);
  return s;
}

Rational SymPolynomial::coefficient(const ColoredPartition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymPolynomial::add_term(const ColoredPartition& p, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(p, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

SymPolynomial& SymPolynomial::operator+=(const SymPolynomial& other) {
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

SymPolynomial& SymPolynomial::operator-=(const SymPolynomial& other) {
  for (const auto& [p, c] : other.terms_) add_term(p, -c);
  return *this;
}

SymPolynomial SymPolynomial::operator*(const Rational& s) const {
  SymPolynomial out;
  if (s == 0) return out;
  for (const auto& [p, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), p, c * s);
  return out;
}

std::string SymPolynomial::to_string(const SymplecticAlgebra& g) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.get_str() << ")*" << p.to_string(g);
  }
  return os.str();
}

SymPolynomial apply_arrow(const SymplecticAlgebra& g, int arrow, const SymPolynomial& p) {
  std::unordered_map<ColoredPartition, Rational, PartitionHash> acc;
  for (const auto& [mono, coef] : p.terms()) {
    const auto& parts = mono.parts();
    for (size_t i = 0; i < parts.size();) {
      size_t e = i;
      while (e < parts.size() && parts[e] == parts[i]) ++e;
      long mult = static_cast<long>(e - i);
      for (const auto& [gamma, c] : g.bracket_terms(arrow, parts[i].point)) {
        Part to{parts[i].j, static_cast<std::int16_t>(gamma)};
        acc[mono.replaced(i, to)] += coef * (mult * c);
      }
      i = e;
    }
  }
  SymPolynomial out;
  for (auto& [mono, coef] : acc) out.add_term(mono, coef);
  return out;
}

SymPolynomial apply_arrows(const SymplecticAlgebra& g, const std::vector<int>& arrows,
                           SymPolynomial p) {
  for (int a : arrows) p = apply_arrow(g, a, p);
  return p;
}

const ColoredPartition& leading_term(const SymPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("the zero polynomial has no leading term");
  return p.terms().begin()->first;
}

// ---------------------------------------------------------------------------

bool Echelon::insert(SymPolynomial v) {
  while (!v.is_zero()) {
    const auto& [lt, c] = *v.terms().begin();
    auto row = rows_.find(lt);
    if (row == rows_.end()) {
      Rational inv = 1 / c;
      ColoredPartition key = lt;
      rows_.emplace(std::move(key), v * inv);
      return true;
    }
    v -= row->second * c;
  }
  return false;
}

std::vector<SymPolynomial> Echelon::rows() const {
  std::vector<SymPolynomial> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(row);
  return out;
}

std::set<ColoredPartition, Precedes> Echelon::pivots() const {
  std::set<ColoredPartition, Precedes> out;
  for (const auto& [p, row] : rows_) out.insert(out.end(), p);
  return out;
}

DimensionCapExceeded::DimensionCapExceeded(size_t cap)
    : std::runtime_error("orbit span dimension exceeds the cap of " + std::to_string(cap)) {}

SymPolynomial initial_monomial(const SymplecticAlgebra& g, int b, int a, int j) {
  if (j < 1) throw std::invalid_argument("j must be at least 1");
  if (a < 0 || b < 0) throw std::invalid_argument("shape (b,a) must be nonnegative");
  int top = g.dim() - 1;
  std::map<std::pair<int, int>, int> mult;
  if (b) mult[{top, j + 1}] = b;
  if (a) mult[{top, j}] = a;
  return SymPolynomial::monomial(ColoredPartition::from_multiplicities(mult));
}

std::vector<SymPolynomial> orbit_span(const SymplecticAlgebra& g, int k, int b, int a,
                                      int j, size_t dim_cap) {
  if (a < 0 || b < 0 || a + b != k + 1)
    throw std::invalid_argument("shape (b,a) must satisfy a+b = k+1");
  if (j < 1) throw std::invalid_argument("j must be at least 1");
  Echelon ech;
  std::deque<SymPolynomial> pending;
  auto push = [&](SymPolynomial v) {
    if (ech.insert(v)) {
      if (ech.rank() > dim_cap) throw DimensionCapExceeded(dim_cap);
      pending.push_back(std::move(v));
    }
  };
  push(initial_monomial(g, b, a, j));
  while (!pending.empty()) {
    SymPolynomial v = std::move(pending.front());
    pending.pop_front();
    for (int arrow = 0; arrow < g.dim(); ++arrow) push(apply_arrow(g, arrow, v));
  }
  return ech.rows();
}

std::set<ColoredPartition, Precedes> leading_term_set(const std::vector<SymPolynomial>& basis) {
  Echelon ech;
  for (const auto& v : basis) ech.insert(v);
  return ech.pivots();
}

}  // namespace cnlt
