#pragma once

// Exact multivariate polynomials and free-module vectors over a coefficient
// field. A Ring is the polynomial ring k[x_1..x_n], optionally carrying a
// homogeneous hypersurface equation f; arithmetic always happens in k[x], and
// reduction modulo f is folded into Groebner normal forms.

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "glc/field.hpp"
#include "glc/monomial.hpp"

namespace glc {

template <CoefficientField F>
struct Term {
  Monomial mono;
  typename F::Element coeff;
};

class RingMismatch : public std::invalid_argument {
 public:
  RingMismatch() : std::invalid_argument("polynomials belong to different rings") {}
};

/// Malformed polynomial or instance text; `column` is 1-based (0 if unknown).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

template <CoefficientField F>
class Polynomial;

template <CoefficientField F>
class Ring : public std::enable_shared_from_this<Ring<F>> {
 public:
  using Element = typename F::Element;

  Ring(F field, std::vector<std::string> names, MonomialOrder order = MonomialOrder::grevlex,
       std::vector<Term<F>> hypersurface = {})
      : field_(std::move(field)), names_(std::move(names)), order_(order), hypersurface_(std::move(hypersurface)) {
    if (names_.empty() || names_.size() > kMaxVariables)
      throw std::invalid_argument("ring needs between 1 and " + std::to_string(kMaxVariables) + " variables");
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable name " + names_[i]);
  }

  static std::shared_ptr<const Ring> make(F field, std::vector<std::string> names,
                                          MonomialOrder order = MonomialOrder::grevlex) {
    return std::make_shared<const Ring>(std::move(field), std::move(names), order);
  }

  const F& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& variable_names() const { return names_; }
  MonomialOrder order() const { return order_; }
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const { return glc::compare(a, b, order_); }

  bool has_hypersurface() const { return !hypersurface_.empty(); }
  const std::vector<Term<F>>& hypersurface_terms() const { return hypersurface_; }
  Polynomial<F> hypersurface() const;
  /// Krull dimension of the ring.
  int dimension() const { return static_cast<int>(nvars()) - (has_hypersurface() ? 1 : 0); }

  std::shared_ptr<const Ring> with_hypersurface(const Polynomial<F>& f) const;
  std::shared_ptr<const Ring> with_order(MonomialOrder order) const;
  /// The polynomial ring underneath (same variables, field, order; no hypersurface).
  std::shared_ptr<const Ring> ambient() const;

  /// Structural equality: field, variables, order and hypersurface coincide.
  bool same_as(const Ring& other) const;

  std::string describe() const;

 private:
  F field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
  std::vector<Term<F>> hypersurface_;
};

template <CoefficientField F>
using RingPtr = std::shared_ptr<const Ring<F>>;

namespace detail {

template <CoefficientField F>
void canonicalize_terms(const Ring<F>& ring, std::vector<Term<F>>& terms) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term<F>& a, const Term<F>& b) { return ring.compare(a.mono, b.mono) > 0; });
  std::vector<Term<F>> out;
  out.reserve(terms.size());
  const F& k = ring.field();
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = k.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && k.is_zero(out.back().coeff)) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && k.is_zero(out.back().coeff)) out.pop_back();
  terms = std::move(out);
}

}  // namespace detail

/// Element of k[x_1..x_n]; terms strictly decreasing in the ring's order, no zero coefficients.
template <CoefficientField F>
class Polynomial {
 public:
  using Element = typename F::Element;

  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr<F> ring, std::vector<Term<F>> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    detail::canonicalize_terms(*ring_, terms_);
  }

  static Polynomial constant(RingPtr<F> ring, Element c) {
    std::vector<Term<F>> t;
    t.push_back({Monomial{}, std::move(c)});
    return Polynomial(std::move(ring), std::move(t));
  }
  static Polynomial variable(RingPtr<F> ring, std::size_t index) {
    if (index >= ring->nvars()) throw std::out_of_range("variable index out of range");
    std::vector<Term<F>> t;
    t.push_back({Monomial::variable(index), ring->field().one()});
    return Polynomial(std::move(ring), std::move(t));
  }
  static Polynomial monomial(RingPtr<F> ring, const Monomial& m, Element c) {
    std::vector<Term<F>> t;
    t.push_back({m, std::move(c)});
    return Polynomial(std::move(ring), std::move(t));
  }
  /// Builds from terms already in canonical order (no re-sorting).
  static Polynomial from_sorted(RingPtr<F> ring, std::vector<Term<F>> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Term<F>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  std::size_t size() const { return terms_.size(); }

  const Term<F>& leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
    return terms_.front();
  }
  Term<F> leading_term(MonomialOrder order) const {
    if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
    const Term<F>* best = &terms_.front();
    for (const auto& t : terms_)
      if (glc::compare(t.mono, best->mono, order) > 0) best = &t;
    return *best;
  }

  /// Maximal total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
    return d;
  }
  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = ring_->field().neg(t.coeff);
    return r;
  }
  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) { return p.combine(q, false); }
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p.combine(q, true); }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    p.check_ring(q);
    if (p.is_zero() || q.is_zero()) return Polynomial(p.ring_);
    const F& k = p.ring_->field();
    std::vector<Term<F>> out;
    out.reserve(p.size() * q.size());
    for (const auto& a : p.terms_)
      for (const auto& b : q.terms_) out.push_back({a.mono * b.mono, k.mul(a.coeff, b.coeff)});
    return Polynomial(p.ring_, std::move(out));
  }
  Polynomial scaled(const Element& c) const {
    const F& k = ring_->field();
    if (k.is_zero(c)) return Polynomial(ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = k.mul(t.coeff, c);
    return r;
  }
  Polynomial times_monomial(const Monomial& m) const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.mono = t.mono * m;
    return r;
  }
  Polynomial pow(unsigned e) const {
    Polynomial r = constant(ring_, ring_->field().one());
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }
  /// Scales so the leading coefficient is 1 (zero stays zero).
  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(ring_->field().inv(terms_.front().coeff));
  }

  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    if (p.terms_.size() != q.terms_.size()) return false;
    const F& k = p.ring_->field();
    for (std::size_t i = 0; i < p.terms_.size(); ++i)
      if (!(p.terms_[i].mono == q.terms_[i].mono) || !k.equal(p.terms_[i].coeff, q.terms_[i].coeff)) return false;
    return true;
  }

  /// The same polynomial viewed in another ring with the same variable count.
  Polynomial in_ring(RingPtr<F> other) const {
    if (other->nvars() != ring_->nvars()) throw RingMismatch();
    return Polynomial(std::move(other), terms_);
  }

  std::string to_string() const;

 private:
  void check_ring(const Polynomial& q) const {
    if (ring_ != q.ring_ && !ring_->same_as(*q.ring_)) throw RingMismatch();
  }
  Polynomial combine(const Polynomial& q, bool subtract) const {
    check_ring(q);
    const F& k = ring_->field();
    std::vector<Term<F>> out;
    out.reserve(terms_.size() + q.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < q.terms_.size()) {
      std::strong_ordering c = std::strong_ordering::greater;
      if (i == terms_.size()) c = std::strong_ordering::less;
      else if (j < q.terms_.size()) c = ring_->compare(terms_[i].mono, q.terms_[j].mono);
      if (c > 0) {
        out.push_back(terms_[i++]);
      } else if (c < 0) {
        auto t = q.terms_[j++];
        if (subtract) t.coeff = k.neg(t.coeff);
        out.push_back(std::move(t));
      } else {
        auto s = subtract ? k.sub(terms_[i].coeff, q.terms_[j].coeff) : k.add(terms_[i].coeff, q.terms_[j].coeff);
        if (!k.is_zero(s)) out.push_back({terms_[i].mono, std::move(s)});
        ++i;
        ++j;
      }
    }
    return from_sorted(ring_, std::move(out));
  }

  RingPtr<F> ring_;
  std::vector<Term<F>> terms_;
};

/// Parses `3*x^2*y - y^3` style text. Integer coefficients (and a/b over QQ).
template <CoefficientField F>
Polynomial<F> parse_polynomial(const RingPtr<F>& ring, std::string_view text);

template <CoefficientField F>
std::string monomial_to_string(const Ring<F>& ring, const Monomial& m);

// ---------------------------------------------------------------------------
// Free-module vectors.

template <CoefficientField F>
struct VectorTerm {
  std::uint32_t pos;
  Monomial mono;
  typename F::Element coeff;
};

/// Sparse element of a free module: terms sorted by position-over-term order
/// (smaller position index is greater; ties broken by the ring's monomial
/// order), strictly decreasing, no zero coefficients. Degrees of the basis
/// elements live in the surrounding FreeModule, not here.
template <CoefficientField F>
struct Vector {
  std::vector<VectorTerm<F>> terms;

  bool is_zero() const { return terms.empty(); }
  const VectorTerm<F>& lead() const { return terms.front(); }
};

template <CoefficientField F>
inline std::strong_ordering compare_pot(const Ring<F>& ring, std::uint32_t pa, const Monomial& a, std::uint32_t pb,
                                        const Monomial& b) {
  if (pa != pb) return pb <=> pa;
  return ring.compare(a, b);
}

/// v + c * m * w, merged in one pass.
template <CoefficientField F>
Vector<F> add_multiple(const Ring<F>& ring, const Vector<F>& v, const typename F::Element& c, const Monomial& m,
                       const Vector<F>& w) {
  const F& k = ring.field();
  Vector<F> out;
  out.terms.reserve(v.terms.size() + w.terms.size());
  std::size_t i = 0, j = 0;
  const auto& vt = v.terms;
  const auto& wt = w.terms;
  while (i < vt.size() || j < wt.size()) {
    if (j == wt.size()) {
      out.terms.push_back(vt[i++]);
      continue;
    }
    Monomial wm = wt[j].mono * m;
    std::strong_ordering cmp =
        i == vt.size() ? std::strong_ordering::less : compare_pot(ring, vt[i].pos, vt[i].mono, wt[j].pos, wm);
    if (cmp > 0) {
      out.terms.push_back(vt[i++]);
    } else if (cmp < 0) {
      out.terms.push_back({wt[j].pos, wm, k.mul(c, wt[j].coeff)});
      ++j;
    } else {
      auto s = k.add(vt[i].coeff, k.mul(c, wt[j].coeff));
      if (!k.is_zero(s)) out.terms.push_back({vt[i].pos, vt[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

template <CoefficientField F>
Vector<F> add(const Ring<F>& ring, const Vector<F>& v, const Vector<F>& w) {
  return add_multiple(ring, v, ring.field().one(), Monomial{}, w);
}

template <CoefficientField F>
Vector<F> subtract(const Ring<F>& ring, const Vector<F>& v, const Vector<F>& w) {
  return add_multiple(ring, v, ring.field().neg(ring.field().one()), Monomial{}, w);
}

template <CoefficientField F>
Vector<F> scale(const Ring<F>& ring, const Vector<F>& v, const typename F::Element& c, const Monomial& m = {}) {
  const F& k = ring.field();
  Vector<F> out;
  if (k.is_zero(c)) return out;
  out.terms.reserve(v.terms.size());
  for (const auto& t : v.terms) out.terms.push_back({t.pos, t.mono * m, k.mul(c, t.coeff)});
  return out;
}

/// Sorts and combines arbitrary terms into canonical form.
template <CoefficientField F>
Vector<F> make_vector(const Ring<F>& ring, std::vector<VectorTerm<F>> terms) {
  std::sort(terms.begin(), terms.end(), [&](const VectorTerm<F>& a, const VectorTerm<F>& b) {
    return compare_pot(ring, a.pos, a.mono, b.pos, b.mono) > 0;
  });
  const F& k = ring.field();
  Vector<F> out;
  out.terms.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.terms.empty() && out.terms.back().pos == t.pos && out.terms.back().mono == t.mono) {
      out.terms.back().coeff = k.add(out.terms.back().coeff, t.coeff);
    } else {
      if (!out.terms.empty() && k.is_zero(out.terms.back().coeff)) out.terms.pop_back();
      out.terms.push_back(std::move(t));
    }
  }
  if (!out.terms.empty() && k.is_zero(out.terms.back().coeff)) out.terms.pop_back();
  return out;
}

/// Polynomial p placed at position `pos`.
template <CoefficientField F>
Vector<F> unit_vector(const Polynomial<F>& p, std::uint32_t pos) {
  Vector<F> v;
  v.terms.reserve(p.size());
  for (const auto& t : p.terms()) v.terms.push_back({pos, t.mono, t.coeff});
  return v;
}

template <CoefficientField F>
Vector<F> basis_vector(const Ring<F>& ring, std::uint32_t pos) {
  Vector<F> v;
  v.terms.push_back({pos, Monomial{}, ring.field().one()});
  return v;
}

/// p * v for a polynomial p.
template <CoefficientField F>
Vector<F> multiply(const Ring<F>& ring, const Polynomial<F>& p, const Vector<F>& v) {
  Vector<F> out;
  for (const auto& t : p.terms()) out = add_multiple(ring, out, t.coeff, t.mono, v);
  return out;
}

/// Component at `pos` as a polynomial of `ring`.
template <CoefficientField F>
Polynomial<F> component(const RingPtr<F>& ring, const Vector<F>& v, std::uint32_t pos) {
  std::vector<Term<F>> terms;
  for (const auto& t : v.terms)
    if (t.pos == pos) terms.push_back({t.mono, t.coeff});
  return Polynomial<F>::from_sorted(ring, std::move(terms));
}

template <CoefficientField F>
Vector<F> from_components(const Ring<F>& ring, const std::vector<Polynomial<F>>& comps) {
  std::vector<VectorTerm<F>> terms;
  for (std::uint32_t i = 0; i < comps.size(); ++i)
    for (const auto& t : comps[i].terms()) terms.push_back({i, t.mono, t.coeff});
  return make_vector(ring, std::move(terms));
}

/// Moves every position by `offset` (used to embed blocks).
template <CoefficientField F>
Vector<F> shift_positions(const Vector<F>& v, std::uint32_t offset) {
  Vector<F> out = v;
  for (auto& t : out.terms) t.pos += offset;
  return out;
}

template <CoefficientField F>
bool equal(const Ring<F>& ring, const Vector<F>& a, const Vector<F>& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    const auto& s = a.terms[i];
    const auto& t = b.terms[i];
    if (s.pos != t.pos || !(s.mono == t.mono) || !ring.field().equal(s.coeff, t.coeff)) return false;
  }
  return true;
}

/// Graded degree of a homogeneous vector given the degrees of basis elements.
inline int term_degree(const std::vector<int>& degrees, std::uint32_t pos, const Monomial& m) {
  return static_cast<int>(m.degree()) + degrees.at(pos);
}

template <CoefficientField F>
int vector_degree(const Vector<F>& v, const std::vector<int>& degrees) {
  if (v.is_zero()) throw std::domain_error("degree of the zero vector");
  return term_degree(degrees, v.lead().pos, v.lead().mono);
}

template <CoefficientField F>
bool is_homogeneous(const Vector<F>& v, const std::vector<int>& degrees) {
  if (v.is_zero()) return true;
  const int d = vector_degree(v, degrees);
  for (const auto& t : v.terms)
    if (term_degree(degrees, t.pos, t.mono) != d) return false;
  return true;
}

}  // namespace glc
