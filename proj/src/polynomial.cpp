#include "glc/polynomial.hpp"

#include <cctype>
#include <functional>

namespace glc {

std::string to_string(MonomialOrder order) { return order == MonomialOrder::grevlex ? "grevlex" : "lex"; }

MonomialOrder parse_monomial_order(const std::string& name) {
  if (name == "grevlex") return MonomialOrder::grevlex;
  if (name == "lex") return MonomialOrder::lex;
  throw std::invalid_argument("unknown monomial order '" + name + "'");
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  std::vector<unsigned> e(nvars, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == nvars) {
      e[i] = left;
      out.emplace_back(std::span<const unsigned>(e));
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  if (nvars > 0) rec(0, degree);
  return out;
}

template <CoefficientField F>
Polynomial<F> Ring<F>::hypersurface() const {
  return Polynomial<F>(this->shared_from_this(), hypersurface_);
}

template <CoefficientField F>
std::shared_ptr<const Ring<F>> Ring<F>::with_hypersurface(const Polynomial<F>& f) const {
  if (f.is_zero()) return ambient();
  if (!f.is_homogeneous() || f.degree() < 2)
    throw std::invalid_argument("hypersurface equation must be homogeneous of degree >= 2");
  auto monic = f.monic();
  return std::make_shared<const Ring>(field_, names_, order_, std::vector<Term<F>>(monic.terms()));
}

template <CoefficientField F>
std::shared_ptr<const Ring<F>> Ring<F>::with_order(MonomialOrder order) const {
  std::vector<Term<F>> h = hypersurface_;
  auto r = std::make_shared<const Ring>(field_, names_, order);
  detail::canonicalize_terms(*r, h);
  return std::make_shared<const Ring>(field_, names_, order, std::move(h));
}

template <CoefficientField F>
std::shared_ptr<const Ring<F>> Ring<F>::ambient() const {
  return std::make_shared<const Ring>(field_, names_, order_);
}

template <CoefficientField F>
bool Ring<F>::same_as(const Ring& other) const {
  if (this == &other) return true;
  if (!(field_ == other.field_) || names_ != other.names_ || order_ != other.order_) return false;
  if (hypersurface_.size() != other.hypersurface_.size()) return false;
  for (std::size_t i = 0; i < hypersurface_.size(); ++i)
    if (!(hypersurface_[i].mono == other.hypersurface_[i].mono) ||
        !field_.equal(hypersurface_[i].coeff, other.hypersurface_[i].coeff))
      return false;
  return true;
}

template <CoefficientField F>
std::string Ring<F>::describe() const {
  std::string s = field_.spec().to_string() + "[";
  for (std::size_t i = 0; i < names_.size(); ++i) s += (i ? "," : "") + names_[i];
  s += "]";
  if (has_hypersurface()) s += "/(" + hypersurface().to_string() + ")";
  return s;
}

template <CoefficientField F>
std::string monomial_to_string(const Ring<F>& ring, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.variable_names()[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

template <CoefficientField F>
std::string Polynomial<F>::to_string() const {
  if (terms_.empty()) return "0";
  const F& k = ring_->field();
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    std::string c = k.to_string(terms_[i].coeff);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (i == 0) s += negative ? "-" : "";
    else s += negative ? " - " : " + ";
    const bool unit = c == "1";
    if (terms_[i].mono.is_one()) {
      s += c;
    } else {
      if (!unit) s += c + "*";
      s += monomial_to_string(*ring_, terms_[i].mono);
    }
  }
  return s;
}

namespace {

template <CoefficientField F>
class PolynomialParser {
 public:
  PolynomialParser(const RingPtr<F>& ring, std::string_view text) : ring_(ring) {
    for (std::size_t i = 0; i < text.size(); ++i)
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        chars_.push_back(text[i]);
        columns_.push_back(i + 1);
      }
  }

  Polynomial<F> parse() {
    if (chars_.empty()) fail("empty polynomial");
    std::vector<Term<F>> terms;
    bool first = true;
    while (pos_ < chars_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto t = parse_term();
      if (negative) t.coeff = ring_->field().neg(t.coeff);
      terms.push_back(std::move(t));
    }
    return Polynomial<F>(ring_, std::move(terms));
  }

 private:
  char peek() const { return pos_ < chars_.size() ? chars_[pos_] : '\0'; }
  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t col = pos_ < columns_.size() ? columns_[pos_] : (columns_.empty() ? 1 : columns_.back() + 1);
    throw ParseError(msg + " at column " + std::to_string(col), 0, col);
  }

  std::string digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d += chars_[pos_++];
    if (d.empty()) fail("expected a number");
    return d;
  }

  typename F::Element parse_coefficient() {
    std::string num = digits();
    if (peek() == '/') {
      ++pos_;
      std::string den = digits();
      if constexpr (std::is_same_v<F, RationalField>) {
        return ring_->field().from_fraction(num, den);
      } else {
        auto d = ring_->field().from_decimal(den);
        if (ring_->field().is_zero(d)) fail("zero denominator");
        return ring_->field().div(ring_->field().from_decimal(num), d);
      }
    }
    return ring_->field().from_decimal(num);
  }

  Term<F> parse_term() {
    const F& k = ring_->field();
    Term<F> t{Monomial{}, k.one()};
    bool need_factor = true;
    while (need_factor) {
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        t.coeff = k.mul(t.coeff, parse_coefficient());
      } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
        std::string name;
        const std::size_t name_start = pos_;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') name += chars_[pos_++];
        const auto& names = ring_->variable_names();
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) {
          pos_ = name_start;
          fail("unknown variable '" + name + "'");
        }
        unsigned power = 1;
        if (peek() == '^') {
          ++pos_;
          power = static_cast<unsigned>(std::stoul(digits()));
        }
        t.mono = t.mono * Monomial::variable(static_cast<std::size_t>(it - names.begin()), power);
      } else {
        fail(pos_ < chars_.size() ? std::string("unexpected character '") + peek() + "'" : "unexpected end of input");
      }
      need_factor = peek() == '*';
      if (need_factor) ++pos_;
    }
    return t;
  }

  RingPtr<F> ring_;
  std::vector<char> chars_;
  std::vector<std::size_t> columns_;
  std::size_t pos_ = 0;
};

}  // namespace

template <CoefficientField F>
Polynomial<F> parse_polynomial(const RingPtr<F>& ring, std::string_view text) {
  return PolynomialParser<F>(ring, text).parse();
}

#define GLC_INSTANTIATE(F)                                                               \
  template class Ring<F>;                                                                \
  template class Polynomial<F>;                                                          \
  template Polynomial<F> parse_polynomial<F>(const RingPtr<F>&, std::string_view);       \
  template std::string monomial_to_string<F>(const Ring<F>&, const Monomial&);

GLC_INSTANTIATE(PrimeField)
GLC_INSTANTIATE(RationalField)

}  // namespace glc
