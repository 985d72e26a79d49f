#pragma once

// Coefficient fields. Every algebra type in the library is templated on one
// of these; the two shipped instances are explicitly instantiated in src/.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace glc {

enum class FieldKind { rationals, prime_field };

/// Runtime description of a coefficient field: Q (characteristic 0) or F_p.
struct FieldSpec {
  FieldKind kind = FieldKind::rationals;
  std::uint64_t characteristic = 0;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
  std::string to_string() const;
};

bool is_prime(std::uint64_t n);

template <class F>
concept CoefficientField = requires(const F& f, const typename F::Element& a) {
  { f.zero() } -> std::same_as<typename F::Element>;
  { f.one() } -> std::same_as<typename F::Element>;
  { f.add(a, a) } -> std::same_as<typename F::Element>;
  { f.sub(a, a) } -> std::same_as<typename F::Element>;
  { f.mul(a, a) } -> std::same_as<typename F::Element>;
  { f.neg(a) } -> std::same_as<typename F::Element>;
  { f.inv(a) } -> std::same_as<typename F::Element>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.is_one(a) } -> std::same_as<bool>;
  { f.from_integer(std::int64_t{}) } -> std::same_as<typename F::Element>;
  { f.to_string(a) } -> std::same_as<std::string>;
  { f.spec() } -> std::same_as<FieldSpec>;
};

/// F_p for a prime p < 2^63, elements kept reduced in [0, p).
class PrimeField {
 public:
  using Element = std::uint64_t;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t characteristic() const { return p_; }
  FieldSpec spec() const { return {FieldKind::prime_field, p_}; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element add(Element a, Element b) const {
    Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + (p_ - b); }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  bool equal(Element a, Element b) const { return a == b; }
  Element from_integer(std::int64_t v) const;
  /// Parses a decimal integer of arbitrary length, reducing mod p.
  Element from_decimal(std::string_view digits) const;
  /// Symmetric representative, so p - 1 prints as -1.
  std::string to_string(Element a) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
};

/// The rationals, with GMP arbitrary-precision elements.
class RationalField {
 public:
  using Element = mpq_class;

  FieldSpec spec() const { return {FieldKind::rationals, 0}; }
  std::uint64_t characteristic() const { return 0; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const { return inv(b) * a; }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  Element from_integer(std::int64_t v) const { return Element(static_cast<long>(v)); }
  Element from_decimal(std::string_view digits) const;
  Element from_fraction(std::string_view num, std::string_view den) const;
  std::string to_string(const Element& a) const { return a.get_str(); }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

static_assert(CoefficientField<PrimeField>);
static_assert(CoefficientField<RationalField>);

}  // namespace glc
