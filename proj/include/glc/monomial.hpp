#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace glc {

/// Upper bound on ring variables; exponent vectors are fixed-size arrays.
inline constexpr std::size_t kMaxVariables = 8;

enum class MonomialOrder { grevlex, lex };

std::string to_string(MonomialOrder order);
MonomialOrder parse_monomial_order(const std::string& name);

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const unsigned> exponents) {
    if (exponents.size() > kMaxVariables) throw std::invalid_argument("too many variables in monomial");
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      e_[i] = static_cast<std::uint16_t>(exponents[i]);
      deg_ += exponents[i];
    }
  }
  static Monomial variable(std::size_t index, unsigned power = 1) {
    Monomial m;
    m.e_[index] = static_cast<std::uint16_t>(power);
    m.deg_ = power;
    return m;
  }

  unsigned operator[](std::size_t i) const { return e_[i]; }
  unsigned degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  bool divides(const Monomial& other) const {
    if (deg_ > other.deg_) return false;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (e_[i] != 0 && other.e_[i] != 0) return false;
    return true;
  }
  /// Quotient this / divisor; the caller guarantees divisibility.
  Monomial quotient(const Monomial& divisor) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) r.e_[i] = static_cast<std::uint16_t>(e_[i] - divisor.e_[i]);
    r.deg_ = deg_ - divisor.deg_;
    return r;
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) r.e_[i] = static_cast<std::uint16_t>(a.e_[i] + b.e_[i]);
    r.deg_ = a.deg_ + b.deg_;
    return r;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
      r.deg_ += r.e_[i];
    }
    return r;
  }
  /// Bit i set iff variable i occurs.
  unsigned support() const {
    unsigned mask = 0;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (e_[i] != 0) mask |= 1u << i;
    return mask;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint16_t, kMaxVariables> e_{};
  std::uint32_t deg_ = 0;
};

inline std::strong_ordering compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (order == MonomialOrder::grevlex) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    for (std::size_t i = kMaxVariables; i-- > 0;)
      if (a[i] != b[i]) return b[i] <=> a[i];
    return std::strong_ordering::equal;
  }
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

/// All monomials of total degree `degree` in the first `nvars` variables.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

}  // namespace glc
