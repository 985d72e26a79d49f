#include "glc/field.hpp"

namespace glc {

std::string FieldSpec::to_string() const {
  if (kind == FieldKind::rationals) return "QQ";
  return "F(" + std::to_string(characteristic) + ")";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  mpz_class z(std::to_string(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t{1} << 63)) throw std::invalid_argument("prime field characteristic must be < 2^63");
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw std::domain_error("division by zero in prime field");
  __int128 t = 0, new_t = 1;
  __int128 r = p_, new_r = a;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Element>(t);
}

PrimeField::Element PrimeField::from_integer(std::int64_t v) const {
  __int128 r = static_cast<__int128>(v) % static_cast<__int128>(p_);
  if (r < 0) r += p_;
  return static_cast<Element>(r);
}

PrimeField::Element PrimeField::from_decimal(std::string_view digits) const {
  mpz_class z(std::string(digits), 10);
  mpz_class m(std::to_string(p_), 10);
  z %= m;
  if (z < 0) z += m;
  return static_cast<Element>(std::stoull(z.get_str()));
}

std::string PrimeField::to_string(Element a) const {
  if (a > p_ / 2) return "-" + std::to_string(p_ - a);
  return std::to_string(a);
}

RationalField::Element RationalField::inv(const Element& a) const {
  if (sgn(a) == 0) throw std::domain_error("division by zero in QQ");
  Element r = 1 / a;
  r.canonicalize();
  return r;
}

RationalField::Element RationalField::from_decimal(std::string_view digits) const {
  return Element(mpz_class(std::string(digits), 10));
}

RationalField::Element RationalField::from_fraction(std::string_view num, std::string_view den) const {
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::domain_error("zero denominator");
  Element r(mpz_class(std::string(num), 10), d);
  r.canonicalize();
  return r;
}

}  // namespace glc
