#pragma once

// Prime ideals of R: dimension, minimal primes by monomial combinatorics and
// splitting through linear factors, associated primes via Ext annihilators,
// and support tests.

#include <string>
#include <vector>

#include "glc/homalg.hpp"

namespace glc {

enum class PrimeCertificate {
  monomial_prime,              ///< generated by variables
  variables_plus_irreducible,  ///< linear forms plus at most one irreducible binary form of degree <= 3
  declared,                    ///< linear forms plus one quadric of rank >= 3
};

std::string to_string(PrimeCertificate c);

template <CoefficientField F>
struct PrimeIdeal {
  IdealBasis<F> basis;  ///< reduced Groebner basis (hypersurface equation included when present)

  /// Generators with the hypersurface equation left out, as text.
  int height = 0;
  PrimeCertificate certificate = PrimeCertificate::declared;

  std::string to_string() const;
  friend bool operator==(const PrimeIdeal& a, const PrimeIdeal& b) { return a.basis.generators == b.basis.generators; }
};

template <CoefficientField F>
struct AssReport {
  std::vector<PrimeIdeal<F>> primes;
  bool complete = true;
};

/// dim R/I, -1 for the unit ideal.
template <CoefficientField F>
int dim_of_ideal(const IdealBasis<F>& I);

/// Distinct factors of a polynomial found by the supported methods: the
/// variables of its monomial content and linear factors of binary forms.
template <CoefficientField F>
struct Factorization {
  std::vector<Polynomial<F>> factors;  ///< distinct, monic
  bool reducible = false;              ///< a proper factorization (or repeated factor) was found
};
template <CoefficientField F>
Factorization<F> supported_factors(const Polynomial<F>& g);

/// Certifies that the ideal with this reduced Groebner basis is prime, or returns nullopt.
template <CoefficientField F>
std::optional<PrimeIdeal<F>> certify_prime(const IdealBasis<F>& reduced);

/// Re-checks the shape recorded in a prime's certificate.
template <CoefficientField F>
bool certificate_holds(const PrimeIdeal<F>& p);

template <CoefficientField F>
AssReport<F> minimal_primes(const IdealBasis<F>& I);

/// Minimal primes of a monomial ideal: minimal sets of variables meeting every generator.
std::vector<std::vector<std::size_t>> monomial_minimal_primes(const std::vector<Monomial>& generators, std::size_t nvars);

/// Ass M = union over c of the height-c minimal primes of Ann Ext^c(M, R).
template <CoefficientField F>
AssReport<F> associated_primes(const PresentedModule<F>& M);

template <CoefficientField F>
bool supp_contains(const PresentedModule<F>& N, const PrimeIdeal<F>& p);

/// p contained in q.
template <CoefficientField F>
bool prime_contained(const PrimeIdeal<F>& p, const PrimeIdeal<F>& q);

}  // namespace glc
