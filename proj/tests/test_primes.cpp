#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "glc/primes.hpp"
#include "oracles.hpp"

using namespace glc;

namespace {

using Module = PresentedModule<PrimeField>;
using Pp = Polynomial<PrimeField>;

RingPtr<PrimeField> ring(std::vector<std::string> vars) {
  return Ring<PrimeField>::make(PrimeField(101), std::move(vars));
}

template <CoefficientField F>
IdealBasis<F> ideal(const RingPtr<F>& R, std::vector<std::string> gens) {
  std::vector<Polynomial<F>> g;
  for (const auto& s : gens) g.push_back(parse_polynomial(R, s));
  return make_ideal(R, std::move(g));
}

template <CoefficientField F>
std::vector<std::string> names(const AssReport<F>& r) {
  std::vector<std::string> out;
  for (const auto& p : r.primes) out.push_back(p.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

/// Minimal vertex covers by checking every subset of variables.
std::set<std::vector<std::size_t>> brute_force_covers(const std::vector<Monomial>& gens, std::size_t n) {
  std::vector<unsigned> covers;
  for (unsigned s = 0; s < (1u << n); ++s) {
    bool ok = std::all_of(gens.begin(), gens.end(), [&](const Monomial& m) { return (m.support() & s) != 0; });
    if (ok) covers.push_back(s);
  }
  std::set<std::vector<std::size_t>> out;
  for (unsigned c : covers) {
    bool minimal = std::none_of(covers.begin(), covers.end(), [&](unsigned d) { return d != c && (d & c) == d; });
    if (!minimal) continue;
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < n; ++i)
      if (c & (1u << i)) v.push_back(i);
    out.insert(v);
  }
  return out;
}

Monomial random_monomial(std::size_t n, std::mt19937& rng, unsigned max_exp) {
  std::uniform_int_distribution<unsigned> e(0, max_exp);
  std::vector<unsigned> ex(n);
  unsigned total = 0;
  do {
    total = 0;
    for (auto& x : ex) total += (x = e(rng));
  } while (total == 0);
  return Monomial(ex);
}

/// Ass of R/I for a monomial ideal: the variable primes of the form (I : m).
std::set<std::string> monomial_ass_oracle(const RingPtr<PrimeField>& R, const std::vector<Monomial>& gens) {
  const std::size_t n = R->nvars();
  std::vector<unsigned> bound(n, 0);
  for (const auto& g : gens)
    for (std::size_t i = 0; i < n; ++i) bound[i] = std::max(bound[i], g[i]);
  std::vector<Pp> polys;
  for (const auto& g : gens) polys.push_back(Pp::monomial(R, g, 1));
  auto I = make_ideal(R, polys);
  std::set<std::string> out;
  std::vector<unsigned> ex(n, 0);
  while (true) {
    auto m = Pp::monomial(R, Monomial(ex), 1);
    auto c = colon_and_saturation(I, m).colon;
    bool is_variable_prime = std::all_of(c.generators.begin(), c.generators.end(),
                                         [](const Pp& g) { return g.degree() == 1 && g.size() == 1; });
    if (is_variable_prime && !(c.generators.size() == 1 && c.generators[0].is_constant())) {
      auto p = certify_prime(c);
      REQUIRE(p);
      out.insert(p->to_string());
    }
    std::size_t i = 0;
    while (i < n && ex[i] == bound[i]) ex[i++] = 0;
    if (i == n) break;
    ++ex[i];
  }
  return out;
}

/// Products of random forms outside p stay outside p.
template <CoefficientField F>
void check_prime_by_sampling(const PrimeIdeal<F>& p, std::mt19937& rng) {
  const auto& R = p.basis.ring;
  for (int trial = 0; trial < 20; ++trial) {
    auto a = normal_form(oracle::random_form(R, 1 + trial % 2, rng), p.basis);
    auto b = normal_form(oracle::random_form(R, 1 + trial % 3, rng), p.basis);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK_FALSE(normal_form(a * b, p.basis).is_zero());
  }
}

}  // namespace

TEST_CASE("supported factorizations") {
  auto R = ring({"x", "y", "z"});
  auto f = supported_factors(parse_polynomial(R, "x^2*y - x*y^2"));
  CHECK(f.reducible);
  CHECK(f.factors.size() == 3);
  auto g = supported_factors(parse_polynomial(R, "x^2*y"));
  CHECK(g.reducible);
  CHECK(g.factors.size() == 2);
  CHECK_FALSE(supported_factors(parse_polynomial(R, "x + y + z")).reducible);
  CHECK_FALSE(supported_factors(parse_polynomial(R, "x^2 + y*z")).reducible);
  // -1 is a square mod 101
  CHECK(supported_factors(parse_polynomial(R, "x^2 + y^2")).reducible);
  auto Q = Ring<RationalField>::make(RationalField{}, {"x", "y"});
  CHECK_FALSE(supported_factors(parse_polynomial(Q, "x^2 + y^2")).reducible);
  auto h = supported_factors(parse_polynomial(Q, "2*x^3 - 3*x^2*y + y^3"));
  CHECK(h.reducible);
  // (x - y)^2 (2x + y)
  CHECK(h.factors.size() == 2);
  CHECK_FALSE(supported_factors(parse_polynomial(Q, "x^3 - 2*y^3")).reducible);
}

TEST_CASE("prime certificates") {
  auto R = ring({"x", "y", "z"});
  auto p = certify_prime(buchberger(ideal(R, {"x", "y"})));
  REQUIRE(p);
  CHECK(p->certificate == PrimeCertificate::monomial_prime);
  CHECK(p->height == 2);
  auto q = certify_prime(buchberger(ideal(R, {"x - y"})));
  REQUIRE(q);
  CHECK(q->certificate == PrimeCertificate::variables_plus_irreducible);
  CHECK(q->height == 1);
  auto Q = Ring<RationalField>::make(RationalField{}, {"x", "y", "z"});
  auto c = certify_prime(buchberger(ideal(Q, {"z", "x^2 + y^2"})));
  REQUIRE(c);
  CHECK(c->certificate == PrimeCertificate::variables_plus_irreducible);
  CHECK(c->height == 2);
  auto d = certify_prime(buchberger(ideal(R, {"x*y - z^2"})));
  REQUIRE(d);
  CHECK(d->certificate == PrimeCertificate::declared);
  CHECK_FALSE(certify_prime(buchberger(ideal(R, {"x*y"}))));
  CHECK_FALSE(certify_prime(buchberger(ideal(R, {"x^2"}))));
  CHECK_FALSE(certify_prime(buchberger(ideal(R, {"1"}))));
  auto zero = certify_prime(buchberger(make_ideal(R, {})));
  REQUIRE(zero);
  CHECK(zero->height == 0);
  CHECK(zero->to_string() == "(0)");
  for (const auto& pr : {*p, *q, *d, *zero}) CHECK(certificate_holds(pr));
}

TEST_CASE("minimal primes of monomial ideals agree with brute force") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 4;
    std::vector<Monomial> gens;
    for (int k = 0; k < 1 + trial % 5; ++k) gens.push_back(random_monomial(n, rng, 2));
    auto got = monomial_minimal_primes(gens, n);
    std::set<std::vector<std::size_t>> got_set(got.begin(), got.end());
    CHECK(got_set.size() == got.size());
    CHECK(got_set == brute_force_covers(gens, n));
  }
}

TEST_CASE("minimal primes") {
  auto R = ring({"x", "y", "z"});
  CHECK(names(minimal_primes(ideal(R, {"x*y", "x*z"}))) == std::vector<std::string>{"(x)", "(y, z)"});
  CHECK(names(minimal_primes(ideal(R, {"x^2 - y^2"}))) == std::vector<std::string>{"(x + y)", "(x - y)"});
  CHECK(minimal_primes(ideal(R, {"1"})).primes.empty());
  auto Q = Ring<RationalField>::make(RationalField{}, {"x", "y"});
  auto irr = minimal_primes(ideal(Q, {"x^2 + y^2"}));
  CHECK(irr.complete);
  CHECK(names(irr) == std::vector<std::string>{"(x^2 + y^2)"});
}

TEST_CASE("dim R/I is the largest dim R/p over minimal primes") {
  std::mt19937 rng(11);
  auto R = ring({"x", "y", "z"});
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Pp> gens;
    // products of linear forms and variables keep the search inside the supported cases
    for (int k = 0; k < 1 + trial % 3; ++k) {
      Pp g = Pp::constant(R, 1);
      for (int f = 0; f < 1 + (trial + k) % 2; ++f) {
        auto l = oracle::random_form(R, 1, rng, trial % 2 ? 0.4 : 0.9);
        if (!l.is_zero()) g = g * l;
      }
      if (!g.is_constant()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    auto I = make_ideal(R, gens);
    auto mins = minimal_primes(I);
    if (!mins.complete) continue;
    ++checked;
    int best = -1;
    for (const auto& p : mins.primes) {
      CHECK(ideal_subset(I, p.basis));
      CHECK(certificate_holds(p));
      check_prime_by_sampling(p, rng);
      best = std::max(best, R->dimension() - p.height);
    }
    CHECK(dim_of_ideal(I) == best);
  }
  CHECK(checked >= 30);
}

TEST_CASE("associated primes") {
  auto R = ring({"x", "y"});
  auto M = Module::cyclic(ideal(R, {"x^2", "x*y"}));
  auto ass = associated_primes(M);
  CHECK(ass.complete);
  CHECK(names(ass) == std::vector<std::string>{"(x)", "(x, y)"});
  // witnesses: (I : y) = (x) and (I : x) = (x, y)
  auto I = ideal(R, {"x^2", "x*y"});
  CHECK(same_ideal(colon_and_saturation(I, parse_polynomial(R, "y")).colon, ideal(R, {"x"})));
  CHECK(same_ideal(colon_and_saturation(I, parse_polynomial(R, "x")).colon, ideal(R, {"x", "y"})));

  CHECK(names(associated_primes(Module::free(R, FreeModule::of_rank(1)))) == std::vector<std::string>{"(0)"});
  CHECK(names(associated_primes(residue_field(R))) == std::vector<std::string>{"(x, y)"});
  CHECK(associated_primes(Module::zero(R)).primes.empty());
}

TEST_CASE("associated primes of monomial quotients agree with colon witnesses") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    auto R = ring(trial % 2 ? std::vector<std::string>{"x", "y"} : std::vector<std::string>{"x", "y", "z"});
    std::vector<Monomial> gens;
    for (int k = 0; k < 2 + trial % 3; ++k) gens.push_back(random_monomial(R->nvars(), rng, 2));
    std::vector<Pp> polys;
    for (const auto& g : gens) polys.push_back(Pp::monomial(R, g, 1));
    auto ass = associated_primes(Module::cyclic(make_ideal(R, polys)));
    CHECK(ass.complete);
    auto got = names(ass);
    std::set<std::string> got_set(got.begin(), got.end());
    CHECK(got_set == monomial_ass_oracle(R, gens));
  }
}

TEST_CASE("Ass contains the minimal primes of the annihilator") {
  std::mt19937 rng(3);
  auto R = ring({"x", "y", "z"});
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Pp> gens;
    for (int k = 0; k < 2; ++k) gens.push_back(oracle::random_form(R, 1, rng) * oracle::random_form(R, 1, rng));
    auto M = Module::cyclic(make_ideal(R, gens));
    auto ass = associated_primes(M);
    auto mins = minimal_primes(annihilator(M));
    if (!ass.complete || !mins.complete) continue;
    for (const auto& p : mins.primes) CHECK(std::find(ass.primes.begin(), ass.primes.end(), p) != ass.primes.end());
  }
}

TEST_CASE("primes over a hypersurface ring") {
  auto A = ring({"x", "y", "z"});
  auto R = A->with_hypersurface(parse_polynomial(A, "x*y - z^2"));
  auto mins = minimal_primes(ideal(R, {"x"}));
  CHECK(names(mins) == std::vector<std::string>{"(x, z)"});
  REQUIRE(mins.primes.size() == 1);
  CHECK(mins.primes[0].height == 1);
  auto ass = associated_primes(Module::free(R, FreeModule::of_rank(1)));
  REQUIRE(ass.primes.size() == 1);
  CHECK(ass.primes[0].to_string() == "(0)");
  CHECK(ass.primes[0].certificate == PrimeCertificate::declared);
}

TEST_CASE("support") {
  auto R = ring({"x", "y"});
  auto M = Module::cyclic(ideal(R, {"x"}));
  auto px = *certify_prime(buchberger(ideal(R, {"x"})));
  auto py = *certify_prime(buchberger(ideal(R, {"y"})));
  auto m = *certify_prime(buchberger(ideal(R, {"x", "y"})));
  CHECK(supp_contains(M, px));
  CHECK_FALSE(supp_contains(M, py));
  CHECK(supp_contains(M, m));
  CHECK_FALSE(supp_contains(Module::zero(R), m));
  CHECK(prime_contained(px, m));
  CHECK_FALSE(prime_contained(m, px));
}
