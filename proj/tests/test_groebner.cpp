#include <random>

#include "doctest.h"
#include "glc/groebner.hpp"
#include "oracles.hpp"

using namespace glc;

namespace {

using P = Polynomial<RationalField>;
using Pp = Polynomial<PrimeField>;

RingPtr<RationalField> qq(std::vector<std::string> vars) {
  return Ring<RationalField>::make(RationalField{}, std::move(vars));
}
RingPtr<PrimeField> f101(std::vector<std::string> vars, MonomialOrder order = MonomialOrder::grevlex) {
  return Ring<PrimeField>::make(PrimeField(101), std::move(vars), order);
}

template <CoefficientField F>
IdealBasis<F> ideal(const RingPtr<F>& R, std::initializer_list<const char*> gens) {
  std::vector<Polynomial<F>> g;
  for (auto s : gens) g.push_back(parse_polynomial(R, s));
  return make_ideal(R, std::move(g));
}

template <CoefficientField F>
std::vector<std::string> strings(const IdealBasis<F>& I) {
  std::vector<std::string> out;
  for (const auto& g : I.generators) out.push_back(g.to_string());
  return out;
}

}  // namespace

TEST_CASE("buchberger on small ideals") {
  auto R = qq({"x", "y"});
  CHECK(strings(buchberger(ideal(R, {"x+y", "x-y"}))) == std::vector<std::string>{"x", "y"});
  CHECK(strings(buchberger(ideal(R, {"x^2-y"}))) == std::vector<std::string>{"x^2 - y"});
  CHECK(strings(buchberger(ideal(R, {"x*y", "x^2"}))) == std::vector<std::string>{"x^2", "x*y"});
}

TEST_CASE("normal forms") {
  auto R = qq({"x", "y"});
  auto gb = buchberger(ideal(R, {"x^2-y"}));
  CHECK(normal_form(parse_polynomial(R, "x^2"), gb) == parse_polynomial(R, "y"));
  CHECK(normal_form(parse_polynomial(R, "x^2-y"), gb).is_zero());
  auto gx = buchberger(ideal(R, {"x"}));
  CHECK(normal_form(parse_polynomial(R, "y"), gx) == parse_polynomial(R, "y"));
  CHECK_THROWS_AS(normal_form(parse_polynomial(R, "y"), ideal(R, {"x"})), NotGroebnerError);
}

TEST_CASE("normal form is idempotent") {
  auto R = f101({"x", "y", "z"});
  std::mt19937 rng(5);
  auto gb = buchberger(make_ideal(R, {oracle::random_form(R, 2, rng), oracle::random_form(R, 2, rng),
                                      oracle::random_form(R, 3, rng)}));
  for (int t = 0; t < 20; ++t) {
    auto f = oracle::random_form(R, 4, rng);
    auto r = normal_form(f, gb);
    CHECK(normal_form(r, gb) == r);
  }
}

TEST_CASE("syzygies") {
  auto R = qq({"x", "y"});
  auto check_kills = [&](const IdealBasis<RationalField>& I) {
    auto gb = groebner_basis(I);
    auto syz = syzygies(gb);
    for (const auto& s : syz.generators) {
      P sum(R);
      for (std::uint32_t i = 0; i < gb.size(); ++i) sum = sum + component(R, s, i) * component(R, gb.elements()[i], 0);
      CHECK(sum.is_zero());
    }
    return syz;
  };
  auto s1 = check_kills(ideal(R, {"x", "y"}));
  REQUIRE(s1.generators.size() == 1);
  CHECK(component(R, s1.generators[0], 0) == parse_polynomial(R, "y"));
  CHECK(component(R, s1.generators[0], 1) == parse_polynomial(R, "-x"));
  CHECK(check_kills(ideal(R, {"x"})).generators.empty());
  auto s3 = check_kills(ideal(R, {"x^2", "x*y"}));
  REQUIRE(s3.generators.size() == 1);
  // matrix product (x^2, xy) . (y, -x)^T = 0, and that is the only relation
  CHECK(component(R, s3.generators[0], 0) == parse_polynomial(R, "y"));
  CHECK(component(R, s3.generators[0], 1) == parse_polynomial(R, "-x"));
}

TEST_CASE("ideal powers") {
  auto R = qq({"x", "y"});
  CHECK(strings(ideal_power(ideal(R, {"x", "y"}), 2)) == std::vector<std::string>{"x^2", "x*y", "y^2"});
  CHECK(strings(ideal_power(ideal(R, {"x", "y"}), 1)) == std::vector<std::string>{"x", "y"});
  CHECK(strings(ideal_power(ideal(R, {"x"}), 3)) == std::vector<std::string>{"x^3"});
  CHECK_THROWS(ideal_power(ideal(R, {"x"}), 0));

  auto S = f101({"x", "y", "z"});
  std::mt19937 rng(17);
  auto a = make_ideal(S, {oracle::random_form(S, 1, rng), oracle::random_form(S, 2, rng)});
  auto a3 = ideal_power(a, 3);
  auto a2 = ideal_power(a, 2);
  // every generator of a^3 lies in a^2 * a and in a
  auto gb2 = buchberger(a2);
  auto gb1 = buchberger(a);
  for (const auto& g : a3.generators) {
    CHECK(normal_form(g, gb2).is_zero());
    CHECK(normal_form(g, gb1).is_zero());
  }
}

TEST_CASE("colon and saturation") {
  auto R = qq({"x", "y"});
  auto x = parse_polynomial(R, "x");
  auto y = parse_polynomial(R, "y");
  auto c1 = colon_and_saturation(ideal(R, {"x^2"}), x);
  CHECK(strings(c1.colon) == std::vector<std::string>{"x"});
  auto c2 = colon_and_saturation(ideal(R, {"x*y"}), x);
  CHECK(strings(c2.saturation) == std::vector<std::string>{"y"});
  auto c3 = colon_and_saturation(ideal(R, {"x"}), y);
  CHECK(strings(c3.colon) == std::vector<std::string>{"x"});
  auto c4 = colon_and_saturation(ideal(R, {"x^3", "x^2*y"}), x);
  CHECK(strings(c4.colon) == std::vector<std::string>{"x^2", "x*y"});
  CHECK(strings(c4.saturation) == std::vector<std::string>{"1"});
  CHECK_THROWS(colon_and_saturation(ideal(R, {"x"}), P(R)));
}

TEST_CASE("submodule colon") {
  auto R = qq({"x", "y"});
  // U = <(x^2, 0), (0, x*y)> in R^2; (U : x) = <(x, 0), (0, y)>
  SubmoduleBasis<RationalField> U{R, FreeModule::of_rank(2), {}, false};
  U.generators.push_back(unit_vector(parse_polynomial(R, "x^2"), 0));
  U.generators.push_back(unit_vector(parse_polynomial(R, "x*y"), 1));
  auto c = colon_and_saturation(U, parse_polynomial(R, "x"));
  REQUIRE(c.colon.generators.size() == 2);
  CHECK(equal(*R, c.colon.generators[0], unit_vector(parse_polynomial(R, "x"), 0)));
  CHECK(equal(*R, c.colon.generators[1], unit_vector(parse_polynomial(R, "y"), 1)));
  CHECK(c.saturation.generators.size() == 2);
}

TEST_CASE("ideal intersection") {
  auto R = qq({"x", "y"});
  auto i = buchberger(ideal_intersection(ideal(R, {"x"}), ideal(R, {"y"})));
  CHECK(strings(i) == std::vector<std::string>{"x*y"});
  auto j = buchberger(ideal_intersection(ideal(R, {"x^2", "y"}), ideal(R, {"x", "y^2"})));
  CHECK(strings(j) == std::vector<std::string>{"x^2", "x*y", "y^2"});
}

TEST_CASE("random ideals: Buchberger criterion, membership certificates, Hilbert function") {
  std::mt19937 rng(2024);
  for (auto order : {MonomialOrder::grevlex, MonomialOrder::lex}) {
    auto R = f101({"x", "y", "z"}, order);
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<Pp> gens;
      int count = 2 + static_cast<int>(rng() % 3);
      for (int i = 0; i < count; ++i) gens.push_back(oracle::random_form(R, 1 + rng() % 3, rng, 0.4));
      std::vector<Vector<PrimeField>> cols;
      for (const auto& g : gens) cols.push_back(unit_vector(g, 0));
      auto gb = tracked_groebner_basis(R, FreeModule::of_rank(1), cols);
      CHECK(satisfies_buchberger_criterion(gb));
      // auto-reduced: no lead divides another term
      for (std::size_t i = 0; i < gb.size(); ++i)
        for (std::size_t j = 0; j < gb.size(); ++j)
          if (i != j)
            for (const auto& t : gb.elements()[j].terms) CHECK_FALSE(gb.elements()[i].lead().mono.divides(t.mono));
      // membership soundness: quotients re-multiply to the element
      for (int t = 0; t < 5; ++t) {
        Pp f(R);
        for (const auto& g : gens) f = f + oracle::random_form(R, 2, rng, 0.3) * g.times_monomial(Monomial{});
        auto hom = f;  // may be inhomogeneous; membership still must be certified
        auto lift = gb.lift(unit_vector(hom, 0));
        Pp back(R);
        for (std::uint32_t i = 0; i < gens.size(); ++i) back = back + component(R, lift, i) * gens[i];
        CHECK(back == hom);
      }
      for (int d = 0; d <= 5; ++d)
        CHECK(gb.hilbert_function(d) == oracle::quotient_dimension(3, {0}, cols, R->field(), d));
    }
  }
}

TEST_CASE("module Groebner bases against linear algebra") {
  std::mt19937 rng(99);
  auto R = f101({"x", "y", "z"});
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<int> degs{0, 1, 1};
    std::vector<Vector<PrimeField>> cols;
    int count = 2 + static_cast<int>(rng() % 3);
    for (int c = 0; c < count; ++c) {
      int d = 2 + static_cast<int>(rng() % 2);
      std::vector<Pp> comps;
      for (int p : degs) comps.push_back(oracle::random_form(R, static_cast<unsigned>(d - p), rng, 0.3));
      cols.push_back(from_components(*R, comps));
    }
    auto gb = groebner_basis(R, FreeModule(degs), cols);
    CHECK(satisfies_buchberger_criterion(gb));
    for (int d = 0; d <= 5; ++d) CHECK(gb.hilbert_function(d) == oracle::quotient_dimension(3, degs, cols, R->field(), d));
    auto syz = syzygies_of(R, FreeModule(degs), cols, FreeModule(std::vector<int>(cols.size(), 0)));
    for (const auto& s : syz) {
      Vector<PrimeField> sum;
      for (std::uint32_t c = 0; c < cols.size(); ++c) sum = add(*R, sum, multiply(*R, component(R, s, c), cols[c]));
      CHECK(sum.is_zero());
    }
  }
}

TEST_CASE("hypersurface quotient: reduction modulo f") {
  auto A = f101({"x", "y"});
  auto R = A->with_hypersurface(parse_polynomial(A, "x^2"));
  auto x = Pp::variable(R, 0);
  // Over k[x,y]/(x^2) the syzygies of (x) are generated by x
  auto syz = syzygies_of(R, FreeModule::of_rank(1), {unit_vector(x, 0)}, FreeModule(std::vector<int>{1}));
  REQUIRE(syz.size() == 1);
  CHECK(component(R, syz[0], 0).monic() == x);
  auto gb = groebner_basis(make_ideal(R, {parse_polynomial(R, "y")}));
  CHECK(gb.hilbert_function(1) == 1);
  CHECK(gb.hilbert_function(2) == 0);
}

TEST_CASE("minimal generators") {
  auto R = qq({"x", "y"});
  std::vector<Vector<RationalField>> cands;
  for (auto s : {"x^2", "x", "x*y", "y^2", "x+y"}) cands.push_back(unit_vector(parse_polynomial(R, s), 0));
  auto mins = minimal_generators(R, FreeModule::of_rank(1), cands);
  CHECK(mins.size() == 2);
}

TEST_CASE("engine complete_through gives a basis up to the degree") {
  auto R = f101({"x", "y", "z"});
  std::mt19937 rng(1);
  GroebnerEngine<PrimeField> engine(R, FreeModule::of_rank(1));
  std::vector<Vector<PrimeField>> cols;
  for (unsigned d : {2u, 2u, 3u}) cols.push_back(unit_vector(oracle::random_form(R, d, rng), 0));
  for (const auto& c : cols) engine.add_generator(c);
  engine.complete_through(3);
  for (unsigned d : {2u, 3u})
    for (const auto& m : monomials_of_degree(3, d)) {
      // membership of degree <= 3 forms is decided by the partial basis
      auto v = unit_vector(Pp::monomial(R, m, 1), 0);
      auto r = engine.reduce(v);
      (void)r;
    }
  engine.complete();
  auto gb = engine.basis();
  CHECK(satisfies_buchberger_criterion(gb));
}
