#include <random>

#include "doctest.h"
#include "glc/homalg.hpp"
#include "oracles.hpp"

using namespace glc;

namespace {

using Module = PresentedModule<PrimeField>;
using Pp = Polynomial<PrimeField>;

RingPtr<PrimeField> ring(std::vector<std::string> vars) {
  return Ring<PrimeField>::make(PrimeField(101), std::move(vars));
}

IdealBasis<PrimeField> ideal(const RingPtr<PrimeField>& R, std::vector<std::string> gens) {
  std::vector<Pp> g;
  for (const auto& s : gens) g.push_back(parse_polynomial(R, s));
  return make_ideal(R, std::move(g));
}

Module quotient(const RingPtr<PrimeField>& R, std::vector<std::string> gens) {
  return Module::cyclic(ideal(R, std::move(gens)));
}

Module free_module(const RingPtr<PrimeField>& R, std::vector<int> degs = {0}) {
  return Module::free(R, FreeModule(std::move(degs)));
}

std::vector<std::string> strings(const IdealBasis<PrimeField>& I) {
  std::vector<std::string> out;
  for (const auto& g : I.generators) out.push_back(g.to_string());
  return out;
}

/// dim_k Ext^i(M, N)_j from the Hom complex by dense linear algebra in degree j.
long long ext_dimension_oracle(const Complex<PrimeField>& res, int i, const Module& N, int j) {
  const auto& R = res.ring;
  const auto& k = R->field();
  const std::size_t n = R->nvars();
  const std::size_t r0 = N.generators().rank();
  auto Ai = hom_term(res.module(i), N);
  if (Ai.ambient.rank() == 0) return 0;
  long long dim_z = oracle::free_dimension(n, Ai.ambient.degrees, j);
  if (i + 1 <= res.length()) {
    auto next = hom_term(res.module(i + 1), N);
    auto phi = hom_induced(res.differential(i + 1), r0);
    std::vector<Vector<PrimeField>> both = next.relations;
    // degree-j images of A_i are spanned by the images of the degree-j monomial multiples
    long long before = oracle::submodule_dimension(n, next.ambient.degrees, both, k, j);
    for (std::uint32_t p = 0; p < phi.size(); ++p) {
      if (phi[p].is_zero()) continue;
      if (Ai.ambient.degrees[p] > j) continue;
      for (const auto& m : monomials_of_degree(n, static_cast<unsigned>(j - Ai.ambient.degrees[p])))
        both.push_back(scale(*R, phi[p], k.one(), m));
    }
    long long after = oracle::submodule_dimension(n, next.ambient.degrees, both, k, j);
    dim_z -= after - before;
  }
  auto bd = hom_boundaries(res, i, N);
  return dim_z - oracle::submodule_dimension(n, Ai.ambient.degrees, bd, k, j);
}

/// Hilbert function of M by linear algebra on its presentation.
long long hf_oracle(const Module& M, int j) {
  return oracle::quotient_dimension(M.ring()->nvars(), M.generators().degrees, M.relations(), M.ring()->field(), j);
}

void check_resolution(const Module& M, const Complex<PrimeField>& res) {
  CHECK(res.composes_to_zero());
  CHECK(res.is_minimal());
  for (const auto& m : res.maps) CHECK(m.is_homogeneous());
  // Hilbert telescoping: sum (-1)^i HS(F_i) = HS(M), checked degreewise
  const int n = static_cast<int>(res.ring->nvars());
  for (int j = -2; j <= 7; ++j) {
    long long alt = 0;
    for (int k = 0; k <= res.length(); ++k)
      alt += (k % 2 ? -1 : 1) * oracle::free_dimension(static_cast<std::size_t>(n), res.modules[k].degrees, j);
    CHECK(alt == hf_oracle(M, j));
  }
}

Module random_module(const RingPtr<PrimeField>& R, std::mt19937& rng) {
  const int rank = 1 + static_cast<int>(rng() % 2);
  std::vector<int> degs(static_cast<std::size_t>(rank));
  for (auto& d : degs) d = static_cast<int>(rng() % 2);
  std::vector<Vector<PrimeField>> rels;
  const int count = 1 + static_cast<int>(rng() % 3);
  for (int c = 0; c < count; ++c) {
    int d = 2 + static_cast<int>(rng() % 2);
    std::vector<Pp> comps;
    for (int p : degs) comps.push_back(oracle::random_form(R, static_cast<unsigned>(d - p), rng, 0.35));
    rels.push_back(from_components(*R, comps));
  }
  return Module(R, FreeModule(degs), rels);
}

}  // namespace

TEST_CASE("resolution of the residue field is the Koszul complex") {
  for (std::size_t n : {2u, 3u}) {
    std::vector<std::string> vars{"x", "y", "z"};
    vars.resize(n);
    auto R = ring(vars);
    auto k = residue_field(R);
    auto res = minimal_free_resolution(k, 5);
    check_resolution(k, res);
    REQUIRE(res.length() == static_cast<int>(n));
    CHECK_FALSE(res.truncated);
    // Koszul: F_i = R(-i)^binom(n,i)
    long long binom = 1;
    for (int i = 0; i <= static_cast<int>(n); ++i) {
      CHECK(res.modules[i].rank() == static_cast<std::size_t>(binom));
      for (int d : res.modules[i].degrees) CHECK(d == i);
      binom = binom * (static_cast<long long>(n) - i) / (i + 1);
    }
  }
  auto R = ring({"x", "y"});
  CHECK(minimal_free_resolution(free_module(R), 3).length() == 0);
  auto rx = minimal_free_resolution(quotient(R, {"x"}), 3);
  REQUIRE(rx.length() == 1);
  CHECK(rx.modules[1].degrees == std::vector<int>{1});
}

TEST_CASE("projective dimension") {
  auto R = ring({"x", "y"});
  CHECK(projective_dimension(residue_field(R)) == 2);
  CHECK(projective_dimension(free_module(R)) == 0);
  CHECK(projective_dimension(quotient(R, {"x"})) == 1);
  auto A = ring({"x"});
  auto S = A->with_hypersurface(parse_polynomial(A, "x^2"));
  CHECK_FALSE(projective_dimension(residue_field(S)).has_value());
  auto res = minimal_free_resolution(residue_field(S), 4);
  CHECK(res.truncated);
  CHECK(res.composes_to_zero());
  for (int i = 0; i <= 4; ++i) CHECK(res.modules[i].rank() == 1);
}

TEST_CASE("Ext examples") {
  auto R = ring({"x", "y"});
  auto k = residue_field(R);
  auto RR = free_module(R);
  auto N = quotient(R, {"x^2", "x*y"});
  auto e0 = ext(0, RR, N);
  for (int j = -1; j <= 5; ++j) CHECK(e0.hilbert_function(j) == N.hilbert_function(j));
  auto e2 = ext(2, k, RR);
  CHECK(e2.length() == 1);
  CHECK(e2.hilbert_function(-2) == 1);
  auto e1 = ext(1, quotient(R, {"x"}), RR);
  // R/(x) shifted: generator in degree -1
  CHECK(e1.generators().degrees == std::vector<int>{-1});
  for (int j = -3; j <= 4; ++j) CHECK(e1.hilbert_function(j) == (j >= -1 ? 1 : 0));
  CHECK(ext(1, k, RR).is_zero());
  CHECK(ext(0, k, RR).is_zero());
}

TEST_CASE("Ext agrees with linear algebra on the Hom complex") {
  std::mt19937 rng(31);
  for (std::size_t n : {2u, 3u}) {
    std::vector<std::string> vars{"x", "y", "z"};
    vars.resize(n);
    auto R = ring(vars);
    for (int trial = 0; trial < 4; ++trial) {
      auto M = random_module(R, rng);
      auto N = random_module(R, rng);
      auto res = minimal_free_resolution(M, static_cast<int>(n) + 1);
      check_resolution(minimal_presentation(M), res);
      for (int i = 0; i <= static_cast<int>(n); ++i) {
        auto E = ext(i, res, N);
        for (int j = -5; j <= 3; ++j) CHECK(E.hilbert_function(j) == ext_dimension_oracle(res, i, N, j));
        CHECK(ext_is_zero(i, res, N) == E.is_zero());
      }
    }
  }
}

TEST_CASE("Ext is independent of the resolution") {
  auto R = ring({"x", "y", "z"});
  auto M = quotient(R, {"x^2", "x*y", "y*z"});
  auto N = quotient(R, {"x", "z^2"});
  auto res = minimal_free_resolution(M, 4);
  // Second resolution: add the split piece R(-3) --id--> R(-3) in homological degrees 2 and 1.
  Complex<PrimeField> fat = res;
  const int a = 3;
  auto F1 = fat.modules[1];
  auto F2 = fat.modules[2];
  const auto e1 = static_cast<std::uint32_t>(F1.rank());
  const auto e2 = static_cast<std::uint32_t>(F2.rank());
  fat.modules[1].degrees.push_back(a);
  fat.modules[2].degrees.push_back(a);
  // d1 gets a zero column, d2 maps the new generator to the new generator, d3 gains a zero row
  fat.maps[0] = GradedMap<PrimeField>(R, fat.modules[1], fat.modules[0], [&] {
    auto c = res.maps[0].columns;
    c.push_back({});
    return c;
  }());
  fat.maps[1] = GradedMap<PrimeField>(R, fat.modules[2], fat.modules[1], [&] {
    auto c = res.maps[1].columns;
    c.push_back(basis_vector(*R, e1));
    return c;
  }());
  if (res.length() >= 3) fat.maps[2] = GradedMap<PrimeField>(R, fat.modules[3], fat.modules[2], res.maps[2].columns);
  (void)e2;
  REQUIRE(res.length() >= 2);
  CHECK(fat.composes_to_zero());
  CHECK_FALSE(fat.is_minimal());
  for (int i = 0; i <= 3; ++i) {
    auto A = ext(i, res, N);
    auto B = ext(i, fat, N);
    for (int j = -6; j <= 3; ++j) CHECK(A.hilbert_function(j) == B.hilbert_function(j));
  }
}

TEST_CASE("Hom modules") {
  auto R = ring({"x", "y"});
  auto M = quotient(R, {"x^2", "x*y"});
  auto h = hom_module(free_module(R), M);
  for (int j = 0; j <= 5; ++j) CHECK(h.hilbert_function(j) == M.hilbert_function(j));
  CHECK(hom_module(residue_field(R), free_module(R)).is_zero());
  auto rx = quotient(R, {"x"});
  auto e = hom_module(rx, rx);
  for (int j = -1; j <= 5; ++j) CHECK(e.hilbert_function(j) == rx.hilbert_function(j));
}

TEST_CASE("tensor products and quotients") {
  auto R = ring({"x", "y"});
  auto t1 = tensor(free_module(R), quotient(R, {"x^2", "y"}));
  CHECK(t1.hilbert_function(1) == 1);
  CHECK(t1.hilbert_function(2) == 0);
  auto t2 = tensor(quotient(R, {"x"}), quotient(R, {"y"}));
  CHECK(t2.length() == 1);
  auto t3 = tensor(quotient(R, {"x"}), quotient(R, {"x"}));
  for (int j = 0; j < 5; ++j) CHECK(t3.hilbert_function(j) == 1);
  CHECK(quotient_by_ideal(free_module(R), ideal(R, {"x", "y"})).length() == 1);
  CHECK(minimal_presentation(quotient_by_ideal(free_module(R), ideal(R, {"1"}))).generators().rank() == 0);
  auto q = quotient_by_ideal(quotient(R, {"x"}), ideal(R, {"y"}));
  CHECK(q.length() == 1);
}

TEST_CASE("annihilators") {
  auto R = ring({"x", "y"});
  CHECK(strings(annihilator(quotient(R, {"x^2", "x*y"}))) == std::vector<std::string>{"x^2", "x*y"});
  CHECK(annihilator(free_module(R)).generators.empty());
  auto sum = direct_sum<PrimeField>({quotient(R, {"x"}), quotient(R, {"y"})});
  CHECK(strings(annihilator(sum)) == std::vector<std::string>{"x*y"});
  CHECK(strings(annihilator(Module::zero(R))) == std::vector<std::string>{"1"});
}

TEST_CASE("Hilbert series") {
  auto R = ring({"x", "y"});
  auto hs = hilbert_series(free_module(R));
  CHECK(hs.power == 2);
  CHECK(hs.coefficients == std::vector<long long>{1});
  auto hk = hilbert_series(residue_field(R));
  CHECK(hk.power == 0);
  CHECK(hk.coefficients == std::vector<long long>{1});
  auto hx = hilbert_series(quotient(R, {"x"}));
  CHECK(hx.power == 1);
  CHECK(hx.coefficients == std::vector<long long>{1});
  std::mt19937 rng(8);
  auto S = ring({"x", "y", "z"});
  for (int t = 0; t < 6; ++t) {
    auto M = random_module(S, rng);
    auto h = hilbert_series(M);
    for (int j = -1; j <= 8; ++j) CHECK(h.coefficient(j) == M.hilbert_function(j));
  }
  auto A = ring({"x", "y", "z"});
  auto Q = A->with_hypersurface(parse_polynomial(A, "x*y - z^2"));
  auto hq = hilbert_series(free_module(Q));
  for (int j = 0; j <= 6; ++j) CHECK(hq.coefficient(j) == 2 * j + 1);
}

TEST_CASE("depth and Bass numbers") {
  auto R = ring({"x", "y"});
  CHECK(depth(free_module(R)) == 2);
  CHECK(depth(residue_field(R)) == 0);
  CHECK(bass_number(2, free_module(R)) == 1);
  CHECK(bass_number(1, free_module(R)) == 0);
  CHECK(depth(quotient(R, {"x^2", "x*y"})) == 0);
  CHECK_THROWS(depth(Module::zero(R)));
}

TEST_CASE("Auslander-Buchsbaum on random modules") {
  std::mt19937 rng(77);
  for (std::size_t n : {2u, 3u}) {
    std::vector<std::string> vars{"x", "y", "z"};
    vars.resize(n);
    auto R = ring(vars);
    for (int t = 0; t < 6; ++t) {
      auto M = random_module(R, rng);
      if (M.is_zero()) continue;
      auto pd = projective_dimension(M);
      REQUIRE(pd.has_value());
      CHECK(*pd + depth(M) == static_cast<int>(n));
    }
  }
}

TEST_CASE("Krull dimension") {
  auto R = ring({"x", "y"});
  CHECK(krull_dim(quotient(R, {"x"})) == 1);
  CHECK(krull_dim(residue_field(R)) == 0);
  CHECK(krull_dim(quotient(R, {"x*y"})) == 1);
  CHECK(krull_dim(free_module(R)) == 2);
  CHECK(krull_dim(Module::zero(R)) == -1);
  auto S = ring({"x", "y", "z"});
  std::vector<std::vector<std::string>> cyclics{{"x"}, {"y*z"}, {"x^2", "y"}, {"x*y", "x*z"}, {"z^3"}};
  for (const auto& a : cyclics)
    for (const auto& b : cyclics) {
      auto M = quotient(S, a);
      auto N = quotient(S, b);
      auto sum = ideal_sum(annihilator(M), annihilator(N));
      CHECK(krull_dim(tensor(M, N)) == dimension_of_quotient(sum));
    }
}
