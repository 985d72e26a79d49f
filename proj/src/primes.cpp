#include "glc/primes.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace glc {

std::string to_string(PrimeCertificate c) {
  switch (c) {
    case PrimeCertificate::monomial_prime:
      return "monomial-prime";
    case PrimeCertificate::variables_plus_irreducible:
      return "variables-plus-irreducible";
    case PrimeCertificate::declared:
      return "declared";
  }
  return "?";
}

namespace {

constexpr std::uint64_t kRootSearchLimit = 10000;  // p * degree for exhaustive search over F_p
const mpz_class kDivisorLimit("1000000000000");

template <CoefficientField F>
using Coeffs = std::vector<typename F::Element>;

/// Horner evaluation; c[k] is the coefficient of t^k.
template <CoefficientField F>
typename F::Element evaluate(const F& k, const Coeffs<F>& c, const typename F::Element& t) {
  auto acc = k.zero();
  for (std::size_t i = c.size(); i-- > 0;) acc = k.add(k.mul(acc, t), c[i]);
  return acc;
}

/// Divides by (t - r), assuming r is a root.
template <CoefficientField F>
Coeffs<F> deflate(const F& k, const Coeffs<F>& c, const typename F::Element& r) {
  Coeffs<F> q(c.size() - 1, k.zero());
  auto carry = k.zero();
  for (std::size_t i = c.size(); i-- > 1;) {
    carry = k.add(c[i], k.mul(carry, r));
    q[i - 1] = carry;
  }
  return q;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Candidate roots in the field, or nullopt when the search is out of range.
std::optional<std::vector<std::uint64_t>> root_candidates(const PrimeField& k, const Coeffs<PrimeField>& c) {
  const std::uint64_t p = k.characteristic();
  const std::uint64_t degree = c.size() - 1;
  if (degree == 0) return std::vector<std::uint64_t>{};
  if (p > kRootSearchLimit / degree) return std::nullopt;
  std::vector<std::uint64_t> out;
  for (std::uint64_t t = 0; t < p; ++t) out.push_back(t);
  return out;
}

std::optional<std::vector<mpq_class>> root_candidates(const RationalField&, const Coeffs<RationalField>& c) {
  mpz_class denominators = 1;
  for (const auto& a : c) mpz_lcm(denominators.get_mpz_t(), denominators.get_mpz_t(), a.get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& a : c) ints.push_back(mpz_class(a.get_num() * (denominators / a.get_den())));
  std::size_t low = 0;
  while (low < ints.size() && ints[low] == 0) ++low;
  std::vector<mpq_class> out;
  if (low > 0) out.push_back(0);
  if (low >= ints.size() - 1) return out;
  mpz_class a0 = abs(ints[low]);
  mpz_class ae = abs(ints.back());
  if (a0 > kDivisorLimit || ae > kDivisorLimit) return std::nullopt;
  for (const auto& num : positive_divisors(a0))
    for (const auto& den : positive_divisors(ae)) {
      mpq_class r(num, den);
      r.canonicalize();
      out.push_back(r);
      out.push_back(-r);
    }
  return out;
}

/// Roots with multiplicity of a univariate polynomial; the cofactor is left
/// in `c`. nullopt when the search is not supported.
template <CoefficientField F>
std::optional<std::vector<typename F::Element>> roots(const F& k, Coeffs<F>& c) {
  auto candidates = root_candidates(k, c);
  if (!candidates) return std::nullopt;
  std::vector<typename F::Element> found;
  for (const auto& r : *candidates) {
    while (c.size() > 1 && k.is_zero(evaluate(k, c, r))) {
      found.push_back(r);
      c = deflate(k, c, r);
    }
  }
  return found;
}

struct BinaryVars {
  std::size_t u;
  std::size_t v;
};

/// Splits a homogeneous polynomial without monomial content in exactly two
/// variables u < v into linear factors u - r v and a cofactor.
template <CoefficientField F>
struct BinarySplit {
  std::vector<Polynomial<F>> linear;  ///< with multiplicity
  Polynomial<F> cofactor;             ///< monic, degree 0 if fully split
  bool searched = false;              ///< root search was possible
};

template <CoefficientField F>
BinarySplit<F> split_binary(const Polynomial<F>& g, BinaryVars vars) {
  const auto& ring = g.ring();
  const F& k = ring->field();
  const unsigned e = static_cast<unsigned>(g.degree());
  Coeffs<F> c(e + 1, k.zero());
  for (const auto& t : g.terms()) c[t.mono[vars.u]] = t.coeff;
  BinarySplit<F> out{{}, Polynomial<F>(ring), false};
  auto found = roots(k, c);
  auto rebuild = [&](const Coeffs<F>& coeffs) {
    const unsigned deg = static_cast<unsigned>(coeffs.size() - 1);
    std::vector<Term<F>> terms;
    for (unsigned i = 0; i <= deg; ++i) {
      if (k.is_zero(coeffs[i])) continue;
      std::vector<unsigned> ex(ring->nvars(), 0);
      ex[vars.u] = i;
      ex[vars.v] = deg - i;
      terms.push_back({Monomial(ex), coeffs[i]});
    }
    return Polynomial<F>(ring, std::move(terms)).monic();
  };
  if (!found) {
    out.cofactor = g.monic();
    return out;
  }
  out.searched = true;
  for (const auto& r : *found) {
    std::vector<Term<F>> terms;
    terms.push_back({Monomial::variable(vars.u), k.one()});
    if (!k.is_zero(r)) terms.push_back({Monomial::variable(vars.v), k.neg(r)});
    out.linear.push_back(Polynomial<F>(ring, std::move(terms)));
  }
  out.cofactor = rebuild(c);
  return out;
}

template <CoefficientField F>
unsigned support_of(const Polynomial<F>& g) {
  unsigned mask = 0;
  for (const auto& t : g.terms()) mask |= t.mono.support();
  return mask;
}

template <CoefficientField F>
std::optional<BinaryVars> binary_vars(unsigned mask) {
  if (std::popcount(mask) != 2) return std::nullopt;
  std::size_t u = static_cast<std::size_t>(std::countr_zero(mask));
  std::size_t v = static_cast<std::size_t>(std::countr_zero(mask & ~(1u << u)));
  return BinaryVars{u, v};
}

/// Monomial content removed: g = x^c * rest.
template <CoefficientField F>
std::pair<Monomial, Polynomial<F>> strip_content(const Polynomial<F>& g) {
  const std::size_t n = g.ring()->nvars();
  std::vector<unsigned> low(n, ~0u);
  for (const auto& t : g.terms())
    for (std::size_t i = 0; i < n; ++i) low[i] = std::min(low[i], t.mono[i]);
  Monomial content(low);
  std::vector<Term<F>> rest;
  for (const auto& t : g.terms()) rest.push_back({t.mono.quotient(content), t.coeff});
  return {content, Polynomial<F>::from_sorted(g.ring(), std::move(rest))};
}

/// Irreducibility of a homogeneous form in at most two variables; nullopt when undecided.
template <CoefficientField F>
std::optional<bool> binary_form_irreducible(const Polynomial<F>& q) {
  if (q.degree() == 1) return true;
  auto [content, rest] = strip_content(q);
  if (!content.is_one()) return false;
  auto vars = binary_vars<F>(support_of(rest));
  if (!vars) return false;
  auto split = split_binary(rest, *vars);
  if (!split.searched) return std::nullopt;
  if (!split.linear.empty()) return false;
  if (q.degree() <= 3) return true;
  return std::nullopt;
}

/// Rank of the symmetric matrix of a quadratic form (char != 2).
template <CoefficientField F>
std::size_t quadric_rank(const Polynomial<F>& q) {
  const F& k = q.ring()->field();
  const std::size_t n = q.ring()->nvars();
  std::vector<Coeffs<F>> B(n, Coeffs<F>(n, k.zero()));
  for (const auto& t : q.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      for (unsigned e = 0; e < t.mono[i]; ++e) idx.push_back(i);
    if (idx[0] == idx[1]) {
      B[idx[0]][idx[0]] = k.add(B[idx[0]][idx[0]], k.add(t.coeff, t.coeff));
    } else {
      B[idx[0]][idx[1]] = k.add(B[idx[0]][idx[1]], t.coeff);
      B[idx[1]][idx[0]] = k.add(B[idx[1]][idx[0]], t.coeff);
    }
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t piv = rank;
    while (piv < n && k.is_zero(B[piv][col])) ++piv;
    if (piv == n) continue;
    std::swap(B[piv], B[rank]);
    auto inv = k.inv(B[rank][col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == rank || k.is_zero(B[r][col])) continue;
      auto f = k.mul(B[r][col], inv);
      for (std::size_t j = 0; j < n; ++j) B[r][j] = k.sub(B[r][j], k.mul(f, B[rank][j]));
    }
    ++rank;
  }
  return rank;
}

template <CoefficientField F>
bool is_monomial_ideal(const IdealBasis<F>& gb) {
  return std::all_of(gb.generators.begin(), gb.generators.end(), [](const Polynomial<F>& g) { return g.size() == 1; });
}

template <CoefficientField F>
IdealBasis<F> with_generator(const IdealBasis<F>& gb, const Polynomial<F>& h) {
  auto gens = gb.generators;
  gens.push_back(h);
  return buchberger(make_ideal(gb.ring, std::move(gens)));
}

/// I + (f) in the polynomial ring underneath, as a reduced basis.
template <CoefficientField F>
IdealBasis<F> base_ideal(const IdealBasis<F>& I) {
  auto S = I.ring->ambient();
  std::vector<Polynomial<F>> gens;
  for (const auto& g : I.generators) gens.push_back(g.in_ring(S));
  if (I.ring->has_hypersurface()) gens.push_back(I.ring->hypersurface().in_ring(S));
  return buchberger(make_ideal(S, std::move(gens)));
}

/// Shape of a reduced basis of a prime of the polynomial ring, if recognized.
template <CoefficientField F>
std::optional<PrimeCertificate> certify_shape(const IdealBasis<F>& reduced) {
  const auto& gens = reduced.generators;
  if (gens.size() == 1 && gens[0].is_constant()) return std::nullopt;
  std::vector<const Polynomial<F>*> higher;
  bool variables_only = true;
  for (const auto& g : gens) {
    if (g.degree() == 1) {
      if (g.size() != 1) variables_only = false;
    } else {
      higher.push_back(&g);
    }
  }
  if (higher.empty())
    return variables_only ? PrimeCertificate::monomial_prime : PrimeCertificate::variables_plus_irreducible;
  if (higher.size() > 1) return std::nullopt;
  const auto& q = *higher[0];
  auto binary = std::popcount(support_of(q)) <= 2 ? binary_form_irreducible(q) : std::nullopt;
  if (binary && *binary) return PrimeCertificate::variables_plus_irreducible;
  if (q.degree() == 2 && reduced.ring->field().characteristic() != 2 && quadric_rank(q) >= 3)
    return PrimeCertificate::declared;
  return std::nullopt;
}

template <CoefficientField F>
class MinimalPrimeSearch {
 public:
  void run(const IdealBasis<F>& gb) {
    if (gb.generators.size() == 1 && gb.generators[0].is_constant()) return;
    if (is_monomial_ideal(gb)) {
      std::vector<Monomial> leads;
      for (const auto& g : gb.generators) leads.push_back(g.leading_term().mono);
      for (const auto& cover : monomial_minimal_primes(leads, gb.ring->nvars())) {
        std::vector<Polynomial<F>> vars;
        for (auto i : cover) vars.push_back(Polynomial<F>::variable(gb.ring, i));
        found.push_back(buchberger(make_ideal(gb.ring, std::move(vars))));
      }
      return;
    }
    if (certify_shape(gb)) {
      found.push_back(gb);
      return;
    }
    for (const auto& g : gb.generators) {
      auto fac = supported_factors(g);
      if (!fac.reducible) continue;
      for (const auto& h : fac.factors) run(with_generator(gb, h));
      return;
    }
    complete = false;
  }

  std::vector<IdealBasis<F>> found;
  bool complete = true;
};

template <CoefficientField F>
void sort_primes(std::vector<PrimeIdeal<F>>& primes) {
  std::sort(primes.begin(), primes.end(), [](const PrimeIdeal<F>& a, const PrimeIdeal<F>& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.to_string() < b.to_string();
  });
}

}  // namespace

template <CoefficientField F>
std::string PrimeIdeal<F>::to_string() const {
  std::optional<Polynomial<F>> f;
  if (basis.ring->has_hypersurface()) f = basis.ring->hypersurface().monic();
  std::string s;
  for (const auto& g : basis.generators) {
    if (f && g == *f) continue;
    s += (s.empty() ? "" : ", ") + g.to_string();
  }
  return "(" + (s.empty() ? std::string("0") : s) + ")";
}

template <CoefficientField F>
int dim_of_ideal(const IdealBasis<F>& I) {
  return dimension_of_quotient(I);
}

template <CoefficientField F>
Factorization<F> supported_factors(const Polynomial<F>& g) {
  Factorization<F> out;
  if (g.is_constant()) return out;
  auto [content, rest] = strip_content(g);
  bool repeated = false;
  for (std::size_t i = 0; i < g.ring()->nvars(); ++i) {
    if (content[i] == 0) continue;
    out.factors.push_back(Polynomial<F>::variable(g.ring(), i));
    if (content[i] > 1) repeated = true;
  }
  if (!rest.is_constant()) {
    auto vars = binary_vars<F>(support_of(rest));
    if (rest.degree() > 1 && vars) {
      auto split = split_binary(rest, *vars);
      for (const auto& l : split.linear) {
        if (std::find(out.factors.begin(), out.factors.end(), l) != out.factors.end()) repeated = true;
        else out.factors.push_back(l);
      }
      if (!split.cofactor.is_constant()) out.factors.push_back(split.cofactor);
    } else {
      out.factors.push_back(rest.monic());
    }
  }
  out.reducible = out.factors.size() >= 2 || repeated;
  return out;
}

template <CoefficientField F>
std::optional<PrimeIdeal<F>> certify_prime(const IdealBasis<F>& reduced) {
  auto shape = certify_shape(base_ideal(reduced));
  if (!shape) return std::nullopt;
  PrimeIdeal<F> p{reduced, 0, *shape};
  p.basis.groebner = true;
  p.height = reduced.ring->dimension() - dim_of_ideal(reduced);
  return p;
}

template <CoefficientField F>
bool certificate_holds(const PrimeIdeal<F>& p) {
  auto again = certify_prime(p.basis);
  return again && again->certificate == p.certificate && again->height == p.height;
}

std::vector<std::vector<std::size_t>> monomial_minimal_primes(const std::vector<Monomial>& generators,
                                                              std::size_t nvars) {
  std::vector<unsigned> supports;
  for (const auto& m : generators) {
    if (m.is_one()) return {};
    supports.push_back(m.support());
  }
  std::sort(supports.begin(), supports.end(), [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
  std::set<unsigned> covers;
  auto rec = [&](auto&& self, std::size_t index, unsigned chosen) -> void {
    if (index == supports.size()) {
      covers.insert(chosen);
      return;
    }
    if (supports[index] & chosen) {
      self(self, index + 1, chosen);
      return;
    }
    for (std::size_t v = 0; v < nvars; ++v)
      if (supports[index] & (1u << v)) self(self, index + 1, chosen | (1u << v));
  };
  rec(rec, 0, 0);
  std::vector<std::vector<std::size_t>> out;
  for (unsigned c : covers) {
    bool minimal = std::none_of(covers.begin(), covers.end(), [&](unsigned d) { return d != c && (d & c) == d; });
    if (!minimal) continue;
    std::vector<std::size_t> vars;
    for (std::size_t v = 0; v < nvars; ++v)
      if (c & (1u << v)) vars.push_back(v);
    out.push_back(std::move(vars));
  }
  return out;
}

template <CoefficientField F>
bool prime_contained(const PrimeIdeal<F>& p, const PrimeIdeal<F>& q) {
  return ideal_subset(p.basis, q.basis);
}

template <CoefficientField F>
AssReport<F> minimal_primes(const IdealBasis<F>& I) {
  MinimalPrimeSearch<F> search;
  search.run(base_ideal(I));
  AssReport<F> out;
  out.complete = search.complete;
  for (const auto& base : search.found) {
    std::vector<Polynomial<F>> gens;
    for (const auto& g : base.generators) gens.push_back(g.in_ring(I.ring));
    auto p = certify_prime(buchberger(make_ideal(I.ring, std::move(gens))));
    if (!p) {
      out.complete = false;
      continue;
    }
    if (std::find(out.primes.begin(), out.primes.end(), *p) == out.primes.end()) out.primes.push_back(std::move(*p));
  }
  std::vector<PrimeIdeal<F>> minimal;
  for (const auto& p : out.primes) {
    bool dominated = std::any_of(out.primes.begin(), out.primes.end(),
                                 [&](const PrimeIdeal<F>& q) { return !(q == p) && prime_contained(q, p); });
    if (!dominated) minimal.push_back(p);
  }
  out.primes = std::move(minimal);
  sort_primes(out.primes);
  return out;
}

template <CoefficientField F>
AssReport<F> associated_primes(const PresentedModule<F>& M) {
  AssReport<F> out;
  if (M.is_zero()) return out;
  const auto& ring = M.ring();
  const int d = ring->dimension();
  auto R = PresentedModule<F>::free(ring, FreeModule::of_rank(1));
  auto res = minimal_free_resolution(M, d + 1);
  for (int c = 0; c <= d; ++c) {
    if (ext_is_zero(c, res, R)) continue;
    auto E = ext(c, res, R);
    auto mins = minimal_primes(annihilator(E));
    out.complete = out.complete && mins.complete;
    for (auto& p : mins.primes)
      if (p.height == c && std::find(out.primes.begin(), out.primes.end(), p) == out.primes.end())
        out.primes.push_back(std::move(p));
  }
  sort_primes(out.primes);
  return out;
}

template <CoefficientField F>
bool supp_contains(const PresentedModule<F>& N, const PrimeIdeal<F>& p) {
  const auto& ann = annihilator(N);
  for (const auto& g : ann.generators)
    if (!normal_form(g, p.basis).is_zero()) return false;
  return true;
}

#define GLC_INSTANTIATE(F)                                                            \
  template struct PrimeIdeal<F>;                                                      \
  template int dim_of_ideal<F>(const IdealBasis<F>&);                                 \
  template Factorization<F> supported_factors<F>(const Polynomial<F>&);               \
  template std::optional<PrimeIdeal<F>> certify_prime<F>(const IdealBasis<F>&);       \
  template bool certificate_holds<F>(const PrimeIdeal<F>&);                           \
  template AssReport<F> minimal_primes<F>(const IdealBasis<F>&);                      \
  template AssReport<F> associated_primes<F>(const PresentedModule<F>&);              \
  template bool supp_contains<F>(const PresentedModule<F>&, const PrimeIdeal<F>&);    \
  template bool prime_contained<F>(const PrimeIdeal<F>&, const PrimeIdeal<F>&);

GLC_INSTANTIATE(PrimeField)
GLC_INSTANTIATE(RationalField)

}  // namespace glc
