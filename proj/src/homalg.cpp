#include "glc/homalg.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

namespace glc {

namespace {

template <CoefficientField F>
std::vector<int> degrees_of(const std::vector<Vector<F>>& vs, const FreeModule& ambient) {
  std::vector<int> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(vector_degree(v, ambient.degrees));
  return out;
}

template <CoefficientField F>
std::vector<Vector<F>> nonzero_reduced(const Ring<F>& ring, const std::vector<Vector<F>>& vs) {
  std::vector<Vector<F>> out;
  for (const auto& v : vs) {
    auto r = reduce_mod_hypersurface(ring, v);
    if (!r.is_zero()) out.push_back(std::move(r));
  }
  return out;
}

/// Keeps the coordinates < k of each vector, dropping zero results.
template <CoefficientField F>
std::vector<Vector<F>> head_coordinates(const std::vector<Vector<F>>& vs, std::size_t k) {
  std::vector<Vector<F>> out;
  for (const auto& v : vs) {
    Vector<F> h;
    for (const auto& t : v.terms)
      if (t.pos < k) h.terms.push_back(t);
    if (!h.is_zero()) out.push_back(std::move(h));
  }
  return out;
}

long long binomial(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// GradedMap

template <CoefficientField F>
GradedMap<F>::GradedMap(RingPtr<F> r, FreeModule src, FreeModule tgt, std::vector<Vector<F>> cols)
    : ring(std::move(r)), source(std::move(src)), target(std::move(tgt)), columns(std::move(cols)) {
  if (columns.size() != source.rank()) throw std::invalid_argument("column count does not match source rank");
  for (const auto& c : columns)
    for (const auto& t : c.terms)
      if (t.pos >= target.rank()) throw std::out_of_range("matrix entry outside target module");
}

template <CoefficientField F>
GradedMap<F> GradedMap<F>::zero(RingPtr<F> r, FreeModule src, FreeModule tgt) {
  std::vector<Vector<F>> cols(src.rank());
  return GradedMap(std::move(r), std::move(src), std::move(tgt), std::move(cols));
}

template <CoefficientField F>
Polynomial<F> GradedMap<F>::entry(std::size_t row, std::size_t col) const {
  return component(ring, columns.at(col), static_cast<std::uint32_t>(row));
}

template <CoefficientField F>
Vector<F> GradedMap<F>::apply(const Vector<F>& v) const {
  Vector<F> out;
  for (const auto& t : v.terms) out = add_multiple(*ring, out, t.coeff, t.mono, columns.at(t.pos));
  return out;
}

template <CoefficientField F>
bool GradedMap<F>::is_homogeneous() const {
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& t : columns[c].terms)
      if (term_degree(target.degrees, t.pos, t.mono) != source.degrees[c]) return false;
  return true;
}

template <CoefficientField F>
bool GradedMap<F>::is_minimal() const {
  for (const auto& c : columns)
    for (const auto& t : c.terms)
      if (t.mono.is_one()) return false;
  return true;
}

template <CoefficientField F>
std::string GradedMap<F>::to_string() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < target.rank(); ++r) {
    out << "[";
    for (std::size_t c = 0; c < source.rank(); ++c) out << (c ? ", " : "") << entry(r, c).to_string();
    out << "]\n";
  }
  return out.str();
}

template <CoefficientField F>
GradedMap<F> compose(const GradedMap<F>& a, const GradedMap<F>& b) {
  if (!(a.source == b.target)) throw std::invalid_argument("maps are not composable");
  std::vector<Vector<F>> cols;
  for (const auto& c : b.columns) cols.push_back(a.apply(c));
  return GradedMap<F>(a.ring, b.source, a.target, std::move(cols));
}

// ---------------------------------------------------------------------------
// HilbertSeries

long long HilbertSeries::coefficient(int j) const {
  long long total = 0;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    long long e = j - shift - static_cast<long long>(k);
    if (e < 0) continue;
    total += power == 0 ? (e == 0 ? coefficients[k] : 0) : coefficients[k] * binomial(e + power - 1, power - 1);
  }
  return total;
}

HilbertSeries HilbertSeries::reduced() const {
  HilbertSeries h = *this;
  while (!h.coefficients.empty() && h.coefficients.back() == 0) h.coefficients.pop_back();
  std::size_t lead = 0;
  while (lead < h.coefficients.size() && h.coefficients[lead] == 0) ++lead;
  h.coefficients.erase(h.coefficients.begin(), h.coefficients.begin() + static_cast<long>(lead));
  h.shift += static_cast<int>(lead);
  if (h.coefficients.empty()) {
    h.shift = 0;
    h.power = 0;
    return h;
  }
  for (;;) {
    long long at_one = 0;
    for (auto c : h.coefficients) at_one += c;
    if (h.power == 0 || at_one != 0) break;
    std::vector<long long> q(h.coefficients.size() - 1);
    long long acc = 0;
    for (std::size_t k = 0; k + 1 < h.coefficients.size(); ++k) {
      acc += h.coefficients[k];
      q[k] = acc;
    }
    h.coefficients = std::move(q);
    --h.power;
  }
  return h;
}

std::string HilbertSeries::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    long long c = coefficients[k];
    if (c == 0) continue;
    int e = shift + static_cast<int>(k);
    out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    long long a = c < 0 ? -c : c;
    if (e == 0) out << a;
    else {
      if (a != 1) out << a << "*";
      out << "t";
      if (e != 1) out << "^" << e;
    }
    first = false;
  }
  if (first) out << "0";
  if (power > 0) out << " / (1-t)^" << power;
  return out.str();
}

bool operator==(const HilbertSeries& a, const HilbertSeries& b) {
  auto x = a.reduced();
  auto y = b.reduced();
  return x.shift == y.shift && x.power == y.power && x.coefficients == y.coefficients;
}

// ---------------------------------------------------------------------------
// Complex

template <CoefficientField F>
GradedMap<F> Complex<F>::differential(int k) const {
  if (k >= 1 && k <= static_cast<int>(maps.size())) return maps[k - 1];
  return GradedMap<F>::zero(ring, module(k), module(k - 1));
}

template <CoefficientField F>
bool Complex<F>::composes_to_zero() const {
  for (std::size_t k = 1; k < maps.size(); ++k) {
    auto c = compose(maps[k - 1], maps[k]);
    for (const auto& col : c.columns)
      if (!reduce_mod_hypersurface(*ring, col).is_zero()) return false;
  }
  return true;
}

template <CoefficientField F>
bool Complex<F>::is_minimal() const {
  return std::all_of(maps.begin(), maps.end(), [](const GradedMap<F>& m) { return m.is_minimal(); });
}

template <CoefficientField F>
std::string Complex<F>::betti_table() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < modules.size(); ++k) {
    std::map<int, int> counts;
    for (int d : modules[k].degrees) ++counts[d];
    out << k << ":";
    for (auto [d, c] : counts) out << " R(" << -d << ")^" << c;
    out << "\n";
  }
  if (truncated) out << "...\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// PresentedModule

template <CoefficientField F>
PresentedModule<F>::PresentedModule(GradedMap<F> presentation)
    : PresentedModule(presentation.ring, presentation.target, presentation.columns) {
  if (!presentation.is_homogeneous()) throw std::invalid_argument("inhomogeneous presentation matrix");
}

template <CoefficientField F>
PresentedModule<F>::PresentedModule(RingPtr<F> ring, FreeModule generators, std::vector<Vector<F>> relations)
    : ring_(std::move(ring)), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  for (auto& r : relations) {
    if (r.is_zero()) continue;
    for (const auto& t : r.terms)
      if (t.pos >= generators_.rank()) throw std::out_of_range("relation outside the generator module");
    if (!is_homogeneous(r, generators_.degrees)) throw std::invalid_argument("inhomogeneous relation");
    relations_.push_back(std::move(r));
  }
}

template <CoefficientField F>
PresentedModule<F> PresentedModule<F>::zero(RingPtr<F> ring) {
  return PresentedModule(std::move(ring), FreeModule{}, {});
}

template <CoefficientField F>
PresentedModule<F> PresentedModule<F>::free(RingPtr<F> ring, FreeModule generators) {
  return PresentedModule(std::move(ring), std::move(generators), {});
}

template <CoefficientField F>
PresentedModule<F> PresentedModule<F>::cyclic(const IdealBasis<F>& ideal, int degree) {
  std::vector<Vector<F>> rels;
  for (const auto& g : ideal.generators) {
    if (!g.is_homogeneous()) throw std::invalid_argument("inhomogeneous ideal generator " + g.to_string());
    rels.push_back(unit_vector(g, 0));
  }
  return PresentedModule(ideal.ring, FreeModule(std::vector<int>{degree}), std::move(rels));
}

template <CoefficientField F>
FreeModule PresentedModule<F>::relation_degrees() const {
  return FreeModule(degrees_of(relations_, generators_));
}

template <CoefficientField F>
GradedMap<F> PresentedModule<F>::presentation() const {
  return GradedMap<F>(ring_, relation_degrees(), generators_, relations_);
}

template <CoefficientField F>
const GroebnerBasis<F>& PresentedModule<F>::relation_basis() const {
  {
    std::lock_guard lock(cache_->mutex);
    if (cache_->basis) return *cache_->basis;
  }
  auto gb = groebner_basis(ring_, generators_, relations_);
  std::lock_guard lock(cache_->mutex);
  if (!cache_->basis) cache_->basis.emplace(std::move(gb));
  return *cache_->basis;
}

template <CoefficientField F>
bool PresentedModule<F>::is_zero() const {
  return relation_basis().is_everything();
}

template <CoefficientField F>
long long PresentedModule<F>::hilbert_function(int degree) const {
  return relation_basis().hilbert_function(degree);
}

template <CoefficientField F>
std::optional<long long> PresentedModule<F>::length() const {
  const auto& gb = relation_basis();
  if (!gb.finite_colength()) return std::nullopt;
  return gb.colength();
}

template <CoefficientField F>
std::pair<int, int> PresentedModule<F>::degree_window(int slack) const {
  if (generators_.rank() == 0) return {0, -1};
  int lo = *std::min_element(generators_.degrees.begin(), generators_.degrees.end());
  int hi = *std::max_element(generators_.degrees.begin(), generators_.degrees.end());
  for (int d : relation_degrees().degrees) hi = std::max(hi, d);
  return {lo - slack, hi + slack};
}

template <CoefficientField F>
std::string PresentedModule<F>::to_string() const {
  std::ostringstream out;
  out << "cokernel over " << ring_->describe() << ", generator degrees (";
  for (std::size_t i = 0; i < generators_.rank(); ++i) out << (i ? "," : "") << generators_.degrees[i];
  out << ")\n" << presentation().to_string();
  return out.str();
}

template <CoefficientField F>
const IdealBasis<F>& PresentedModule<F>::cached_annihilator() const {
  {
    std::lock_guard lock(cache_->mutex);
    if (cache_->annihilator) return *cache_->annihilator;
  }
  IdealBasis<F> ann{ring_, {}, false};
  if (is_zero()) {
    ann = buchberger(make_ideal(ring_, {Polynomial<F>::constant(ring_, ring_->field().one())}));
  } else if (generators_.rank() == 1) {
    std::vector<Polynomial<F>> gens;
    for (const auto& r : relations_) gens.push_back(component(ring_, r, 0));
    ann = buchberger(make_ideal(ring_, std::move(gens)));
  } else {
    std::optional<IdealBasis<F>> acc;
    for (std::uint32_t k = 0; k < generators_.rank(); ++k) {
      auto c = module_colon(ring_, generators_, relations_, basis_vector(*ring_, k));
      acc = acc ? ideal_intersection(*acc, c) : c;
    }
    ann = buchberger(*acc);
  }
  std::lock_guard lock(cache_->mutex);
  if (!cache_->annihilator) cache_->annihilator.emplace(std::move(ann));
  return *cache_->annihilator;
}

template <CoefficientField F>
const HilbertSeries& PresentedModule<F>::cached_hilbert_series() const {
  {
    std::lock_guard lock(cache_->mutex);
    if (cache_->series) return *cache_->series;
  }
  // Resolve over the polynomial ring: M is presented there by [P | f*I].
  auto S = ring_->ambient();
  std::vector<Vector<F>> rels = relations_;
  if (ring_->has_hypersurface()) {
    auto f = ring_->hypersurface().in_ring(S);
    for (std::uint32_t k = 0; k < generators_.rank(); ++k) rels.push_back(unit_vector(f, k));
  }
  PresentedModule<F> over_s(S, generators_, std::move(rels));
  auto res = minimal_free_resolution(over_s, static_cast<int>(S->nvars()) + 1);
  std::map<int, long long> numerator;
  for (int k = 0; k <= res.length(); ++k)
    for (int d : res.modules[k].degrees) numerator[d] += (k % 2 == 0) ? 1 : -1;
  HilbertSeries hs;
  hs.power = static_cast<int>(S->nvars());
  if (!numerator.empty()) {
    hs.shift = numerator.begin()->first;
    hs.coefficients.assign(static_cast<std::size_t>(numerator.rbegin()->first - hs.shift + 1), 0);
    for (auto [d, c] : numerator) hs.coefficients[static_cast<std::size_t>(d - hs.shift)] += c;
  }
  hs = hs.reduced();
  std::lock_guard lock(cache_->mutex);
  if (!cache_->series) cache_->series.emplace(std::move(hs));
  return *cache_->series;
}

// ---------------------------------------------------------------------------
// Presentations and resolutions

template <CoefficientField F>
PresentedModule<F> minimal_presentation(const PresentedModule<F>& M) {
  const auto& ring = M.ring();
  const F& k = ring->field();
  std::vector<int> degs = M.generators().degrees;
  std::vector<Vector<F>> rels = nonzero_reduced(*ring, M.relations());
  for (;;) {
    std::optional<std::pair<std::size_t, std::uint32_t>> unit;
    for (std::size_t c = 0; c < rels.size() && !unit; ++c)
      for (const auto& t : rels[c].terms)
        if (t.mono.is_one()) {
          unit = {c, t.pos};
          break;
        }
    if (!unit) break;
    const auto [c, r] = *unit;
    const Vector<F> pivot = rels[c];
    const auto u = component(ring, pivot, r).leading_term().coeff;
    const auto minus_inv = k.neg(k.inv(u));
    std::vector<Vector<F>> next;
    for (std::size_t j = 0; j < rels.size(); ++j) {
      if (j == c) continue;
      auto p = component(ring, rels[j], r);
      Vector<F> v = rels[j];
      if (!p.is_zero()) v = add(*ring, v, multiply(*ring, p.scaled(minus_inv), pivot));
      Vector<F> shifted;
      for (const auto& t : v.terms) {
        if (t.pos == r) continue;
        shifted.terms.push_back({t.pos > r ? t.pos - 1 : t.pos, t.mono, t.coeff});
      }
      shifted = reduce_mod_hypersurface(*ring, shifted);
      if (!shifted.is_zero()) next.push_back(std::move(shifted));
    }
    degs.erase(degs.begin() + r);
    rels = std::move(next);
  }
  FreeModule gens(degs);
  auto minimal = minimal_generators(ring, gens, rels);
  return PresentedModule<F>(ring, gens, std::move(minimal));
}

template <CoefficientField F>
Complex<F> resolve_keeping_generators(const PresentedModule<F>& M, int max_length) {
  if (max_length < 0) throw std::invalid_argument("resolution length must be nonnegative");
  const auto& ring = M.ring();
  Complex<F> C;
  C.ring = ring;
  C.modules.push_back(M.generators());
  FreeModule target = M.generators();
  auto cols = minimal_generators(ring, target, M.relations());
  int k = 0;
  while (!cols.empty()) {
    if (k + 1 > max_length) {
      C.truncated = true;
      break;
    }
    FreeModule source(degrees_of(cols, target));
    auto gb = std::make_shared<const GroebnerBasis<F>>(tracked_groebner_basis(ring, target, cols));
    auto candidates = syzygies_of(*gb, cols);
    C.modules.push_back(source);
    C.maps.emplace_back(ring, source, target, cols);
    C.bases.push_back(gb);
    cols = minimal_generators(ring, source, candidates);
    target = source;
    ++k;
  }
  return C;
}

template <CoefficientField F>
Complex<F> minimal_free_resolution(const PresentedModule<F>& M, int max_length) {
  return resolve_keeping_generators(minimal_presentation(M), max_length);
}

template <CoefficientField F>
std::optional<int> projective_dimension(const PresentedModule<F>& M) {
  const auto& ring = M.ring();
  const int limit = ring->has_hypersurface() ? ring->dimension() : static_cast<int>(ring->nvars());
  auto res = minimal_free_resolution(M, limit);
  if (res.truncated) return std::nullopt;
  return res.length();
}

// ---------------------------------------------------------------------------
// Hom complexes and Ext

template <CoefficientField F>
HomTerm<F> hom_term(const FreeModule& free, const PresentedModule<F>& N) {
  const auto& g = N.generators();
  const std::size_t r0 = g.rank();
  HomTerm<F> out;
  for (std::size_t b = 0; b < free.rank(); ++b)
    for (std::size_t l = 0; l < r0; ++l) out.ambient.degrees.push_back(g.degrees[l] - free.degrees[b]);
  for (std::size_t b = 0; b < free.rank(); ++b)
    for (const auto& q : N.relations()) out.relations.push_back(shift_positions(q, static_cast<std::uint32_t>(b * r0)));
  return out;
}

template <CoefficientField F>
std::vector<Vector<F>> hom_induced(const GradedMap<F>& d, std::size_t n_rank) {
  const std::size_t rows = d.target.rank();
  std::vector<std::vector<VectorTerm<F>>> terms(rows * n_rank);
  for (std::size_t b = 0; b < d.columns.size(); ++b)
    for (const auto& t : d.columns[b].terms)
      for (std::size_t l = 0; l < n_rank; ++l)
        terms[t.pos * n_rank + l].push_back({static_cast<std::uint32_t>(b * n_rank + l), t.mono, t.coeff});
  std::vector<Vector<F>> out;
  out.reserve(terms.size());
  for (auto& t : terms) out.push_back(make_vector(*d.ring, std::move(t)));
  return out;
}

template <CoefficientField F>
PresentedModule<F> subquotient(const RingPtr<F>& ring, const FreeModule& ambient, const std::vector<Vector<F>>& K,
                               const std::vector<Vector<F>>& B) {
  auto gens = nonzero_reduced(*ring, K);
  if (gens.empty()) return PresentedModule<F>::zero(ring);
  std::vector<Vector<F>> cols = gens;
  std::vector<int> degs = degrees_of(gens, ambient);
  for (const auto& b : B) {
    if (b.is_zero()) continue;
    cols.push_back(b);
    degs.push_back(vector_degree(b, ambient.degrees));
  }
  auto syz = syzygies_of(ring, ambient, cols, FreeModule(degs));
  FreeModule gen_module(degrees_of(gens, ambient));
  PresentedModule<F> raw(ring, gen_module, head_coordinates(syz, gens.size()));
  return minimal_presentation(raw);
}

template <CoefficientField F>
std::vector<Vector<F>> hom_cycles(const Complex<F>& resolution, int i, const PresentedModule<F>& N) {
  const auto& ring = resolution.ring;
  const std::size_t r0 = N.generators().rank();
  auto Ai = hom_term(resolution.module(i), N);
  if (Ai.ambient.rank() == 0) return {};
  if (i + 1 > resolution.length()) {
    if (resolution.truncated) throw InsufficientResolution("resolution too short for Ext^" + std::to_string(i));
    std::vector<Vector<F>> all;
    for (std::uint32_t p = 0; p < Ai.ambient.rank(); ++p) all.push_back(basis_vector(*ring, p));
    return all;
  }
  auto next = hom_term(resolution.module(i + 1), N);
  auto phi = hom_induced(resolution.differential(i + 1), r0);
  std::vector<Vector<F>> cols = phi;
  std::vector<int> degs = Ai.ambient.degrees;
  for (const auto& b : next.relations) {
    cols.push_back(b);
    degs.push_back(vector_degree(b, next.ambient.degrees));
  }
  auto syz = syzygies_of(ring, next.ambient, cols, FreeModule(degs));
  return minimal_generators(ring, Ai.ambient, head_coordinates(syz, phi.size()));
}

template <CoefficientField F>
std::vector<Vector<F>> hom_boundaries(const Complex<F>& resolution, int i, const PresentedModule<F>& N) {
  auto Ai = hom_term(resolution.module(i), N);
  std::vector<Vector<F>> out = Ai.relations;
  if (i >= 1 && i <= resolution.length()) {
    for (auto& v : hom_induced(resolution.differential(i), N.generators().rank()))
      if (!v.is_zero()) out.push_back(std::move(v));
  }
  return out;
}

template <CoefficientField F>
PresentedModule<F> ext(int i, const Complex<F>& resolution, const PresentedModule<F>& N) {
  if (i < 0) throw std::invalid_argument("Ext index must be nonnegative");
  auto Ai = hom_term(resolution.module(i), N);
  auto K = hom_cycles(resolution, i, N);
  return subquotient(resolution.ring, Ai.ambient, K, hom_boundaries(resolution, i, N));
}

template <CoefficientField F>
PresentedModule<F> ext(int i, const PresentedModule<F>& M, const PresentedModule<F>& N) {
  return ext(i, minimal_free_resolution(M, i + 1), N);
}

template <CoefficientField F>
bool ext_is_zero(int i, const Complex<F>& resolution, const PresentedModule<F>& N) {
  auto K = hom_cycles(resolution, i, N);
  if (K.empty()) return true;
  auto Ai = hom_term(resolution.module(i), N);
  auto gb = groebner_basis(resolution.ring, Ai.ambient, hom_boundaries(resolution, i, N));
  return std::all_of(K.begin(), K.end(), [&](const Vector<F>& v) { return gb.contains(v); });
}

template <CoefficientField F>
PresentedModule<F> hom_module(const PresentedModule<F>& N, const PresentedModule<F>& M) {
  return ext(0, minimal_free_resolution(N, 1), M);
}

// ---------------------------------------------------------------------------
// Constructions

template <CoefficientField F>
PresentedModule<F> tensor(const PresentedModule<F>& M, const PresentedModule<F>& N) {
  const auto& ring = M.ring();
  const auto& f0 = M.generators();
  const auto& g0 = N.generators();
  const std::size_t s = g0.rank();
  std::vector<int> degs;
  for (std::size_t a = 0; a < f0.rank(); ++a)
    for (std::size_t l = 0; l < s; ++l) degs.push_back(f0.degrees[a] + g0.degrees[l]);
  std::vector<Vector<F>> rels;
  for (const auto& p : M.relations())
    for (std::size_t l = 0; l < s; ++l) {
      Vector<F> v;
      for (const auto& t : p.terms) v.terms.push_back({static_cast<std::uint32_t>(t.pos * s + l), t.mono, t.coeff});
      rels.push_back(make_vector(*ring, std::move(v.terms)));
    }
  for (std::size_t a = 0; a < f0.rank(); ++a)
    for (const auto& q : N.relations()) rels.push_back(shift_positions(q, static_cast<std::uint32_t>(a * s)));
  return minimal_presentation(PresentedModule<F>(ring, FreeModule(degs), std::move(rels)));
}

template <CoefficientField F>
PresentedModule<F> quotient_by_ideal(const PresentedModule<F>& M, const IdealBasis<F>& a) {
  std::vector<Vector<F>> rels = M.relations();
  for (std::uint32_t k = 0; k < M.generators().rank(); ++k)
    for (const auto& g : a.generators) rels.push_back(unit_vector(g.in_ring(M.ring()), k));
  return PresentedModule<F>(M.ring(), M.generators(), std::move(rels));
}

template <CoefficientField F>
PresentedModule<F> direct_sum(const std::vector<PresentedModule<F>>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct sum of no modules");
  std::vector<int> degs;
  std::vector<Vector<F>> rels;
  for (const auto& p : parts) {
    const auto offset = static_cast<std::uint32_t>(degs.size());
    for (const auto& r : p.relations()) rels.push_back(shift_positions(r, offset));
    degs.insert(degs.end(), p.generators().degrees.begin(), p.generators().degrees.end());
  }
  return PresentedModule<F>(parts.front().ring(), FreeModule(degs), std::move(rels));
}

template <CoefficientField F>
PresentedModule<F> residue_field(const RingPtr<F>& ring) {
  std::vector<Polynomial<F>> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(Polynomial<F>::variable(ring, i));
  return PresentedModule<F>::cyclic(make_ideal(ring, std::move(vars)));
}

template <CoefficientField F>
IdealBasis<F> annihilator(const PresentedModule<F>& M) {
  return M.cached_annihilator();
}

template <CoefficientField F>
HilbertSeries hilbert_series(const PresentedModule<F>& M) {
  return M.cached_hilbert_series();
}

template <CoefficientField F>
int dimension_of_quotient(const IdealBasis<F>& I) {
  auto gb = groebner_basis(I);
  if (gb.is_everything()) return -1;
  const auto leads = gb.leading_monomials(0);
  const unsigned n = static_cast<unsigned>(I.ring->nvars());
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int size = std::popcount(mask);
    if (size <= best) continue;
    bool independent = std::all_of(leads.begin(), leads.end(), [&](const Monomial& m) { return (m.support() & ~mask) != 0; });
    if (independent) best = size;
  }
  return best;
}

template <CoefficientField F>
int krull_dim(const PresentedModule<F>& M) {
  if (M.is_zero()) return -1;
  return dimension_of_quotient(annihilator(M));
}

template <CoefficientField F>
long long bass_number(int i, const PresentedModule<F>& M) {
  auto k = residue_field(M.ring());
  auto E = ext(i, minimal_free_resolution(k, i + 1), M);
  auto len = E.length();
  if (!len) throw std::logic_error("Ext(k, M) should have finite length");
  return *len;
}

template <CoefficientField F>
int depth(const PresentedModule<F>& M) {
  if (M.is_zero()) throw std::domain_error("depth of the zero module");
  const int d = M.ring()->dimension();
  auto res = minimal_free_resolution(residue_field(M.ring()), d + 1);
  for (int i = 0; i <= d; ++i)
    if (!ext_is_zero(i, res, M)) return i;
  throw std::logic_error("no nonvanishing Ext(k, M) up to the ring dimension");
}

#define GLC_INSTANTIATE(F)                                                                                      \
  template struct GradedMap<F>;                                                                                 \
  template struct Complex<F>;                                                                                   \
  template class PresentedModule<F>;                                                                            \
  template GradedMap<F> compose<F>(const GradedMap<F>&, const GradedMap<F>&);                                   \
  template PresentedModule<F> minimal_presentation<F>(const PresentedModule<F>&);                               \
  template Complex<F> minimal_free_resolution<F>(const PresentedModule<F>&, int);                               \
  template Complex<F> resolve_keeping_generators<F>(const PresentedModule<F>&, int);                            \
  template std::optional<int> projective_dimension<F>(const PresentedModule<F>&);                               \
  template HomTerm<F> hom_term<F>(const FreeModule&, const PresentedModule<F>&);                                \
  template std::vector<Vector<F>> hom_induced<F>(const GradedMap<F>&, std::size_t);                             \
  template PresentedModule<F> subquotient<F>(const RingPtr<F>&, const FreeModule&, const std::vector<Vector<F>>&, \
                                             const std::vector<Vector<F>>&);                                    \
  template std::vector<Vector<F>> hom_cycles<F>(const Complex<F>&, int, const PresentedModule<F>&);             \
  template std::vector<Vector<F>> hom_boundaries<F>(const Complex<F>&, int, const PresentedModule<F>&);         \
  template PresentedModule<F> ext<F>(int, const Complex<F>&, const PresentedModule<F>&);                        \
  template PresentedModule<F> ext<F>(int, const PresentedModule<F>&, const PresentedModule<F>&);                \
  template bool ext_is_zero<F>(int, const Complex<F>&, const PresentedModule<F>&);                              \
  template PresentedModule<F> hom_module<F>(const PresentedModule<F>&, const PresentedModule<F>&);              \
  template PresentedModule<F> tensor<F>(const PresentedModule<F>&, const PresentedModule<F>&);                  \
  template PresentedModule<F> quotient_by_ideal<F>(const PresentedModule<F>&, const IdealBasis<F>&);            \
  template PresentedModule<F> direct_sum<F>(const std::vector<PresentedModule<F>>&);                            \
  template PresentedModule<F> residue_field<F>(const RingPtr<F>&);                                              \
  template IdealBasis<F> annihilator<F>(const PresentedModule<F>&);                                             \
  template HilbertSeries hilbert_series<F>(const PresentedModule<F>&);                                          \
  template int dimension_of_quotient<F>(const IdealBasis<F>&);                                                  \
  template int krull_dim<F>(const PresentedModule<F>&);                                                         \
  template long long bass_number<F>(int, const PresentedModule<F>&);                                            \
  template int depth<F>(const PresentedModule<F>&);

GLC_INSTANTIATE(PrimeField)
GLC_INSTANTIATE(RationalField)

}  // namespace glc
