#include "glc/glc.hpp"

#include <algorithm>

namespace glc {

std::string to_string(Vanishing v) {
  switch (v) {
    case Vanishing::vanishes:
      return "vanishes";
    case Vanishing::nonvanishes:
      return "nonvanishes";
    case Vanishing::unknown:
      return "unknown";
  }
  return "?";
}

std::string to_string(OracleVerdict v) {
  switch (v) {
    case OracleVerdict::zero:
      return "zero";
    case OracleVerdict::nonzero:
      return "nonzero";
    case OracleVerdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

std::string to_string(Agreement a) {
  switch (a) {
    case Agreement::agree:
      return "agree";
    case Agreement::disagree:
      return "disagree";
    case Agreement::not_applicable:
      return "n/a";
  }
  return "?";
}

int BoundsReport::vanishing_bound() const { return std::min({pdM + dimTensor, araUpper + pdM, d}); }

std::optional<long long> OracleTrace::stable(int j) const {
  if (j < degree_lo || j > degree_hi) return std::nullopt;
  long long v = stable_dims[static_cast<std::size_t>(j - degree_lo)];
  if (v < 0) return std::nullopt;
  return v;
}

bool OracleTrace::monotone() const {
  for (const auto& source : image_dims)
    for (std::size_t t = 1; t < source.size(); ++t)
      for (std::size_t j = 0; j < source[t].size(); ++j)
        if (source[t][j] > source[t - 1][j]) return false;
  return true;
}

namespace {

template <CoefficientField F>
void check_module(const PresentedModule<F>& M, const char* name) {
  for (const auto& r : M.relations())
    if (!is_homogeneous(r, M.generators().degrees))
      throw InstanceError(std::string("module ") + name + " has an inhomogeneous relation");
}

template <CoefficientField F>
bool contains_prime(const std::vector<PrimeIdeal<F>>& set, const PrimeIdeal<F>& p) {
  return std::find(set.begin(), set.end(), p) != set.end();
}

template <CoefficientField F>
bool same_prime_set(const std::vector<PrimeIdeal<F>>& a, const std::vector<PrimeIdeal<F>>& b) {
  return a.size() == b.size() && std::all_of(a.begin(), a.end(), [&](const auto& p) { return contains_prime(b, p); });
}

template <CoefficientField F>
std::vector<Vector<F>> nonzero(std::vector<Vector<F>> vs) {
  std::erase_if(vs, [](const Vector<F>& v) { return v.is_zero(); });
  return vs;
}

template <CoefficientField F>
GroebnerBasis<F> span(const RingPtr<F>& ring, const FreeModule& ambient, const std::vector<Vector<F>>& a,
                      const std::vector<Vector<F>>& b = {}) {
  auto gens = nonzero(a);
  for (const auto& v : b)
    if (!v.is_zero()) gens.push_back(v);
  return groebner_basis(ring, ambient, gens);
}

template <CoefficientField F>
GradedMap<F> identity_map(const RingPtr<F>& ring, const FreeModule& free) {
  std::vector<Vector<F>> cols;
  for (std::uint32_t p = 0; p < free.rank(); ++p) cols.push_back(basis_vector(*ring, p));
  return GradedMap<F>(ring, free, free, std::move(cols));
}

}  // namespace

template <CoefficientField F>
void validate(const Instance<F>& inst) {
  const auto& ring = inst.ring;
  if (ring->has_hypersurface()) {
    auto f = ring->hypersurface();
    if (f.degree() < 2 || !f.is_homogeneous()) throw InstanceError("hypersurface must be homogeneous of degree >= 2");
  }
  for (const auto& g : inst.a.generators)
    if (!g.is_homogeneous()) throw InstanceError("ideal generator " + g.to_string() + " is not homogeneous");
  check_module(inst.M, "M");
  check_module(inst.N, "N");
  if (ring->has_hypersurface() && !projective_dimension(inst.M))
    throw InstanceError("pd M is infinite: the resolution of M does not terminate");
}

template <CoefficientField F>
VanishingVerdict<F> predict_top_vanishing(const Instance<F>& inst) {
  VanishingVerdict<F> out;
  if (inst.M.is_zero() || inst.N.is_zero()) {
    out.value = Vanishing::vanishes;
    return out;
  }
  auto ass = associated_primes(inst.M);
  out.complete = ass.complete;
  for (const auto& p : ass.primes) {
    if (!supp_contains(inst.N, p)) continue;
    out.candidates.push_back(p);
    if (dim_of_ideal(ideal_sum(inst.a, p.basis)) == 0) out.witnesses.push_back(p);
  }
  if (!out.complete) out.value = Vanishing::unknown;
  else out.value = out.witnesses.empty() ? Vanishing::vanishes : Vanishing::nonvanishes;
  return out;
}

template <CoefficientField F>
AttachedPrimes<F> top_attached_primes(const Instance<F>& inst) {
  AttachedPrimes<F> out;
  auto verdict = predict_top_vanishing(inst);
  out.primes = verdict.witnesses;
  out.ass_supp = verdict.candidates;
  out.complete = verdict.complete;
  if (inst.M.is_zero() || inst.N.is_zero()) {
    out.identity_holds = true;
    return out;
  }
  auto hom = associated_primes(hom_module(inst.N, inst.M));
  out.hom_ass = hom.primes;
  out.complete = out.complete && hom.complete;
  if (out.complete) out.identity_holds = same_prime_set(out.hom_ass, out.ass_supp);
  return out;
}

template <CoefficientField F>
int arithmetic_rank_upper(const IdealBasis<F>& a) {
  std::vector<Polynomial<F>> kept;
  for (const auto& g : a.generators)
    if (!reduce_mod_hypersurface(g).is_zero()) kept.push_back(g);
  for (std::size_t i = kept.size(); i-- > 0;) {
    std::vector<Polynomial<F>> others;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    if (ideal_contains(make_ideal(a.ring, others), kept[i])) kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return static_cast<int>(kept.size());
}

template <CoefficientField F>
BoundsReport bounds(const Instance<F>& inst) {
  if (inst.M.is_zero() || inst.N.is_zero()) throw InstanceError("bounds need nonzero M and N");
  BoundsReport out;
  out.d = inst.d();
  auto pd = projective_dimension(inst.M);
  if (!pd) throw InstanceError("pd M is infinite");
  out.pdM = *pd;
  out.dimTensor = krull_dim(tensor(inst.M, inst.N));
  auto Q = quotient_by_ideal(inst.M, inst.a);
  if (krull_dim(tensor(Q, inst.N)) >= 0) {
    auto res = minimal_free_resolution(Q, out.d + 1);
    for (int i = 0; i <= out.d && !out.gradeT; ++i)
      if (!ext_is_zero(i, res, inst.N)) out.gradeT = i;
    if (!out.gradeT) throw std::logic_error("grade exceeds dim N although supports meet");
  }
  out.araUpper = arithmetic_rank_upper(inst.a);
  out.depthN = depth(inst.N);
  return out;
}

template <CoefficientField F>
DirectSystem<F>::DirectSystem(const Instance<F>& inst, int max_index, OracleOptions options)
    : inst_(inst), max_index_(max_index), options_(options) {
  if (max_index < 0) throw std::invalid_argument("oracle index must be nonnegative");
  if (options.window < 1 || options.nmax < options.window + 1)
    throw std::invalid_argument("oracle needs nmax >= window + 1 and window >= 1");
  if (inst.M.is_zero() || inst.N.is_zero()) return;
  for (int n = 1; n <= options.nmax; ++n) {
    auto Mn = quotient_by_ideal(inst.M, ideal_power(inst.a, static_cast<unsigned>(n)));
    levels_.push_back({resolve_keeping_generators(Mn, max_index + 1), {}});
  }
  for (std::size_t n = 0; n + 1 < levels_.size(); ++n) lift_chain_maps(n);
}

template <CoefficientField F>
void DirectSystem<F>::lift_chain_maps(std::size_t n) {
  const auto& ring = inst_.ring;
  const auto& src = levels_[n + 1].resolution;
  const auto& tgt = levels_[n].resolution;
  auto& chain = levels_[n].chain;
  chain.push_back(identity_map(ring, src.module(0)));
  for (int k = 1; k <= max_index_; ++k) {
    const FreeModule source = src.module(k);
    const FreeModule target = tgt.module(k);
    std::vector<Vector<F>> cols;
    for (std::size_t b = 0; b < source.rank(); ++b) {
      auto v = reduce_mod_hypersurface(*ring, chain[k - 1].apply(src.maps[k - 1].columns[b]));
      if (v.is_zero()) {
        cols.emplace_back();
        continue;
      }
      if (tgt.length() < k) throw InsufficientResolution("chain map cannot be lifted: target resolution ended");
      auto u = tgt.bases[k - 1]->lift(v);
      if (options_.alternate_lifts && tgt.length() > k) {
        const auto& next = tgt.maps[k];
        for (std::size_t c = 0; c < next.columns.size(); ++c) {
          int gap = source.degrees[b] - tgt.module(k + 1).degrees[c];
          if (gap < 0 || next.columns[c].is_zero()) continue;
          std::vector<unsigned> ex(ring->nvars(), 0);
          ex[c % ring->nvars()] = static_cast<unsigned>(gap);
          u = add_multiple(*ring, u, ring->field().one(), Monomial(ex), next.columns[c]);
          break;
        }
      }
      cols.push_back(std::move(u));
    }
    chain.emplace_back(ring, source, target, std::move(cols));
  }
}

template <CoefficientField F>
GradedMap<F> DirectSystem<F>::hom_transition(std::size_t n, int i) const {
  const auto& N = inst_.N;
  const auto& phi = levels_[n].chain[static_cast<std::size_t>(i)];
  auto from = hom_term(levels_[n].resolution.module(i), N).ambient;
  auto to = hom_term(levels_[n + 1].resolution.module(i), N).ambient;
  return GradedMap<F>(inst_.ring, from, to, hom_induced(phi, N.generators().rank()));
}

template <CoefficientField F>
OracleTrace DirectSystem<F>::trace(int i) const {
  if (i < 0 || i > max_index_) throw std::invalid_argument("oracle index outside the prepared range");
  OracleTrace out;
  out.index = i;
  out.nmax = options_.nmax;
  out.window = options_.window;
  const int first = std::max(1, options_.nmax - 2 * options_.window + 1);
  const int last = options_.nmax - options_.window;
  const int slack = options_.degree_slack;
  const auto& ring = inst_.ring;

  std::vector<FreeModule> ambient;
  std::vector<std::vector<Vector<F>>> cycles, boundaries;
  for (const auto& level : levels_) {
    ambient.push_back(hom_term(level.resolution.module(i), inst_.N).ambient);
    cycles.push_back(hom_cycles(level.resolution, i, inst_.N));
    boundaries.push_back(hom_boundaries(level.resolution, i, inst_.N));
  }

  bool any = false;
  int lo = 0, hi = 0;
  for (int s = 1; s < options_.nmax && !levels_.empty(); ++s) {
    for (int deg : ambient[static_cast<std::size_t>(s - 1)].degrees) {
      lo = any ? std::min(lo, deg) : deg;
      hi = any ? std::max(hi, deg) : deg;
      any = true;
    }
  }
  out.degree_lo = lo - slack;
  out.degree_hi = hi + slack;
  const std::size_t width = static_cast<std::size_t>(out.degree_hi - out.degree_lo + 1);

  auto dims = [&](const GroebnerBasis<F>& small, const GroebnerBasis<F>& big) {
    std::vector<long long> row(width, 0);
    for (std::size_t j = 0; j < width; ++j) {
      int deg = out.degree_lo + static_cast<int>(j);
      row[j] = small.hilbert_function(deg) - big.hilbert_function(deg);
    }
    return row;
  };

  if (levels_.empty()) {
    out.ext_dims.assign(static_cast<std::size_t>(options_.nmax), std::vector<long long>(width, 0));
    out.image_dims.assign(static_cast<std::size_t>(last - first + 1), {});
    for (int s = first; s <= last; ++s)
      out.image_dims[static_cast<std::size_t>(s - first)].assign(static_cast<std::size_t>(options_.nmax - s + 1),
                                                                   std::vector<long long>(width, 0));
  } else {
    std::vector<GroebnerBasis<F>> boundary_bases;
    for (std::size_t n = 0; n < levels_.size(); ++n) {
      boundary_bases.push_back(span(ring, ambient[n], boundaries[n]));
      out.ext_dims.push_back(dims(boundary_bases[n], span(ring, ambient[n], cycles[n], boundaries[n])));
    }
    for (int s = first; s <= last; ++s) {
      std::vector<std::vector<long long>> profile;
      auto images = cycles[static_cast<std::size_t>(s - 1)];
      for (int t = s; t <= options_.nmax; ++t) {
        const auto n = static_cast<std::size_t>(t - 1);
        if (t > s) {
          auto step = hom_transition(n - 1, i);
          for (auto& v : images) v = reduce_mod_hypersurface(*ring, step.apply(v));
          images = nonzero(std::move(images));
        }
        profile.push_back(dims(boundary_bases[n], span(ring, ambient[n], boundaries[n], images)));
      }
      out.image_dims.push_back(std::move(profile));
    }
  }

  // below the twists of the first source its Ext is zero for lack of room, not by stabilization
  int informative = out.degree_hi + 1;
  if (!levels_.empty())
    for (int deg : ambient[static_cast<std::size_t>(first - 1)].degrees) informative = std::min(informative, deg);
  const std::size_t last_target = static_cast<std::size_t>(options_.window);

  out.stable_dims.assign(width, -1);
  bool all_zero = true, survivor = false;
  for (std::size_t j = 0; j < width; ++j) {
    long long v = out.image_dims.front().back()[j];
    bool settled = out.degree_lo + static_cast<int>(j) >= informative;
    for (const auto& profile : out.image_dims) {
      const long long at_end = profile.back()[j];
      if (at_end != 0) all_zero = false;
      if (at_end != v) settled = false;
      bool constant = true;
      for (std::size_t t = profile.size() - 1 - last_target; t < profile.size(); ++t)
        constant = constant && profile[t][j] == at_end;
      if (!constant) settled = false;
      if (constant && at_end > 0) survivor = true;
    }
    if (settled) out.stable_dims[j] = v;
  }
  if (survivor) out.verdict = OracleVerdict::nonzero;
  else if (all_zero) out.verdict = OracleVerdict::zero;
  else out.verdict = OracleVerdict::inconclusive;
  return out;
}

template <CoefficientField F>
OracleTrace oracle_colimit(const Instance<F>& inst, int i, const OracleOptions& options) {
  return DirectSystem<F>(inst, i, options).trace(i);
}

template <CoefficientField F>
VanishingReport<F> cross_validate(const Instance<F>& inst, const OracleOptions& options) {
  VanishingReport<F> out;
  out.id = inst.id;
  out.attached = top_attached_primes(inst);
  out.predictor = predict_top_vanishing(inst);
  out.oracle = oracle_colimit(inst, inst.d(), options);
  if (!inst.M.is_zero() && !inst.N.is_zero()) out.bounds = bounds(inst);
  if (out.predictor.value == Vanishing::unknown || out.oracle.verdict == OracleVerdict::inconclusive) {
    out.agreement = Agreement::not_applicable;
  } else {
    bool predicted_zero = out.predictor.value == Vanishing::vanishes;
    bool observed_zero = out.oracle.verdict == OracleVerdict::zero;
    out.agreement = predicted_zero == observed_zero ? Agreement::agree : Agreement::disagree;
  }
  return out;
}

#define GLC_INSTANTIATE(F)                                                                        \
  template void validate<F>(const Instance<F>&);                                                  \
  template VanishingVerdict<F> predict_top_vanishing<F>(const Instance<F>&);                      \
  template AttachedPrimes<F> top_attached_primes<F>(const Instance<F>&);                          \
  template int arithmetic_rank_upper<F>(const IdealBasis<F>&);                                    \
  template BoundsReport bounds<F>(const Instance<F>&);                                            \
  template class DirectSystem<F>;                                                                 \
  template OracleTrace oracle_colimit<F>(const Instance<F>&, int, const OracleOptions&);          \
  template VanishingReport<F> cross_validate<F>(const Instance<F>&, const OracleOptions&);

GLC_INSTANTIATE(PrimeField)
GLC_INSTANTIATE(RationalField)

}  // namespace glc
