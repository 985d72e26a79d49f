#include "glc/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace glc {

namespace {

/// (v[start..]) + c * m * w, as a fresh vector.
template <CoefficientField F>
Vector<F> merge_multiple(const Ring<F>& ring, const std::vector<VectorTerm<F>>& vt, std::size_t start,
                         const typename F::Element& c, const Monomial& m, const Vector<F>& w) {
  const F& k = ring.field();
  Vector<F> out;
  out.terms.reserve(vt.size() - start + w.terms.size());
  std::size_t i = start, j = 0;
  const auto& wt = w.terms;
  while (i < vt.size() || j < wt.size()) {
    if (j == wt.size()) {
      out.terms.push_back(vt[i++]);
      continue;
    }
    Monomial wm = wt[j].mono * m;
    std::strong_ordering cmp =
        i == vt.size() ? std::strong_ordering::less : compare_pot(ring, vt[i].pos, vt[i].mono, wt[j].pos, wm);
    if (cmp > 0) {
      out.terms.push_back(vt[i++]);
    } else if (cmp < 0) {
      out.terms.push_back({wt[j].pos, wm, k.mul(c, wt[j].coeff)});
      ++j;
    } else {
      auto s = k.add(vt[i].coeff, k.mul(c, wt[j].coeff));
      if (!k.is_zero(s)) out.terms.push_back({vt[i].pos, vt[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

template <CoefficientField F>
Vector<F> hypersurface_vector(const Ring<F>& ring, std::uint32_t pos) {
  Vector<F> v;
  for (const auto& t : ring.hypersurface_terms()) v.terms.push_back({pos, t.mono, t.coeff});
  return v;
}

template <CoefficientField F>
Vector<F> combine_representations(const Ring<F>& ring, const Vector<F>& quotients, const std::vector<Vector<F>>& reps) {
  Vector<F> out;
  for (const auto& q : quotients.terms) out = add_multiple(ring, out, q.coeff, q.mono, reps[q.pos]);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// GroebnerBasis

template <CoefficientField F>
GroebnerBasis<F>::GroebnerBasis(RingPtr<F> ring, FreeModule ambient, std::vector<Vector<F>> elements,
                                std::vector<Vector<F>> representations, std::size_t tracked)
    : ring_(std::move(ring)),
      ambient_(std::move(ambient)),
      elements_(std::move(elements)),
      reps_(std::move(representations)),
      tracked_(tracked) {
  by_position_.resize(ambient_.rank());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const auto& lead = elements_[i].lead();
    if (lead.pos >= ambient_.rank()) throw std::out_of_range("basis element outside ambient module");
    by_position_[lead.pos].push_back(i);
  }
}

template <CoefficientField F>
const Vector<F>* GroebnerBasis<F>::find_reducer(std::uint32_t pos, const Monomial& m, std::size_t* index) const {
  if (pos >= by_position_.size()) return nullptr;
  for (std::size_t i : by_position_[pos]) {
    if (elements_[i].lead().mono.divides(m)) {
      *index = i;
      return &elements_[i];
    }
  }
  return nullptr;
}

template <CoefficientField F>
Vector<F> GroebnerBasis<F>::normal_form(const Vector<F>& v) const {
  const F& k = ring_->field();
  Vector<F> rem;
  Vector<F> cur = v;
  std::size_t start = 0;
  while (start < cur.terms.size()) {
    const auto& t = cur.terms[start];
    std::size_t idx = 0;
    if (const Vector<F>* g = find_reducer(t.pos, t.mono, &idx)) {
      Monomial m = t.mono.quotient(g->lead().mono);
      auto c = k.neg(t.coeff);
      cur = merge_multiple(*ring_, cur.terms, start, c, m, *g);
      start = 0;
    } else {
      rem.terms.push_back(t);
      ++start;
    }
  }
  return rem;
}

template <CoefficientField F>
Division<F> GroebnerBasis<F>::divide(const Vector<F>& v) const {
  const F& k = ring_->field();
  std::vector<VectorTerm<F>> quotient_terms;
  Vector<F> rem;
  Vector<F> cur = v;
  std::size_t start = 0;
  while (start < cur.terms.size()) {
    const auto& t = cur.terms[start];
    std::size_t idx = 0;
    if (const Vector<F>* g = find_reducer(t.pos, t.mono, &idx)) {
      Monomial m = t.mono.quotient(g->lead().mono);
      quotient_terms.push_back({static_cast<std::uint32_t>(idx), m, t.coeff});
      cur = merge_multiple(*ring_, cur.terms, start, k.neg(t.coeff), m, *g);
      start = 0;
    } else {
      rem.terms.push_back(t);
      ++start;
    }
  }
  return {make_vector(*ring_, std::move(quotient_terms)), std::move(rem)};
}

template <CoefficientField F>
Vector<F> GroebnerBasis<F>::lift(const Vector<F>& v) const {
  if (!tracked()) throw std::logic_error("lift needs a tracked Groebner basis");
  auto div = divide(v);
  if (!div.remainder.is_zero()) throw std::domain_error("vector is not in the submodule; cannot lift");
  return combine_representations(*ring_, div.quotients, reps_);
}

template <CoefficientField F>
std::vector<Monomial> GroebnerBasis<F>::leading_monomials(std::uint32_t pos) const {
  std::vector<Monomial> out;
  if (pos < by_position_.size())
    for (std::size_t i : by_position_[pos]) out.push_back(elements_[i].lead().mono);
  return out;
}

template <CoefficientField F>
long long GroebnerBasis<F>::hilbert_function(int degree) const {
  long long total = 0;
  const std::size_t n = ring_->nvars();
  for (std::uint32_t pos = 0; pos < ambient_.rank(); ++pos) {
    const int t = degree - ambient_.degrees[pos];
    if (t < 0) continue;
    auto leads = leading_monomials(pos);
    if (std::any_of(leads.begin(), leads.end(), [](const Monomial& m) { return m.is_one(); })) continue;
    for (const auto& m : monomials_of_degree(n, static_cast<unsigned>(t))) {
      bool standard = true;
      for (const auto& l : leads)
        if (l.divides(m)) {
          standard = false;
          break;
        }
      if (standard) ++total;
    }
  }
  return total;
}

template <CoefficientField F>
bool GroebnerBasis<F>::finite_colength() const {
  const std::size_t n = ring_->nvars();
  for (std::uint32_t pos = 0; pos < ambient_.rank(); ++pos) {
    auto leads = leading_monomials(pos);
    if (std::any_of(leads.begin(), leads.end(), [](const Monomial& m) { return m.is_one(); })) continue;
    for (std::size_t i = 0; i < n; ++i) {
      bool pure = std::any_of(leads.begin(), leads.end(), [&](const Monomial& m) { return m.support() == (1u << i); });
      if (!pure) return false;
    }
  }
  return true;
}

template <CoefficientField F>
long long GroebnerBasis<F>::colength() const {
  if (!finite_colength()) throw std::domain_error("module does not have finite length");
  long long total = 0;
  const std::size_t n = ring_->nvars();
  for (std::uint32_t pos = 0; pos < ambient_.rank(); ++pos) {
    auto leads = leading_monomials(pos);
    if (std::any_of(leads.begin(), leads.end(), [](const Monomial& m) { return m.is_one(); })) continue;
    for (unsigned t = 0;; ++t) {
      long long count = 0;
      for (const auto& m : monomials_of_degree(n, t)) {
        bool standard = std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
        if (standard) ++count;
      }
      if (count == 0) break;
      total += count;
    }
  }
  return total;
}

template <CoefficientField F>
bool GroebnerBasis<F>::is_everything() const {
  for (std::uint32_t pos = 0; pos < ambient_.rank(); ++pos) {
    auto leads = leading_monomials(pos);
    if (std::none_of(leads.begin(), leads.end(), [](const Monomial& m) { return m.is_one(); })) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// GroebnerEngine

template <CoefficientField F>
GroebnerEngine<F>::GroebnerEngine(RingPtr<F> ring, FreeModule ambient, std::size_t tracked)
    : ring_(std::move(ring)), ambient_(std::move(ambient)), tracked_(tracked), ideal_case_(ambient_.rank() == 1) {
  if (ring_->has_hypersurface())
    for (std::uint32_t k = 0; k < ambient_.rank(); ++k) add_generator(hypersurface_vector(*ring_, k));
}

template <CoefficientField F>
void GroebnerEngine<F>::add_generator(Vector<F> v, std::optional<std::size_t> tracked_index) {
  if (v.is_zero()) return;
  for (const auto& t : v.terms)
    if (t.pos >= ambient_.rank()) throw std::out_of_range("generator outside ambient module");
  Vector<F> rep;
  if (tracked_index) {
    if (*tracked_index >= tracked_) throw std::out_of_range("tracked index out of range");
    rep = basis_vector(*ring_, static_cast<std::uint32_t>(*tracked_index));
  }
  const int d = vector_degree(v, ambient_.degrees);
  pending_.push_back({std::move(v), std::move(rep), d});
}

template <CoefficientField F>
void GroebnerEngine<F>::seed(const GroebnerBasis<F>& gb) {
  if (!(gb.ambient() == ambient_)) throw std::invalid_argument("seed basis lives in a different module");
  for (std::size_t i = 0; i < gb.size(); ++i)
    elems_.push_back({gb.elements()[i], Vector<F>{}, gb.degree(i), true});
}

template <CoefficientField F>
std::optional<int> GroebnerEngine<F>::next_degree() const {
  std::optional<int> best;
  for (const auto& p : pending_)
    if (!best || p.degree < *best) best = p.degree;
  for (const auto& p : pairs_)
    if (!best || p.degree < *best) best = p.degree;
  return best;
}

template <CoefficientField F>
void GroebnerEngine<F>::top_reduce(Vector<F>& v, Vector<F>& rep) const {
  const F& k = ring_->field();
  while (!v.is_zero()) {
    const auto& lead = v.lead();
    const Element* reducer = nullptr;
    for (const auto& e : elems_) {
      if (!e.active || e.v.lead().pos != lead.pos) continue;
      if (e.v.lead().mono.divides(lead.mono)) {
        reducer = &e;
        break;
      }
    }
    if (!reducer) return;
    Monomial m = lead.mono.quotient(reducer->v.lead().mono);
    auto c = k.neg(lead.coeff);
    if (tracked_ > 0 && !reducer->rep.is_zero()) rep = add_multiple(*ring_, rep, c, m, reducer->rep);
    v = add_multiple(*ring_, v, c, m, reducer->v);
  }
}

template <CoefficientField F>
void GroebnerEngine<F>::insert(Vector<F> v, Vector<F> rep) {
  const F& k = ring_->field();
  auto inv = k.inv(v.lead().coeff);
  v = scale(*ring_, v, inv);
  if (!rep.is_zero()) rep = scale(*ring_, rep, inv);
  const int d = vector_degree(v, ambient_.degrees);
  elems_.push_back({std::move(v), std::move(rep), d, true});
  update(elems_.size() - 1);
}

template <CoefficientField F>
void GroebnerEngine<F>::update(std::size_t k) {
  const auto pos = elems_[k].v.lead().pos;
  const Monomial lt = elems_[k].v.lead().mono;

  struct Candidate {
    std::size_t g;
    Monomial lcm;
    bool coprime;
  };
  std::vector<Candidate> fresh;
  for (std::size_t g = 0; g < elems_.size(); ++g) {
    if (g == k || !elems_[g].active || elems_[g].v.lead().pos != pos) continue;
    const Monomial& lg = elems_[g].v.lead().mono;
    fresh.push_back({g, Monomial::lcm(lt, lg), ideal_case_ && lt.coprime(lg)});
  }

  std::vector<Candidate> kept;
  for (std::size_t idx = 0; idx < fresh.size(); ++idx) {
    const auto& p = fresh[idx];
    if (p.coprime) {
      kept.push_back(p);
      continue;
    }
    bool dominated = false;
    for (std::size_t q = idx + 1; q < fresh.size() && !dominated; ++q)
      if (fresh[q].lcm.divides(p.lcm)) dominated = true;
    for (std::size_t q = 0; q < kept.size() && !dominated; ++q)
      if (kept[q].lcm.divides(p.lcm)) dominated = true;
    if (!dominated) kept.push_back(p);
  }

  std::erase_if(pairs_, [&](const Pair& p) {
    if (p.pos != pos || !lt.divides(p.lcm)) return false;
    const Monomial li = Monomial::lcm(elems_[p.i].v.lead().mono, lt);
    const Monomial lj = Monomial::lcm(elems_[p.j].v.lead().mono, lt);
    return !(li == p.lcm) && !(lj == p.lcm);
  });

  for (const auto& c : kept)
    if (!c.coprime)
      pairs_.push_back({c.g, k, c.lcm, pos, static_cast<int>(c.lcm.degree()) + ambient_.degrees[pos]});

  for (std::size_t g = 0; g < elems_.size(); ++g) {
    if (g == k || !elems_[g].active || elems_[g].v.lead().pos != pos) continue;
    if (lt.divides(elems_[g].v.lead().mono)) elems_[g].active = false;
  }
}

template <CoefficientField F>
void GroebnerEngine<F>::complete_through(int degree) {
  const F& k = ring_->field();
  for (;;) {
    auto d = next_degree();
    if (!d || *d > degree) return;
    auto pit = std::find_if(pending_.begin(), pending_.end(), [&](const Pending& p) { return p.degree == *d; });
    if (pit != pending_.end()) {
      Pending item = std::move(*pit);
      pending_.erase(pit);
      top_reduce(item.v, item.rep);
      if (!item.v.is_zero()) insert(std::move(item.v), std::move(item.rep));
      continue;
    }
    auto qit = std::find_if(pairs_.begin(), pairs_.end(), [&](const Pair& p) { return p.degree == *d; });
    Pair pair = *qit;
    pairs_.erase(qit);
    const Element& a = elems_[pair.i];
    const Element& b = elems_[pair.j];
    const Monomial ma = pair.lcm.quotient(a.v.lead().mono);
    const Monomial mb = pair.lcm.quotient(b.v.lead().mono);
    const auto minus_one = k.neg(k.one());
    Vector<F> s = add_multiple(*ring_, scale(*ring_, a.v, k.one(), ma), minus_one, mb, b.v);
    Vector<F> rep;
    if (tracked_ > 0) rep = add_multiple(*ring_, scale(*ring_, a.rep, k.one(), ma), minus_one, mb, b.rep);
    top_reduce(s, rep);
    if (!s.is_zero()) insert(std::move(s), std::move(rep));
  }
}

template <CoefficientField F>
void GroebnerEngine<F>::complete() {
  complete_through(std::numeric_limits<int>::max());
}

template <CoefficientField F>
Vector<F> GroebnerEngine<F>::reduce(const Vector<F>& v) const {
  const F& k = ring_->field();
  Vector<F> rem;
  Vector<F> cur = v;
  std::size_t start = 0;
  while (start < cur.terms.size()) {
    const auto& t = cur.terms[start];
    const Element* reducer = nullptr;
    for (const auto& e : elems_) {
      if (!e.active || e.v.lead().pos != t.pos) continue;
      if (e.v.lead().mono.divides(t.mono)) {
        reducer = &e;
        break;
      }
    }
    if (reducer) {
      Monomial m = t.mono.quotient(reducer->v.lead().mono);
      cur = merge_multiple(*ring_, cur.terms, start, k.neg(t.coeff), m, reducer->v);
      start = 0;
    } else {
      rem.terms.push_back(t);
      ++start;
    }
  }
  return rem;
}

template <CoefficientField F>
GroebnerBasis<F> GroebnerEngine<F>::basis() const {
  std::vector<const Element*> active;
  for (const auto& e : elems_)
    if (e.active) active.push_back(&e);
  std::sort(active.begin(), active.end(), [&](const Element* a, const Element* b) {
    return compare_pot(*ring_, a->v.lead().pos, a->v.lead().mono, b->v.lead().pos, b->v.lead().mono) > 0;
  });
  std::vector<Vector<F>> elems;
  std::vector<Vector<F>> reps;
  for (const auto* e : active) {
    elems.push_back(e->v);
    if (tracked_ > 0) reps.push_back(e->rep);
  }
  GroebnerBasis<F> raw(ring_, ambient_, elems, reps, tracked_);
  std::vector<Vector<F>> out_elems;
  std::vector<Vector<F>> out_reps;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    Vector<F> tail;
    tail.terms.assign(elems[i].terms.begin() + 1, elems[i].terms.end());
    auto div = raw.divide(tail);
    Vector<F> v;
    v.terms.reserve(div.remainder.terms.size() + 1);
    v.terms.push_back(elems[i].lead());
    v.terms.insert(v.terms.end(), div.remainder.terms.begin(), div.remainder.terms.end());
    out_elems.push_back(std::move(v));
    if (tracked_ > 0) {
      Vector<F> r = reps[i];
      for (const auto& q : div.quotients.terms)
        r = add_multiple(*ring_, r, ring_->field().neg(q.coeff), q.mono, reps[q.pos]);
      out_reps.push_back(std::move(r));
    }
  }
  return GroebnerBasis<F>(ring_, ambient_, std::move(out_elems), std::move(out_reps), tracked_);
}

// ---------------------------------------------------------------------------
// Free functions

template <CoefficientField F>
IdealBasis<F> make_ideal(const RingPtr<F>& ring, std::vector<Polynomial<F>> generators) {
  std::erase_if(generators, [](const Polynomial<F>& p) { return p.is_zero(); });
  for (const auto& g : generators)
    if (g.ring() != ring && !g.ring()->same_as(*ring)) throw RingMismatch();
  return {ring, std::move(generators), false};
}

template <CoefficientField F>
GroebnerBasis<F> groebner_basis(const RingPtr<F>& ring, const FreeModule& ambient,
                                const std::vector<Vector<F>>& generators) {
  GroebnerEngine<F> engine(ring, ambient);
  for (const auto& g : generators) engine.add_generator(g);
  engine.complete();
  return engine.basis();
}

template <CoefficientField F>
GroebnerBasis<F> tracked_groebner_basis(const RingPtr<F>& ring, const FreeModule& ambient,
                                        const std::vector<Vector<F>>& generators) {
  GroebnerEngine<F> engine(ring, ambient, std::max<std::size_t>(generators.size(), 1));
  for (std::size_t i = 0; i < generators.size(); ++i) engine.add_generator(generators[i], i);
  engine.complete();
  auto gb = engine.basis();
  return GroebnerBasis<F>(gb.ring(), gb.ambient(), gb.elements(), gb.representations(), generators.size());
}

template <CoefficientField F>
GroebnerBasis<F> groebner_basis(const IdealBasis<F>& ideal) {
  std::vector<Vector<F>> gens;
  for (const auto& g : ideal.generators) gens.push_back(unit_vector(g, 0));
  return groebner_basis(ideal.ring, FreeModule::of_rank(1), gens);
}

template <CoefficientField F>
IdealBasis<F> buchberger(const IdealBasis<F>& basis, std::optional<MonomialOrder> order) {
  if (basis.generators.empty() && !basis.ring->has_hypersurface()) return {basis.ring, {}, true};
  for (const auto& g : basis.generators)
    if (g.ring() != basis.ring && !g.ring()->same_as(*basis.ring)) throw RingMismatch();
  RingPtr<F> ring = basis.ring;
  IdealBasis<F> source = basis;
  if (order && *order != ring->order()) {
    ring = ring->with_order(*order);
    source.ring = ring;
    for (auto& g : source.generators) g = g.in_ring(ring);
  }
  auto gb = groebner_basis(source);
  IdealBasis<F> out{ring, {}, true};
  for (const auto& e : gb.elements()) out.generators.push_back(component(ring, e, 0));
  return out;
}

template <CoefficientField F>
SubmoduleBasis<F> buchberger(const SubmoduleBasis<F>& basis) {
  auto gb = groebner_basis(basis.ring, basis.ambient, basis.generators);
  return {basis.ring, basis.ambient, gb.elements(), true};
}

template <CoefficientField F>
Polynomial<F> normal_form(const Polynomial<F>& f, const IdealBasis<F>& gb) {
  if (!gb.groebner) throw NotGroebnerError();
  std::vector<Vector<F>> elems;
  for (const auto& g : gb.generators) elems.push_back(unit_vector(g, 0));
  GroebnerBasis<F> view(gb.ring, FreeModule::of_rank(1), std::move(elems));
  return component(gb.ring, view.normal_form(unit_vector(f.in_ring(gb.ring), 0)), 0);
}

template <CoefficientField F>
Vector<F> normal_form(const Vector<F>& v, const SubmoduleBasis<F>& gb) {
  if (!gb.groebner) throw NotGroebnerError();
  GroebnerBasis<F> view(gb.ring, gb.ambient, gb.generators);
  return view.normal_form(v);
}

template <CoefficientField F>
bool ideal_contains(const IdealBasis<F>& ideal, const Polynomial<F>& f) {
  auto gb = groebner_basis(ideal);
  return gb.contains(unit_vector(f, 0));
}

template <CoefficientField F>
bool ideal_subset(const IdealBasis<F>& a, const IdealBasis<F>& b) {
  auto gb = groebner_basis(b);
  for (const auto& g : a.generators)
    if (!gb.contains(unit_vector(g, 0))) return false;
  if (a.ring->has_hypersurface() && !b.ring->has_hypersurface()) return false;
  return true;
}

template <CoefficientField F>
bool same_ideal(const IdealBasis<F>& a, const IdealBasis<F>& b) {
  return ideal_subset(a, b) && ideal_subset(b, a);
}

template <CoefficientField F>
SubmoduleBasis<F> syzygies(const GroebnerBasis<F>& gb) {
  const Ring<F>& ring = *gb.ring();
  const F& k = ring.field();
  const auto& g = gb.elements();
  const std::size_t s = g.size();
  std::vector<int> degrees(s);
  for (std::size_t i = 0; i < s; ++i) degrees[i] = gb.degree(i);

  struct Candidate {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Candidate> cands;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j)
      if (g[i].lead().pos == g[j].lead().pos)
        cands.push_back({i, j, Monomial::lcm(g[i].lead().mono, g[j].lead().mono)});
  std::stable_sort(cands.begin(), cands.end(), [&](const Candidate& a, const Candidate& b) {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    return ring.compare(a.lcm, b.lcm) < 0;
  });

  std::vector<std::vector<std::size_t>> adjacency(s);
  auto connected = [&](std::size_t from, std::size_t to, const Monomial& bound) {
    std::vector<char> seen(s, 0);
    std::vector<std::size_t> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      if (u == to) return true;
      for (auto w : adjacency[u])
        if (!seen[w] && g[w].lead().mono.divides(bound)) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    return false;
  };

  SubmoduleBasis<F> out{gb.ring(), FreeModule(degrees), {}, false};
  const auto minus_one = k.neg(k.one());
  for (const auto& c : cands) {
    if (connected(c.i, c.j, c.lcm)) continue;
    adjacency[c.i].push_back(c.j);
    adjacency[c.j].push_back(c.i);
    const Monomial mi = c.lcm.quotient(g[c.i].lead().mono);
    const Monomial mj = c.lcm.quotient(g[c.j].lead().mono);
    Vector<F> spoly = add_multiple(ring, scale(ring, g[c.i], k.one(), mi), minus_one, mj, g[c.j]);
    auto div = gb.divide(spoly);
    if (!div.remainder.is_zero()) throw std::logic_error("S-pair did not reduce to zero: input is not a Groebner basis");
    std::vector<VectorTerm<F>> terms = {{static_cast<std::uint32_t>(c.i), mi, k.one()},
                                        {static_cast<std::uint32_t>(c.j), mj, minus_one}};
    for (const auto& q : div.quotients.terms) terms.push_back({q.pos, q.mono, k.neg(q.coeff)});
    auto syz = make_vector(ring, std::move(terms));
    if (!syz.is_zero()) out.generators.push_back(std::move(syz));
  }
  return out;
}

template <CoefficientField F>
SubmoduleBasis<F> syzygies(const SubmoduleBasis<F>& gb) {
  if (!gb.groebner) throw NotGroebnerError();
  return syzygies(GroebnerBasis<F>(gb.ring, gb.ambient, gb.generators));
}

template <CoefficientField F>
Vector<F> reduce_mod_hypersurface(const Ring<F>& ring, const Vector<F>& v) {
  if (!ring.has_hypersurface() || v.is_zero()) return v;
  std::uint32_t rank = 0;
  for (const auto& t : v.terms) rank = std::max(rank, t.pos + 1);
  std::vector<Vector<F>> elems;
  for (std::uint32_t k = 0; k < rank; ++k) elems.push_back(hypersurface_vector(ring, k));
  // The basis needs shared ownership of the ring; alias without taking ownership.
  RingPtr<F> alias(RingPtr<F>{}, &ring);
  GroebnerBasis<F> gb(alias, FreeModule::of_rank(rank), std::move(elems));
  return gb.normal_form(v);
}

template <CoefficientField F>
Polynomial<F> reduce_mod_hypersurface(const Polynomial<F>& p) {
  if (!p.ring()->has_hypersurface()) return p;
  return component(p.ring(), reduce_mod_hypersurface(*p.ring(), unit_vector(p, 0)), 0);
}

template <CoefficientField F>
std::vector<Vector<F>> syzygies_of(const GroebnerBasis<F>& gb, const std::vector<Vector<F>>& columns) {
  const RingPtr<F>& ring = gb.ring();
  const F& k = ring->field();
  std::vector<Vector<F>> out;
  if (columns.empty()) return out;
  if (gb.tracked_count() != columns.size()) throw std::invalid_argument("basis is not tracked in these columns");
  const auto& reps = gb.representations();
  auto push = [&](Vector<F> u) {
    u = reduce_mod_hypersurface(*ring, u);
    if (!u.is_zero()) out.push_back(std::move(u));
  };
  for (const auto& sigma : syzygies(gb).generators) push(combine_representations(*ring, sigma, reps));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    auto div = gb.divide(columns[c]);
    push(subtract(*ring, basis_vector(*ring, static_cast<std::uint32_t>(c)),
                  combine_representations(*ring, div.quotients, reps)));
  }
  if (ring->has_hypersurface()) {
    for (std::uint32_t pos = 0; pos < gb.ambient().rank(); ++pos) {
      auto div = gb.divide(hypersurface_vector(*ring, pos));
      push(scale(*ring, combine_representations(*ring, div.quotients, reps), k.neg(k.one())));
    }
  }
  return out;
}

template <CoefficientField F>
std::vector<Vector<F>> syzygies_of(const RingPtr<F>& ring, const FreeModule& ambient,
                                   const std::vector<Vector<F>>& columns, const FreeModule& source) {
  if (columns.size() != source.rank()) throw std::invalid_argument("column count does not match source rank");
  if (columns.empty()) return {};
  return syzygies_of(tracked_groebner_basis(ring, ambient, columns), columns);
}

template <CoefficientField F>
std::vector<Vector<F>> minimal_generators(const RingPtr<F>& ring, const FreeModule& ambient,
                                          const std::vector<Vector<F>>& candidates) {
  std::vector<std::pair<int, Vector<F>>> sorted;
  for (const auto& c : candidates) {
    auto r = reduce_mod_hypersurface(*ring, c);
    if (!r.is_zero()) sorted.emplace_back(vector_degree(r, ambient.degrees), std::move(r));
  }
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  GroebnerEngine<F> engine(ring, ambient);
  std::vector<Vector<F>> out;
  for (auto& [d, v] : sorted) {
    engine.complete_through(d);
    if (engine.reduce(v).is_zero()) continue;
    engine.add_generator(v);
    out.push_back(std::move(v));
  }
  return out;
}

template <CoefficientField F>
IdealBasis<F> ideal_power(const IdealBasis<F>& a, unsigned n) {
  if (n == 0) throw std::invalid_argument("ideal power exponent must be positive");
  const auto& gens = a.generators;
  IdealBasis<F> out{a.ring, {}, false};
  if (gens.empty()) return out;
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    Polynomial<F> p = gens[idx[0]];
    for (unsigned t = 1; t < n; ++t) p = p * gens[idx[t]];
    if (!p.is_zero()) out.generators.push_back(std::move(p));
    // next multiset (non-decreasing index tuple)
    int pos = static_cast<int>(n) - 1;
    while (pos >= 0 && idx[pos] + 1 == gens.size()) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (unsigned t = pos + 1; t < n; ++t) idx[t] = idx[pos];
  }
  return out;
}

template <CoefficientField F>
IdealBasis<F> ideal_sum(const IdealBasis<F>& a, const IdealBasis<F>& b) {
  IdealBasis<F> out{a.ring, a.generators, false};
  for (const auto& g : b.generators) out.generators.push_back(g.in_ring(a.ring));
  return out;
}

template <CoefficientField F>
IdealBasis<F> ideal_intersection(const IdealBasis<F>& a, const IdealBasis<F>& b) {
  const auto& ring = a.ring;
  std::vector<Vector<F>> cols;
  std::vector<int> degs;
  for (const auto& g : a.generators) {
    cols.push_back(unit_vector(g, 0));
    degs.push_back(g.degree());
  }
  for (const auto& g : b.generators) {
    cols.push_back(unit_vector(g, 0));
    degs.push_back(g.degree());
  }
  IdealBasis<F> out{ring, {}, false};
  if (a.generators.empty() || b.generators.empty()) return out;
  auto syz = syzygies_of(ring, FreeModule::of_rank(1), cols, FreeModule(degs));
  for (const auto& u : syz) {
    Polynomial<F> sum(ring);
    for (std::uint32_t i = 0; i < a.generators.size(); ++i) sum = sum + component(ring, u, i) * a.generators[i];
    sum = reduce_mod_hypersurface(sum);
    if (!sum.is_zero()) out.generators.push_back(std::move(sum));
  }
  return out;
}

template <CoefficientField F>
IdealBasis<F> module_colon(const RingPtr<F>& ring, const FreeModule& ambient, const std::vector<Vector<F>>& generators,
                           const Vector<F>& v) {
  IdealBasis<F> out{ring, {}, false};
  if (v.is_zero()) {
    out.generators.push_back(Polynomial<F>::constant(ring, ring->field().one()));
    return out;
  }
  std::vector<Vector<F>> cols{v};
  std::vector<int> degs{vector_degree(v, ambient.degrees)};
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    cols.push_back(g);
    degs.push_back(vector_degree(g, ambient.degrees));
  }
  for (const auto& u : syzygies_of(ring, ambient, cols, FreeModule(degs))) {
    auto c = component(ring, u, 0);
    if (!c.is_zero()) out.generators.push_back(std::move(c));
  }
  return out;
}

template <CoefficientField F>
ColonResult<F> colon_and_saturation(const IdealBasis<F>& ideal, const Polynomial<F>& f) {
  if (f.is_zero()) throw std::invalid_argument("colon by the zero polynomial");
  const auto& ring = ideal.ring;
  std::vector<Vector<F>> gens;
  for (const auto& g : ideal.generators) gens.push_back(unit_vector(g, 0));
  auto colon = [&](const IdealBasis<F>& i) {
    std::vector<Vector<F>> gv;
    for (const auto& g : i.generators) gv.push_back(unit_vector(g, 0));
    return buchberger(module_colon(ring, FreeModule::of_rank(1), gv, unit_vector(f.in_ring(ring), 0)));
  };
  ColonResult<F> out{colon(ideal), buchberger(ideal), 0};
  IdealBasis<F> current = out.saturation;
  for (;;) {
    auto next = colon(current);
    if (same_ideal(next, current)) break;
    current = std::move(next);
    if (++out.saturation_steps > kSaturationCap) throw std::runtime_error("saturation did not stabilize within cap");
  }
  out.saturation = current;
  return out;
}

template <CoefficientField F>
SubmoduleColonResult<F> colon_and_saturation(const SubmoduleBasis<F>& module, const Polynomial<F>& f) {
  if (f.is_zero()) throw std::invalid_argument("colon by the zero polynomial");
  const auto& ring = module.ring;
  const auto& ambient = module.ambient;
  const std::size_t r = ambient.rank();
  auto colon = [&](const std::vector<Vector<F>>& gens) {
    std::vector<Vector<F>> cols;
    std::vector<int> degs;
    for (std::uint32_t k = 0; k < r; ++k) {
      cols.push_back(unit_vector(f.in_ring(ring), k));
      degs.push_back(f.degree() + ambient.degrees[k]);
    }
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      cols.push_back(g);
      degs.push_back(vector_degree(g, ambient.degrees));
    }
    std::vector<Vector<F>> out;
    for (const auto& u : syzygies_of(ring, ambient, cols, FreeModule(degs))) {
      std::vector<VectorTerm<F>> head;
      for (const auto& t : u.terms)
        if (t.pos < r) head.push_back(t);
      auto v = make_vector(*ring, std::move(head));
      if (!v.is_zero()) out.push_back(std::move(v));
    }
    return groebner_basis(ring, ambient, out).elements();
  };
  auto contains_all = [&](const std::vector<Vector<F>>& a, const std::vector<Vector<F>>& b) {
    auto gb = groebner_basis(ring, ambient, b);
    return std::all_of(a.begin(), a.end(), [&](const Vector<F>& v) { return gb.contains(v); });
  };
  SubmoduleColonResult<F> out;
  out.colon = {ring, ambient, colon(module.generators), true};
  auto current = groebner_basis(ring, ambient, module.generators).elements();
  for (;;) {
    auto next = colon(current);
    if (contains_all(next, current)) break;
    current = std::move(next);
    if (++out.saturation_steps > kSaturationCap) throw std::runtime_error("saturation did not stabilize within cap");
  }
  out.saturation = {ring, ambient, current, true};
  return out;
}

template <CoefficientField F>
bool satisfies_buchberger_criterion(const GroebnerBasis<F>& gb) {
  const Ring<F>& ring = *gb.ring();
  const F& k = ring.field();
  const auto& g = gb.elements();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (g[i].lead().pos != g[j].lead().pos) continue;
      Monomial l = Monomial::lcm(g[i].lead().mono, g[j].lead().mono);
      auto ci = k.inv(g[i].lead().coeff);
      auto cj = k.neg(k.inv(g[j].lead().coeff));
      auto s = add_multiple(ring, scale(ring, g[i], ci, l.quotient(g[i].lead().mono)), cj,
                            l.quotient(g[j].lead().mono), g[j]);
      if (!gb.normal_form(s).is_zero()) return false;
    }
  return true;
}

#define GLC_INSTANTIATE(F)                                                                                       \
  template class GroebnerBasis<F>;                                                                               \
  template class GroebnerEngine<F>;                                                                              \
  template IdealBasis<F> make_ideal<F>(const RingPtr<F>&, std::vector<Polynomial<F>>);                           \
  template IdealBasis<F> buchberger<F>(const IdealBasis<F>&, std::optional<MonomialOrder>);                      \
  template SubmoduleBasis<F> buchberger<F>(const SubmoduleBasis<F>&);                                            \
  template GroebnerBasis<F> groebner_basis<F>(const RingPtr<F>&, const FreeModule&, const std::vector<Vector<F>>&); \
  template GroebnerBasis<F> groebner_basis<F>(const IdealBasis<F>&);                                             \
  template GroebnerBasis<F> tracked_groebner_basis<F>(const RingPtr<F>&, const FreeModule&,                      \
                                                      const std::vector<Vector<F>>&);                            \
  template Polynomial<F> normal_form<F>(const Polynomial<F>&, const IdealBasis<F>&);                             \
  template Vector<F> normal_form<F>(const Vector<F>&, const SubmoduleBasis<F>&);                                 \
  template bool ideal_contains<F>(const IdealBasis<F>&, const Polynomial<F>&);                                   \
  template bool same_ideal<F>(const IdealBasis<F>&, const IdealBasis<F>&);                                       \
  template bool ideal_subset<F>(const IdealBasis<F>&, const IdealBasis<F>&);                                     \
  template SubmoduleBasis<F> syzygies<F>(const GroebnerBasis<F>&);                                               \
  template SubmoduleBasis<F> syzygies<F>(const SubmoduleBasis<F>&);                                              \
  template std::vector<Vector<F>> syzygies_of<F>(const RingPtr<F>&, const FreeModule&,                           \
                                                 const std::vector<Vector<F>>&, const FreeModule&);              \
  template std::vector<Vector<F>> syzygies_of<F>(const GroebnerBasis<F>&, const std::vector<Vector<F>>&);       \
  template std::vector<Vector<F>> minimal_generators<F>(const RingPtr<F>&, const FreeModule&,                    \
                                                        const std::vector<Vector<F>>&);                          \
  template Vector<F> reduce_mod_hypersurface<F>(const Ring<F>&, const Vector<F>&);                               \
  template Polynomial<F> reduce_mod_hypersurface<F>(const Polynomial<F>&);                                       \
  template IdealBasis<F> ideal_power<F>(const IdealBasis<F>&, unsigned);                                         \
  template IdealBasis<F> ideal_sum<F>(const IdealBasis<F>&, const IdealBasis<F>&);                               \
  template IdealBasis<F> ideal_intersection<F>(const IdealBasis<F>&, const IdealBasis<F>&);                      \
  template IdealBasis<F> module_colon<F>(const RingPtr<F>&, const FreeModule&, const std::vector<Vector<F>>&,    \
                                         const Vector<F>&);                                                      \
  template ColonResult<F> colon_and_saturation<F>(const IdealBasis<F>&, const Polynomial<F>&);                   \
  template SubmoduleColonResult<F> colon_and_saturation<F>(const SubmoduleBasis<F>&, const Polynomial<F>&);      \
  template bool satisfies_buchberger_criterion<F>(const GroebnerBasis<F>&);

GLC_INSTANTIATE(PrimeField)
GLC_INSTANTIATE(RationalField)

}  // namespace glc
