#pragma once

// Buchberger engine for ideals and submodules of graded free modules.
//
// Module elements are compared position-over-term: a smaller basis index is
// greater, ties broken by the ring's monomial order. When the ring carries a
// hypersurface f, every computation adjoins f*e_k for each basis vector e_k,
// so bases and normal forms are taken modulo f.

#include <cstdint>
#include <optional>
#include <vector>

#include "glc/polynomial.hpp"

namespace glc {

/// Graded free module: rank and the degree of each basis element.
struct FreeModule {
  std::vector<int> degrees;

  FreeModule() = default;
  explicit FreeModule(std::vector<int> d) : degrees(std::move(d)) {}
  static FreeModule of_rank(std::size_t rank, int degree = 0) { return FreeModule(std::vector<int>(rank, degree)); }

  std::size_t rank() const { return degrees.size(); }
  friend bool operator==(const FreeModule&, const FreeModule&) = default;
};

class NotGroebnerError : public std::invalid_argument {
 public:
  NotGroebnerError() : std::invalid_argument("basis is not flagged as a Groebner basis") {}
};

template <CoefficientField F>
struct Division {
  Vector<F> quotients;  ///< position i = coefficient of basis element i
  Vector<F> remainder;
};

/// Reduced, monic Groebner basis of a submodule U of a graded free module
/// (with the hypersurface multiples included). Optionally records, for each
/// element, its expression in a set of tracked generators.
template <CoefficientField F>
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr<F> ring, FreeModule ambient, std::vector<Vector<F>> elements,
                std::vector<Vector<F>> representations = {}, std::size_t tracked = 0);

  const RingPtr<F>& ring() const { return ring_; }
  const FreeModule& ambient() const { return ambient_; }
  const std::vector<Vector<F>>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool tracked() const { return !reps_.empty() || (elements_.empty() && tracked_ > 0); }
  /// reps[i] expresses elements[i] in the tracked generators, modulo the untracked ones.
  const std::vector<Vector<F>>& representations() const { return reps_; }
  std::size_t tracked_count() const { return tracked_; }
  /// Degree of element i.
  int degree(std::size_t i) const { return vector_degree(elements_[i], ambient_.degrees); }

  Vector<F> normal_form(const Vector<F>& v) const;
  Division<F> divide(const Vector<F>& v) const;
  bool contains(const Vector<F>& v) const { return normal_form(v).is_zero(); }
  /// Expresses v in the tracked generators: v = sum u_c h_c (mod untracked). Throws if v is not in U.
  Vector<F> lift(const Vector<F>& v) const;

  /// dim_k (ambient / U) in the given degree, by counting standard monomials.
  long long hilbert_function(int degree) const;
  /// True iff ambient / U has finite length.
  bool finite_colength() const;
  /// dim_k (ambient / U), assuming finite colength.
  long long colength() const;
  /// U is the whole ambient module.
  bool is_everything() const;
  std::vector<Monomial> leading_monomials(std::uint32_t pos) const;

 private:
  const Vector<F>* find_reducer(std::uint32_t pos, const Monomial& m, std::size_t* index) const;

  RingPtr<F> ring_;
  FreeModule ambient_;
  std::vector<Vector<F>> elements_;
  std::vector<Vector<F>> reps_;
  std::size_t tracked_ = 0;
  std::vector<std::vector<std::size_t>> by_position_;
};

/// Incremental homogeneous Buchberger with Gebauer-Moeller pair elimination
/// and the normal selection strategy. Items are processed in increasing
/// degree; after complete_through(D) the current elements form a Groebner
/// basis through degree D, which is what minimal-generator selection needs.
template <CoefficientField F>
class GroebnerEngine {
 public:
  /// `tracked` > 0 records representations in that many tracked generators.
  GroebnerEngine(RingPtr<F> ring, FreeModule ambient, std::size_t tracked = 0);

  /// Queues a generator; `tracked_index` names it among the tracked generators.
  void add_generator(Vector<F> v, std::optional<std::size_t> tracked_index = std::nullopt);
  /// Adopts the elements of an existing Groebner basis (same ambient). No
  /// pairs are formed among them; their representations are treated as zero.
  void seed(const GroebnerBasis<F>& gb);

  void complete_through(int degree);
  void complete();
  /// Full normal form with respect to the current elements.
  Vector<F> reduce(const Vector<F>& v) const;
  /// Interreduced, monic basis of everything added so far (call complete() first).
  GroebnerBasis<F> basis() const;

  std::size_t pair_count() const { return pairs_.size(); }

 private:
  struct Element {
    Vector<F> v;
    Vector<F> rep;
    int degree;
    bool active;
  };
  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    std::uint32_t pos;
    int degree;
  };
  struct Pending {
    Vector<F> v;
    Vector<F> rep;
    int degree;
  };

  void top_reduce(Vector<F>& v, Vector<F>& rep) const;
  void insert(Vector<F> v, Vector<F> rep);
  void update(std::size_t k);
  std::optional<int> next_degree() const;

  RingPtr<F> ring_;
  FreeModule ambient_;
  std::size_t tracked_;
  bool ideal_case_;
  std::vector<Element> elems_;
  std::vector<Pair> pairs_;
  std::vector<Pending> pending_;
};

/// Spec-level bases: a generator list plus a flag recording that it is a
/// reduced Groebner basis for the ring's order.
template <CoefficientField F>
struct IdealBasis {
  RingPtr<F> ring;
  std::vector<Polynomial<F>> generators;
  bool groebner = false;
};

template <CoefficientField F>
struct SubmoduleBasis {
  RingPtr<F> ring;
  FreeModule ambient;
  std::vector<Vector<F>> generators;
  bool groebner = false;
};

template <CoefficientField F>
IdealBasis<F> make_ideal(const RingPtr<F>& ring, std::vector<Polynomial<F>> generators);

/// Reduced Groebner basis (hypersurface adjoined). `order` re-sorts into a
/// ring with that order when it differs from the ring's own.
template <CoefficientField F>
IdealBasis<F> buchberger(const IdealBasis<F>& basis, std::optional<MonomialOrder> order = std::nullopt);
template <CoefficientField F>
SubmoduleBasis<F> buchberger(const SubmoduleBasis<F>& basis);

template <CoefficientField F>
GroebnerBasis<F> groebner_basis(const RingPtr<F>& ring, const FreeModule& ambient,
                                const std::vector<Vector<F>>& generators);
template <CoefficientField F>
GroebnerBasis<F> groebner_basis(const IdealBasis<F>& ideal);
/// Groebner basis recording representations in `generators`.
template <CoefficientField F>
GroebnerBasis<F> tracked_groebner_basis(const RingPtr<F>& ring, const FreeModule& ambient,
                                        const std::vector<Vector<F>>& generators);

template <CoefficientField F>
Polynomial<F> normal_form(const Polynomial<F>& f, const IdealBasis<F>& gb);
template <CoefficientField F>
Vector<F> normal_form(const Vector<F>& v, const SubmoduleBasis<F>& gb);

/// Ideal membership of f in the ideal generated by `ideal` (any generators).
template <CoefficientField F>
bool ideal_contains(const IdealBasis<F>& ideal, const Polynomial<F>& f);
/// Equality of ideals via reduced bases.
template <CoefficientField F>
bool same_ideal(const IdealBasis<F>& a, const IdealBasis<F>& b);
/// a is contained in b.
template <CoefficientField F>
bool ideal_subset(const IdealBasis<F>& a, const IdealBasis<F>& b);

/// Schreyer syzygies of a Groebner basis: generators of the syzygy module of
/// its elements (over the polynomial ring), living in the free module whose
/// basis degrees are the element degrees. Pairs whose syzygy follows from
/// others by the chain criterion are skipped.
template <CoefficientField F>
SubmoduleBasis<F> syzygies(const GroebnerBasis<F>& gb);
template <CoefficientField F>
SubmoduleBasis<F> syzygies(const SubmoduleBasis<F>& gb);

/// Syzygies over R = k[x]/(f) of arbitrary generators `columns` of a
/// submodule of `ambient`; `source` gives the column degrees. Entries come
/// back reduced modulo f, zero vectors dropped. Not minimized.
template <CoefficientField F>
std::vector<Vector<F>> syzygies_of(const RingPtr<F>& ring, const FreeModule& ambient,
                                   const std::vector<Vector<F>>& columns, const FreeModule& source);
/// Same, reusing a basis tracked in exactly `columns` (see tracked_groebner_basis).
template <CoefficientField F>
std::vector<Vector<F>> syzygies_of(const GroebnerBasis<F>& tracked, const std::vector<Vector<F>>& columns);

/// Minimal homogeneous generators (over R) of the submodule spanned by
/// `candidates`, selected in increasing degree. Zero-mod-f candidates drop.
template <CoefficientField F>
std::vector<Vector<F>> minimal_generators(const RingPtr<F>& ring, const FreeModule& ambient,
                                          const std::vector<Vector<F>>& candidates);

/// Reduces every component modulo the hypersurface equation (identity without one).
template <CoefficientField F>
Vector<F> reduce_mod_hypersurface(const Ring<F>& ring, const Vector<F>& v);
template <CoefficientField F>
Polynomial<F> reduce_mod_hypersurface(const Polynomial<F>& p);

template <CoefficientField F>
IdealBasis<F> ideal_power(const IdealBasis<F>& a, unsigned n);
template <CoefficientField F>
IdealBasis<F> ideal_sum(const IdealBasis<F>& a, const IdealBasis<F>& b);
template <CoefficientField F>
IdealBasis<F> ideal_intersection(const IdealBasis<F>& a, const IdealBasis<F>& b);

template <CoefficientField F>
struct ColonResult {
  IdealBasis<F> colon;
  IdealBasis<F> saturation;
  int saturation_steps = 0;
};

inline constexpr int kSaturationCap = 64;

/// (I : f) and (I : f^inf), the latter by iterated colon (capped).
template <CoefficientField F>
ColonResult<F> colon_and_saturation(const IdealBasis<F>& ideal, const Polynomial<F>& f);

template <CoefficientField F>
struct SubmoduleColonResult {
  SubmoduleBasis<F> colon;
  SubmoduleBasis<F> saturation;
  int saturation_steps = 0;
};
template <CoefficientField F>
SubmoduleColonResult<F> colon_and_saturation(const SubmoduleBasis<F>& module, const Polynomial<F>& f);

/// {g : g v in U} for a submodule U given by generators.
template <CoefficientField F>
IdealBasis<F> module_colon(const RingPtr<F>& ring, const FreeModule& ambient, const std::vector<Vector<F>>& generators,
                           const Vector<F>& v);

/// Every S-pair of the basis reduces to zero (exhaustive check).
template <CoefficientField F>
bool satisfies_buchberger_criterion(const GroebnerBasis<F>& gb);

}  // namespace glc
