#pragma once

// Graded homological algebra over R = k[x] or k[x]/(f): presentations,
// minimal free resolutions, Hom/tensor/Ext via subquotients, annihilators,
// Hilbert series, depth and dimension.

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glc/groebner.hpp"

namespace glc {

/// Matrix over the ring stored by columns: column c is the image of the
/// c-th source basis vector, a vector of the target module.
template <CoefficientField F>
struct GradedMap {
  RingPtr<F> ring;
  FreeModule source;
  FreeModule target;
  std::vector<Vector<F>> columns;

  GradedMap(RingPtr<F> r, FreeModule src, FreeModule tgt, std::vector<Vector<F>> cols);
  /// The zero map src -> tgt.
  static GradedMap zero(RingPtr<F> r, FreeModule src, FreeModule tgt);

  Polynomial<F> entry(std::size_t row, std::size_t col) const;
  Vector<F> apply(const Vector<F>& v) const;
  /// Every entry homogeneous of degree source twist - target twist.
  bool is_homogeneous() const;
  /// No entry is a nonzero constant.
  bool is_minimal() const;
  std::string to_string() const;
};

/// a o b, for b: X -> Y and a: Y -> Z.
template <CoefficientField F>
GradedMap<F> compose(const GradedMap<F>& a, const GradedMap<F>& b);

/// Hilbert series as numerator(t) / (1 - t)^power, numerator a Laurent polynomial.
struct HilbertSeries {
  int shift = 0;  ///< numerator = sum_k coefficients[k] t^(shift + k)
  std::vector<long long> coefficients;
  int power = 0;

  /// dim_k M_j.
  long long coefficient(int j) const;
  /// Cancels common factors (1 - t) and trims zero coefficients.
  HilbertSeries reduced() const;
  std::string to_string() const;
  friend bool operator==(const HilbertSeries& a, const HilbertSeries& b);
};

/// Chain complex of free modules F_0 <- F_1 <- ... ; maps[k] : F_{k+1} -> F_k.
/// For resolutions, bases[k] is the Groebner basis of image(maps[k]) tracked
/// in its columns, which lets callers lift through the differentials.
template <CoefficientField F>
struct Complex {
  RingPtr<F> ring;
  std::vector<FreeModule> modules;
  std::vector<GradedMap<F>> maps;
  std::vector<std::shared_ptr<const GroebnerBasis<F>>> bases;
  /// Resolution was cut at the requested length but continues.
  bool truncated = false;

  int length() const { return static_cast<int>(modules.size()) - 1; }
  FreeModule module(int k) const { return k < static_cast<int>(modules.size()) && k >= 0 ? modules[k] : FreeModule{}; }
  /// d_k : F_k -> F_{k-1} (zero map past the end).
  GradedMap<F> differential(int k) const;
  bool composes_to_zero() const;
  bool is_minimal() const;
  /// Graded Betti numbers: (homological index, degree) -> count, as text.
  std::string betti_table() const;
};

template <CoefficientField F>
class PresentedModule {
 public:
  explicit PresentedModule(GradedMap<F> presentation);
  PresentedModule(RingPtr<F> ring, FreeModule generators, std::vector<Vector<F>> relations);

  static PresentedModule zero(RingPtr<F> ring);
  static PresentedModule free(RingPtr<F> ring, FreeModule generators);
  /// R / I.
  static PresentedModule cyclic(const IdealBasis<F>& ideal, int degree = 0);

  const RingPtr<F>& ring() const { return ring_; }
  const FreeModule& generators() const { return generators_; }
  const std::vector<Vector<F>>& relations() const { return relations_; }
  FreeModule relation_degrees() const;
  GradedMap<F> presentation() const;

  /// Groebner basis of the relation submodule (hypersurface multiples included). Cached.
  const GroebnerBasis<F>& relation_basis() const;
  bool is_zero() const;
  long long hilbert_function(int degree) const;
  /// dim_k M if finite.
  std::optional<long long> length() const;
  /// [min generator degree - slack, max generator/relation degree + slack].
  std::pair<int, int> degree_window(int slack = 2) const;
  std::string to_string() const;

  const IdealBasis<F>& cached_annihilator() const;
  const HilbertSeries& cached_hilbert_series() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::optional<GroebnerBasis<F>> basis;
    std::optional<IdealBasis<F>> annihilator;
    std::optional<HilbertSeries> series;
  };

  RingPtr<F> ring_;
  FreeModule generators_;
  std::vector<Vector<F>> relations_;
  std::shared_ptr<Cache> cache_;
};

/// Removes generators killed by unit entries (Gaussian pruning), then keeps
/// minimal relations: an isomorphic module with a minimal presentation. The
/// zero module comes back with a rank-0 generator module.
template <CoefficientField F>
PresentedModule<F> minimal_presentation(const PresentedModule<F>& M);

/// Minimal graded free resolution up to homological degree `max_length`.
template <CoefficientField F>
Complex<F> minimal_free_resolution(const PresentedModule<F>& M, int max_length);
/// Resolution that keeps the given generators of M as F_0 (F_0 need not be
/// minimal; the later steps are). Used where presentations must stay aligned.
template <CoefficientField F>
Complex<F> resolve_keeping_generators(const PresentedModule<F>& M, int max_length);

/// Projective dimension; nullopt means infinite (over a hypersurface, a
/// nonzero F_{d+1} already contradicts Auslander-Buchsbaum).
template <CoefficientField F>
std::optional<int> projective_dimension(const PresentedModule<F>& M);

/// Hom(F, N) for a free module F: ambient free module and relations.
template <CoefficientField F>
struct HomTerm {
  FreeModule ambient;
  std::vector<Vector<F>> relations;
};
template <CoefficientField F>
HomTerm<F> hom_term(const FreeModule& free, const PresentedModule<F>& N);
/// Columns of Hom(d, N) : Hom(target(d), N) -> Hom(source(d), N), indexed by
/// the ambient basis of Hom(target(d), N).
template <CoefficientField F>
std::vector<Vector<F>> hom_induced(const GradedMap<F>& d, std::size_t n_rank);

/// Presentation of the subquotient (K + B) / B for K, B submodules of `ambient`
/// given by generators.
template <CoefficientField F>
PresentedModule<F> subquotient(const RingPtr<F>& ring, const FreeModule& ambient, const std::vector<Vector<F>>& K,
                               const std::vector<Vector<F>>& B);

/// Cycles of Hom(F_., N) at i: generators in the ambient of Hom(F_i, N).
template <CoefficientField F>
std::vector<Vector<F>> hom_cycles(const Complex<F>& resolution, int i, const PresentedModule<F>& N);
/// Boundaries plus relations of Hom(F_i, N) in its ambient.
template <CoefficientField F>
std::vector<Vector<F>> hom_boundaries(const Complex<F>& resolution, int i, const PresentedModule<F>& N);

class InsufficientResolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ext^i(M, N) from a resolution of M (any resolution, minimal or not).
template <CoefficientField F>
PresentedModule<F> ext(int i, const Complex<F>& resolution, const PresentedModule<F>& N);
template <CoefficientField F>
PresentedModule<F> ext(int i, const PresentedModule<F>& M, const PresentedModule<F>& N);
template <CoefficientField F>
bool ext_is_zero(int i, const Complex<F>& resolution, const PresentedModule<F>& N);

/// Hom_R(N, M).
template <CoefficientField F>
PresentedModule<F> hom_module(const PresentedModule<F>& N, const PresentedModule<F>& M);
template <CoefficientField F>
PresentedModule<F> tensor(const PresentedModule<F>& M, const PresentedModule<F>& N);
template <CoefficientField F>
PresentedModule<F> quotient_by_ideal(const PresentedModule<F>& M, const IdealBasis<F>& a);
template <CoefficientField F>
PresentedModule<F> direct_sum(const std::vector<PresentedModule<F>>& parts);
/// R / (x_1, ..., x_n) = k.
template <CoefficientField F>
PresentedModule<F> residue_field(const RingPtr<F>& ring);

template <CoefficientField F>
IdealBasis<F> annihilator(const PresentedModule<F>& M);
template <CoefficientField F>
HilbertSeries hilbert_series(const PresentedModule<F>& M);

/// dim R/I via maximal independent sets of in(I); -1 for the unit ideal.
template <CoefficientField F>
int dimension_of_quotient(const IdealBasis<F>& I);
/// Krull dimension of M (-1 for the zero module).
template <CoefficientField F>
int krull_dim(const PresentedModule<F>& M);

/// dim_k Ext^i(k, M), summed over all degrees.
template <CoefficientField F>
long long bass_number(int i, const PresentedModule<F>& M);
template <CoefficientField F>
int depth(const PresentedModule<F>& M);

}  // namespace glc
