#pragma once

// Top generalized local cohomology H^d_a(M, N): the vanishing predictor,
// attached primes of the top module, the vanishing bounds, and a brute-force
// direct-limit oracle over colim_n Ext^i(M/a^n M, N).

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "glc/primes.hpp"

namespace glc {

/// Violated instance hypothesis (inhomogeneous data, infinite pd M, ...).
class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <CoefficientField F>
struct Instance {
  std::string id;
  RingPtr<F> ring;
  IdealBasis<F> a;
  PresentedModule<F> M;
  PresentedModule<F> N;

  int d() const { return ring->dimension(); }
};

/// Checks homogeneity, the hypersurface degree and (over a hypersurface) that
/// pd M is finite. Throws InstanceError.
template <CoefficientField F>
void validate(const Instance<F>& inst);

enum class Vanishing { vanishes, nonvanishes, unknown };
std::string to_string(Vanishing v);

template <CoefficientField F>
struct VanishingVerdict {
  Vanishing value = Vanishing::unknown;
  /// Primes of Ass M ∩ Supp N with dim R/(a + p) = 0.
  std::vector<PrimeIdeal<F>> witnesses;
  /// Ass M ∩ Supp N.
  std::vector<PrimeIdeal<F>> candidates;
  bool complete = true;
};

/// H^d_a(M, N) = 0 iff dim R/(a + p) > 0 for every p in Ass M ∩ Supp N.
template <CoefficientField F>
VanishingVerdict<F> predict_top_vanishing(const Instance<F>& inst);

template <CoefficientField F>
struct AttachedPrimes {
  std::vector<PrimeIdeal<F>> primes;        ///< attached primes of H^d_a(M, N)
  std::vector<PrimeIdeal<F>> ass_supp;      ///< Ass M ∩ Supp N
  std::vector<PrimeIdeal<F>> hom_ass;       ///< Ass Hom(N, M)
  bool complete = true;
  /// Ass Hom(N, M) == Ass M ∩ Supp N; nullopt when a prime search was incomplete.
  std::optional<bool> identity_holds;
};

template <CoefficientField F>
AttachedPrimes<F> top_attached_primes(const Instance<F>& inst);

struct BoundsReport {
  int pdM = 0;
  int dimTensor = -1;
  std::optional<int> gradeT;  ///< nullopt: Ext^i(M/aM, N) = 0 for all i
  int araUpper = 0;
  int depthN = 0;
  int d = 0;

  /// min(pd M + dim M⊗N, ara + pd M, d); H^i vanishes above it.
  int vanishing_bound() const;
};

/// Minimal number of generators of a left after dropping each generator that
/// lies in the ideal of the remaining ones.
template <CoefficientField F>
int arithmetic_rank_upper(const IdealBasis<F>& a);

template <CoefficientField F>
BoundsReport bounds(const Instance<F>& inst);

struct OracleOptions {
  int nmax = 6;
  int window = 2;
  int degree_slack = 2;
  /// Perturbs every chain-map lift by a boundary; the induced maps on Ext must not change.
  bool alternate_lifts = false;
};

enum class OracleVerdict { zero, nonzero, inconclusive };
std::string to_string(OracleVerdict v);

struct OracleTrace {
  int index = 0;
  int nmax = 0;
  int window = 0;
  int degree_lo = 0;
  int degree_hi = 0;
  /// ext_dims[n - 1][j - degree_lo] = dim_k Ext^i(M/a^n M, N)_j.
  std::vector<std::vector<long long>> ext_dims;
  /// image_dims[s][t - source][j - degree_lo]: dimension of the image of the
  /// source level `first_source() + s` in level t. Sources are the window
  /// levels nmax - 2 window + 1 .. nmax - window, so every image counted at
  /// nmax has passed through at least `window` transitions.
  std::vector<std::vector<std::vector<long long>>> image_dims;
  /// Per degree: the image dimension at nmax when every source agrees and no
  /// source image changed over the last `window` transitions, or -1.
  std::vector<long long> stable_dims;
  OracleVerdict verdict = OracleVerdict::inconclusive;

  int first_source() const { return std::max(1, nmax - 2 * window + 1); }
  /// Stable dimension in degree j, nullopt when unsettled or outside the window.
  std::optional<long long> stable(int j) const;
  /// Image dimensions never grow along the direct system.
  bool monotone() const;
};

/// The system M/a^n M for n = 1..nmax with Ext^i and transition maps for all
/// i <= max_index, sharing resolutions and chain maps between indices.
template <CoefficientField F>
class DirectSystem {
 public:
  DirectSystem(const Instance<F>& inst, int max_index, OracleOptions options = {});

  OracleTrace trace(int i) const;
  int max_index() const { return max_index_; }

 private:
  struct Level {
    Complex<F> resolution;
    /// chain[k] : F^{n+1}_k -> F^n_k lifting the surjection (empty on the last level).
    std::vector<GradedMap<F>> chain;
  };

  void lift_chain_maps(std::size_t n);
  GradedMap<F> hom_transition(std::size_t n, int i) const;

  Instance<F> inst_;
  int max_index_;
  OracleOptions options_;
  std::vector<Level> levels_;
};

template <CoefficientField F>
OracleTrace oracle_colimit(const Instance<F>& inst, int i, const OracleOptions& options = {});

enum class Agreement { agree, disagree, not_applicable };
std::string to_string(Agreement a);

template <CoefficientField F>
struct VanishingReport {
  std::string id;
  VanishingVerdict<F> predictor;
  OracleTrace oracle;
  std::optional<BoundsReport> bounds;
  AttachedPrimes<F> attached;
  Agreement agreement = Agreement::not_applicable;

  bool hard_failure() const {
    return agreement == Agreement::disagree || (attached.identity_holds && !*attached.identity_holds);
  }
};

template <CoefficientField F>
VanishingReport<F> cross_validate(const Instance<F>& inst, const OracleOptions& options = {});

}  // namespace glc
