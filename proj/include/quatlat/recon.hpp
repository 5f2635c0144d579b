/** @file recon.hpp
 *  @brief Recovering Gross-lattice minima and Gram matrices from theta data.
 */
#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quatlat/lattice.hpp"
#include "quatlat/quat.hpp"
#include "quatlat/theta.hpp"

namespace quatlat {

/// Raised when a claimed structural constraint fails on actual data.
class ConstraintViolated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a theta coefficient falls outside the case tables.
class CaseViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AmbiguousSigns : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Theta series too short for the requested step.
class InsufficientTerms : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// k ≥ 1 with N(β₁)N(β₂) − ¼Tr(β₁β̄₂)² = 4pk.
Integer kaneko_check(const Quat& b1, const Quat& b2, const Integer& p);

struct SuccminBounds {
  Integer d1_max;  ///< largest D with D³ ≤ 8Δ
  Integer d2_min;  ///< ⌈4p/D₁⌉
  Integer d2_max;  ///< largest D with D₁D² ≤ 8Δ
  Integer d3_max;  ///< largest D with D₁D₂D ≤ 8Δ, using D₂ = d2_min
};
/// Δ = r²p². d1 is the first minimum when known (needed for the D₂ bounds).
SuccminBounds succmin_bounds(const Integer& p, const Integer& r, const Integer& d1);

/// The unique 0 ≤ T ≤ p/2 with T² ≡ Da·Db (mod p).
Integer unique_trace(const Integer& da, const Integer& db, const Integer& p);

struct DStep {
  Integer value;                 ///< recovered D
  long n = 0;                    ///< index of the first nonzero difference term
  std::int64_t cn = 0;           ///< that coefficient
  std::optional<Integer> next;   ///< following minimum when the c_n = 6 case fixes it
  std::string provenance;
};

DStep d1_from_theta(const ThetaSeries& theta_o);
DStep d2_from_theta(const ThetaSeries& theta_o, const Integer& d1);

/// Gram of Z[α₁] from (D₁, δ₁).
GramMatrix quadratic_order_gram(const Integer& d1);

/// Gram of ⟨1, α₁, α₂⟩.
GramMatrix rank3_gram(const Integer& d1, const Integer& d2, const Integer& p);

DStep d3_from_theta(const ThetaSeries& theta_o, const GramMatrix& rank3);

struct ReconGram {
  GramMatrix gram;
  Integer t12, t13, t23;
  bool plus = true;  ///< A₊ chosen
};

ReconGram gross_gram_from_minima(const Integer& d1, const Integer& d2, const Integer& d3, const Integer& p,
                                 const Integer& r = 1);

struct MinimaTriple {
  Integer d1, d2, d3;
  std::vector<std::string> provenance;
};

enum class PipelineKind { UniqueClass, SmallCase, Full };

struct PipelineResult {
  PipelineKind kind = PipelineKind::Full;
  Integer d1;                         ///< set for SmallCase and Full
  std::optional<MinimaTriple> triple;
  std::optional<ReconGram> gram;
  long terms_used = 0;
};

using ThetaProvider = std::function<ThetaSeries(long n)>;

/// Requests theta coefficients from the provider as the bounds dictate.
PipelineResult full_pipeline(const ThetaProvider& theta, const Integer& p);
/// Uses a precomputed series; throws InsufficientTerms when it is too short.
PipelineResult full_pipeline(const ThetaSeries& theta, const Integer& p);

/// Truncation order that full_pipeline will request at most for prime p.
long pipeline_terms_bound(const Integer& p);

}  // namespace quatlat
