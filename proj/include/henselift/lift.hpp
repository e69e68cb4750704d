#pragma once

// Hensel lifting of a factorization f ≡ g_1 ... g_n mod p^s into n >= 1
// monic factors, in the general mode (defect bound t) and in the special
// mode f ≡ X^M mod p (defect bound t').

#include <henselift/integer.hpp>
#include <henselift/locsmith.hpp>
#include <henselift/poly.hpp>
#include <henselift/resmat.hpp>
#include <henselift/ring.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace henselift {

enum class LiftMode { Auto, General, Special };

std::string to_string(LiftMode mode);
/// "auto", "general" or "special"; Errc::InvalidArgument otherwise.
LiftMode parse_lift_mode(const std::string& text);

/// How much of the correction U is computed in each step.
enum class SolvePrecision {
  /// U to the precision at which the correction p^{s-t} U is known modulo
  /// p^{2s + 2}. The new factors are the exact update up to that
  /// precision, which makes the measured defects independent of the pivot
  /// rule.
  Full,
  /// U A ≡ beta modulo p^{s - t} only, the least needed for an admissible
  /// lift. The digits this leaves free depend on the pivot rule.
  Minimal,
};

struct LiftOptions {
  PivotRule pivot = PivotRule::RowMajor;
  SolvePrecision precision = SolvePrecision::Full;
};

struct FactorSystem {
  PadicContext ctx;
  MonicPoly f;
  std::vector<MonicPoly> factors;
  /// origin[k] is the caller's index of factors[k] (special mode sorts).
  std::vector<std::size_t> origin;
  std::uint64_t s = 0;
  ResultantProfile profile;
  LiftMode mode = LiftMode::General;  // never Auto once constructed

  bool special() const { return mode == LiftMode::Special; }
  /// t in general mode, t' in special mode.
  std::uint64_t defect_bound() const { return profile.defect_bound(); }
};

/// Validates the lifting hypotheses. Auto picks Special iff f ≡ X^M mod p,
/// and then stably sorts the factors by degree.
///
/// The precision bound is s >= 2t + 1 (general) or s >= t + t' + 1
/// (special); s >= val_p(disc f) + 1 with disc f != 0 is accepted instead.
///
/// Throws Errc::DegreeMismatch, Errc::NotCongruent, Errc::ZeroResultant,
/// Errc::NotSpecialForm, Errc::PrecisionBoundViolated.
FactorSystem new_system(const PadicContext& ctx, const MonicPoly& f, std::vector<MonicPoly> factors,
                        std::uint64_t s, LiftMode mode = LiftMode::Auto);

struct LiftStep {
  IntPoly b;               // p^{bound - s} (f - prod g)
  IntRowVector beta;       // b_0 .. b_{M-1}
  IntRowVector U;          // u_(1)0 .. u_(n)m_n-1, solves U A = beta
  std::vector<MonicPoly> new_factors;
  std::uint64_t s = 0;     // precision entering the step
  std::uint64_t s_achieved = 0;  // s' = min val of the coefficient changes
  std::int64_t defect = 0;       // s - s'
  Valuation residual_valuation;  // of f - prod(new factors), before reduction
  std::uint64_t next_s = 0;
  bool exact = false;      // f == prod g on entry; nothing to do
};

/// One lifting step. The returned system holds the new factors, reduced to
/// balanced residues modulo p^{next s}, where next s is the measured
/// valuation of f - prod(new factors). Throws Errc::InvariantViolation if
/// the step contract fails.
std::pair<FactorSystem, LiftStep> lift_step(const FactorSystem& sys, const LiftOptions& options = {});

struct LiftRecord {
  std::size_t step = 0;  // 1-based
  std::uint64_t s = 0;
  std::uint64_t s_achieved = 0;
  std::int64_t defect = 0;
  Valuation residual_valuation;
  std::uint64_t next_s = 0;
  /// Factors after the step (caller's order), balanced mod p^{next s}.
  std::vector<MonicPoly> factors;
};

struct LiftReport {
  std::vector<LiftRecord> steps;
  /// Final factors in the caller's order, canonical residues mod p^target.
  std::vector<MonicPoly> factors;
  std::uint64_t target = 0;
  std::uint64_t final_s = 0;
  bool exact = false;
};

/// Steps until a step has been taken from precision >= target, or the
/// factorization is exact. The step taken at the target precision measures
/// the defect there and leaves the factors correct beyond target.
/// target <= s returns at once. Throws Errc::MaxStepsExceeded.
LiftReport lift_to_precision(const FactorSystem& sys, std::uint64_t target, std::size_t max_steps = 64,
                             const LiftOptions& options = {});

/// Runs exactly `steps` lifting steps (fewer if the factorization becomes
/// exact). Final factors are reduced mod p^{final s}.
LiftReport lift_steps(const FactorSystem& sys, std::size_t steps, const LiftOptions& options = {});

/// Factors in the system's order mapped back to the caller's order.
std::vector<MonicPoly> in_caller_order(const FactorSystem& sys, std::span<const MonicPoly> factors);

/// Checks that two lifts of sys.factors agree modulo p^{2s - 3b - r}, b the
/// defect bound, given that both are congruent to the factors mod p^{s-b}
/// and their products agree mod p^{2(s-b) - r}. Throws
/// Errc::HypothesisViolated naming the failed hypothesis.
bool check_uniqueness_bound(const FactorSystem& sys, std::span<const MonicPoly> lift_a,
                            std::span<const MonicPoly> lift_b, std::uint64_t r);

struct StrategyComparison {
  bool special = false;
  std::uint64_t s = 0;
  std::uint64_t t = 0, t0 = 0, t1 = 0;
  // Defect bounds of the three systems: t', t'_0, t'_1 in special mode,
  // t, t0, t1 otherwise.
  std::uint64_t bound = 0, bound0 = 0, bound1 = 0;

  // One step on (g1, g2, g3).
  std::uint64_t three_guaranteed_factor = 0;   // s - bound
  std::uint64_t three_guaranteed_product = 0;  // 2(s - bound)
  std::uint64_t three_achieved_factor = 0;
  Valuation three_achieved_product;
  std::vector<MonicPoly> three_factors;

  // Step on (g1, g2 g3), then on (g2, g3) against the lifted second factor.
  std::uint64_t nested_guaranteed_factor = 0;   // s - bound1 - bound0
  std::uint64_t nested_guaranteed_product = 0;  // 2(s - bound1 - bound0)
  std::uint64_t nested_achieved_factor = 0;
  Valuation nested_achieved_product;
  std::vector<MonicPoly> nested_factors;
};

/// Needs n = 3 (Errc::InvalidArgument otherwise); errors from the grouped
/// systems propagate.
StrategyComparison compare_strategies(const FactorSystem& sys, const LiftOptions& options = {});

}  // namespace henselift
