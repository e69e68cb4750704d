#include <henselift/error.hpp>
#include <henselift/lift.hpp>

#include <algorithm>
#include <numeric>
#include <utility>

namespace henselift {

std::string to_string(LiftMode mode) {
  switch (mode) {
    case LiftMode::Auto: return "auto";
    case LiftMode::General: return "general";
    case LiftMode::Special: return "special";
  }
  return "general";
}

LiftMode parse_lift_mode(const std::string& text) {
  if (text == "auto") return LiftMode::Auto;
  if (text == "general") return LiftMode::General;
  if (text == "special") return LiftMode::Special;
  throw Error(Errc::InvalidArgument, "mode must be auto, general or special, got '" + text + "'");
}

namespace {

// Residual f - prod g restricted to degrees below M (the leading terms
// cancel for monic factors of matching total degree).
IntPoly residual(const MonicPoly& f, std::span<const MonicPoly> gs) {
  IntPoly r = subtract(f.dense(), product(gs).dense());
  r.resize(f.degree());
  return r;
}

// val_p(Res(gs)) from a Smith form modulo p^{cap}; fails unless it is < cap.
std::uint64_t certified_resultant_valuation(std::span<const MonicPoly> gs, std::uint64_t cap,
                                            const PadicContext& ctx) {
  const ResultantMatrix A = build_matrix(gs);
  try {
    return smith_p(A.entries, cap, ctx).total();
  } catch (const Error& e) {
    throw Error(Errc::InvariantViolation,
                std::string("resultant valuation changed during lifting (") + e.what() + ")");
  }
}

MonicPoly reduce_balanced(const MonicPoly& g, std::uint64_t n, const PadicContext& ctx) {
  std::vector<Integer> lower(g.lower().begin(), g.lower().end());
  for (auto& c : lower) c = balanced(c, n, ctx);
  return MonicPoly(std::move(lower));
}

MonicPoly reduce_canonical(const MonicPoly& g, std::uint64_t n, const PadicContext& ctx) {
  std::vector<Integer> lower(g.lower().begin(), g.lower().end());
  for (auto& c : lower) c = canonical(c, n, ctx).value;
  return MonicPoly(std::move(lower));
}

Valuation difference_valuation(const MonicPoly& a, const MonicPoly& b, const PadicContext& ctx) {
  return content_valuation(subtract(a.dense(), b.dense()), ctx);
}

}  // namespace

FactorSystem new_system(const PadicContext& ctx, const MonicPoly& f, std::vector<MonicPoly> factors,
                        std::uint64_t s, LiftMode mode) {
  if (factors.empty()) throw Error(Errc::EmptyFactorList, "no factors");
  std::size_t total = 0;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (factors[k].degree() == 0)
      throw Error(Errc::DegreeZeroFactor, "factor " + std::to_string(k) + " has degree 0");
    total += factors[k].degree();
  }
  if (total != f.degree())
    throw Error(Errc::DegreeMismatch, "factor degrees sum to " + std::to_string(total) +
                                          ", deg f = " + std::to_string(f.degree()));
  const Valuation rv = content_valuation(residual(f, factors), ctx);
  if (rv < s)
    throw Error(Errc::NotCongruent, "f and the product of the factors agree only modulo p^" +
                                        to_string(rv) + ", not p^" + std::to_string(s));

  const bool f_monomial = is_monomial_mod_p(f, ctx);
  if (mode == LiftMode::Auto) mode = f_monomial ? LiftMode::Special : LiftMode::General;
  if (mode == LiftMode::Special && !f_monomial)
    throw Error(Errc::NotSpecialForm, "f is not congruent to X^M mod p");

  FactorSystem sys{ctx, f, {}, {}, s, {}, mode};
  sys.origin.resize(factors.size());
  std::iota(sys.origin.begin(), sys.origin.end(), std::size_t{0});
  if (mode == LiftMode::Special)
    std::stable_sort(sys.origin.begin(), sys.origin.end(), [&](std::size_t a, std::size_t b) {
      return factors[a].degree() < factors[b].degree();
    });
  for (auto k : sys.origin) sys.factors.push_back(std::move(factors[k]));

  sys.profile = profile(sys.factors, ctx, sys.special());
  const std::uint64_t t = sys.profile.t;
  const std::uint64_t required = sys.special() ? t + sys.defect_bound() + 1 : 2 * t + 1;
  if (s < required) {
    const Integer disc = discriminant(f);
    const Valuation dv = valuation(disc, ctx);
    if (dv.is_infinite() || s < dv.value() + 1)
      throw Error(Errc::PrecisionBoundViolated,
                  "precision s = " + std::to_string(s) + " is below the required " +
                      std::to_string(required) + " (t = " + std::to_string(t) +
                      (sys.special() ? ", t' = " + std::to_string(sys.defect_bound()) : std::string()) +
                      ") and below val_p(disc f) + 1");
  }
  return sys;
}

std::pair<FactorSystem, LiftStep> lift_step(const FactorSystem& sys, const LiftOptions& options) {
  const PadicContext& ctx = sys.ctx;
  LiftStep step;
  step.s = sys.s;

  const IntPoly r = residual(sys.f, sys.factors);
  if (content_valuation(r, ctx).is_infinite()) {
    step.exact = true;
    step.b = IntPoly(r.size(), Integer(0));
    step.beta = IntRowVector::Zero(static_cast<Eigen::Index>(r.size()));
    step.U = step.beta;
    step.new_factors = sys.factors;
    step.s_achieved = sys.s;
    step.residual_valuation = Valuation::infinite();
    step.next_s = sys.s;
    return {sys, std::move(step)};
  }

  const std::uint64_t bound = sys.defect_bound();
  const std::uint64_t t = sys.profile.t;
  if (bound >= sys.s) throw Error(Errc::InvariantViolation, "precision does not exceed the defect bound");
  const std::uint64_t lambda = sys.s - bound;

  const auto M = static_cast<Eigen::Index>(r.size());
  step.b.resize(r.size());
  step.beta.resize(M);
  for (std::size_t i = 0; i < r.size(); ++i) {
    try {
      step.b[i] = divide_by_power(r[i], lambda, ctx);
    } catch (const Error&) {
      throw Error(Errc::NotCongruent, "f is not congruent to the product modulo p^" + std::to_string(sys.s));
    }
    step.beta(static_cast<Eigen::Index>(i)) = step.b[i];
  }

  const ResultantMatrix A = build_matrix(sys.factors);
  SolveOptions solve{options.pivot, t, std::nullopt};
  std::uint64_t K = sys.s + bound + 2;
  if (options.precision == SolvePrecision::Minimal) {
    K = lambda;
    solve.working_exponent = lambda;
  }
  step.U = solve_row(A.entries, step.beta, ctx, bound, K, solve);

  // g_k + p^lambda u_k, one block of U per factor.
  const Integer scale = ctx.power(lambda);
  Valuation change = Valuation::infinite();
  for (std::size_t k = 0; k < sys.factors.size(); ++k) {
    std::vector<Integer> lower(sys.factors[k].lower().begin(), sys.factors[k].lower().end());
    for (std::size_t i = 0; i < lower.size(); ++i) {
      const Integer delta = scale * step.U(static_cast<Eigen::Index>(A.block_start[k] + i));
      change = std::min(change, valuation(delta, ctx));
      lower[i] += delta;
    }
    step.new_factors.emplace_back(std::move(lower));
  }

  step.residual_valuation = content_valuation(residual(sys.f, step.new_factors), ctx);
  if (step.residual_valuation < 2 * lambda)
    throw Error(Errc::InvariantViolation, "lifted product is not congruent to f modulo p^" +
                                              std::to_string(2 * lambda));

  FactorSystem next = sys;
  if (step.residual_valuation.is_infinite()) {
    // Exact factorization; keep the integers unreduced.
    step.next_s = std::max(2 * sys.s + 2, 2 * lambda);
    next.factors = step.new_factors;
  } else {
    step.next_s = step.residual_valuation.value();
    next.factors.clear();
    for (const auto& g : step.new_factors) next.factors.push_back(reduce_balanced(g, step.next_s, ctx));
  }
  next.s = step.next_s;

  step.s_achieved = change.value_or(step.next_s);
  step.defect = static_cast<std::int64_t>(sys.s) - static_cast<std::int64_t>(step.s_achieved);
  if (step.s_achieved < lambda)
    throw Error(Errc::InvariantViolation, "factor moved by more than p^" + std::to_string(lambda));

  const std::uint64_t new_t = certified_resultant_valuation(next.factors, t + 1, ctx);
  if (new_t != t)
    throw Error(Errc::InvariantViolation, "resultant valuation changed from " + std::to_string(t) +
                                              " to " + std::to_string(new_t));
  next.profile = profile_from_valuation(next.factors, t, ctx, sys.special());
  return {std::move(next), std::move(step)};
}

std::vector<MonicPoly> in_caller_order(const FactorSystem& sys, std::span<const MonicPoly> factors) {
  std::vector<MonicPoly> out(factors.size());
  for (std::size_t k = 0; k < factors.size(); ++k) out[sys.origin[k]] = factors[k];
  return out;
}

namespace {

LiftRecord make_record(const FactorSystem& next, const LiftStep& step, std::size_t index) {
  LiftRecord rec;
  rec.step = index;
  rec.s = step.s;
  rec.s_achieved = step.s_achieved;
  rec.defect = step.defect;
  rec.residual_valuation = step.residual_valuation;
  rec.next_s = step.next_s;
  rec.factors = in_caller_order(next, next.factors);
  return rec;
}

std::vector<MonicPoly> final_factors(const FactorSystem& sys, std::uint64_t n, bool exact) {
  std::vector<MonicPoly> out;
  for (const auto& g : sys.factors) out.push_back(exact ? g : reduce_canonical(g, n, sys.ctx));
  return in_caller_order(sys, out);
}

}  // namespace

LiftReport lift_to_precision(const FactorSystem& sys, std::uint64_t target, std::size_t max_steps,
                             const LiftOptions& options) {
  LiftReport rep;
  rep.target = target;
  FactorSystem cur = sys;
  if (target > sys.s) {
    for (std::size_t i = 1;; ++i) {
      if (i > max_steps)
        throw Error(Errc::MaxStepsExceeded,
                    "precision " + std::to_string(cur.s) + " after " + std::to_string(max_steps) + " steps");
      auto [next, step] = lift_step(cur, options);
      if (step.exact) {
        rep.exact = true;
        break;
      }
      rep.steps.push_back(make_record(next, step, i));
      cur = std::move(next);
      if (step.s >= target) break;
    }
  }
  rep.final_s = cur.s;
  rep.factors = final_factors(cur, target, rep.exact);
  return rep;
}

LiftReport lift_steps(const FactorSystem& sys, std::size_t steps, const LiftOptions& options) {
  LiftReport rep;
  FactorSystem cur = sys;
  for (std::size_t i = 1; i <= steps; ++i) {
    auto [next, step] = lift_step(cur, options);
    if (step.exact) {
      rep.exact = true;
      break;
    }
    rep.steps.push_back(make_record(next, step, i));
    cur = std::move(next);
  }
  rep.final_s = cur.s;
  rep.target = cur.s;
  rep.factors = final_factors(cur, cur.s, rep.exact);
  return rep;
}

bool check_uniqueness_bound(const FactorSystem& sys, std::span<const MonicPoly> lift_a,
                            std::span<const MonicPoly> lift_b, std::uint64_t r) {
  const PadicContext& ctx = sys.ctx;
  const std::uint64_t s = sys.s;
  const std::uint64_t b = sys.defect_bound();
  const std::size_t n = sys.factors.size();
  if (lift_a.size() != n || lift_b.size() != n)
    throw Error(Errc::HypothesisViolated, "lifts must have " + std::to_string(n) + " factors");
  if (s < 2 * b || r > s - 2 * b)
    throw Error(Errc::HypothesisViolated,
                "r = " + std::to_string(r) + " outside [0, s - 2b] = [0, " +
                    std::to_string(s >= 2 * b ? s - 2 * b : 0) + "]");
  for (std::size_t k = 0; k < n; ++k) {
    if (lift_a[k].degree() != sys.factors[k].degree() || lift_b[k].degree() != sys.factors[k].degree())
      throw Error(Errc::HypothesisViolated, "factor " + std::to_string(k) + " changed degree");
    if (!congruent_mod(lift_a[k], sys.factors[k], s - b, ctx))
      throw Error(Errc::HypothesisViolated,
                  "first lift, factor " + std::to_string(k) + " not congruent to g mod p^" + std::to_string(s - b));
    if (!congruent_mod(lift_b[k], sys.factors[k], s - b, ctx))
      throw Error(Errc::HypothesisViolated,
                  "second lift, factor " + std::to_string(k) + " not congruent to g mod p^" + std::to_string(s - b));
  }
  if (!congruent_mod(product(lift_a), product(lift_b), 2 * (s - b) - r, ctx))
    throw Error(Errc::HypothesisViolated,
                "products not congruent mod p^" + std::to_string(2 * (s - b) - r));
  const std::uint64_t modulus = 2 * s - 3 * b - r;
  for (std::size_t k = 0; k < n; ++k)
    if (!congruent_mod(lift_a[k], lift_b[k], modulus, ctx)) return false;
  return true;
}

StrategyComparison compare_strategies(const FactorSystem& sys, const LiftOptions& options) {
  if (sys.factors.size() != 3)
    throw Error(Errc::InvalidArgument,
                "strategy comparison needs 3 factors, got " + std::to_string(sys.factors.size()));
  const PadicContext& ctx = sys.ctx;
  const auto& g = sys.factors;
  StrategyComparison cmp;
  cmp.special = sys.special();
  cmp.s = sys.s;
  cmp.t = sys.profile.t;
  cmp.bound = sys.defect_bound();

  {
    auto [next, step] = lift_step(sys, options);
    cmp.three_guaranteed_factor = sys.s - cmp.bound;
    cmp.three_guaranteed_product = 2 * (sys.s - cmp.bound);
    cmp.three_achieved_factor = step.s_achieved;
    cmp.three_achieved_product = content_valuation(residual(sys.f, next.factors), ctx);
    cmp.three_factors = next.factors;
  }

  const FactorSystem outer = new_system(ctx, sys.f, {g[0], g[1] * g[2]}, sys.s, sys.mode);
  cmp.t1 = outer.profile.t;
  cmp.bound1 = outer.defect_bound();
  auto [outer_next, outer_step] = lift_step(outer, options);
  const MonicPoly& h1 = outer_next.factors[0];
  const MonicPoly& h2 = outer_next.factors[1];

  const FactorSystem inner = new_system(ctx, h2, {g[1], g[2]}, sys.s - cmp.bound1, sys.mode);
  cmp.t0 = inner.profile.t;
  cmp.bound0 = inner.defect_bound();
  auto [inner_next, inner_step] = lift_step(inner, options);

  if (cmp.bound1 + cmp.bound0 > sys.s)
    throw Error(Errc::InvariantViolation, "nested defect bounds exceed s");
  cmp.nested_guaranteed_factor = sys.s - cmp.bound1 - cmp.bound0;
  cmp.nested_guaranteed_product = 2 * cmp.nested_guaranteed_factor;
  cmp.nested_factors = {h1, inner_next.factors[0], inner_next.factors[1]};
  Valuation achieved = Valuation::infinite();
  for (std::size_t k = 0; k < 3; ++k)
    achieved = std::min(achieved, difference_valuation(cmp.nested_factors[k], g[k], ctx));
  cmp.nested_achieved_factor = achieved.value_or(cmp.nested_guaranteed_product);
  cmp.nested_achieved_product = content_valuation(residual(sys.f, cmp.nested_factors), ctx);
  return cmp;
}

}  // namespace henselift
