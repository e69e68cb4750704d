#include "corpus.hpp"

#include <henselift/error.hpp>
#include <henselift/lift.hpp>
#include <henselift/problem.hpp>

#include <doctest.h>

using namespace henselift;
using namespace henselift::testing;

namespace {

const MonicPoly kCubic = poly({8, -2, 1});
const std::vector<MonicPoly> kCubicFactors = {poly({0}), poly({2}), poly({7})};

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::InvariantViolation;
}

std::vector<std::uint64_t> precisions(const LiftReport& r) {
  std::vector<std::uint64_t> out;
  for (const auto& step : r.steps) out.push_back(step.s);
  return out;
}

std::vector<std::int64_t> defects(const LiftReport& r) {
  std::vector<std::int64_t> out;
  for (const auto& step : r.steps) out.push_back(step.defect);
  return out;
}

}  // namespace

TEST_CASE("system construction on the examples") {
  const PadicContext two(2);
  const FactorSystem cubic = new_system(two, kCubic, kCubicFactors, 3);
  CHECK(cubic.mode == LiftMode::General);
  CHECK(cubic.profile.t == 1);

  const FactorSystem octic = make_system(fixture("ex32.json"));
  CHECK(octic.mode == LiftMode::Special);
  CHECK(octic.profile.t == 23);
  CHECK(octic.profile.t_prime == 22);

  // Special mode sorts by degree and remembers the caller's order.
  const FactorSystem sorted = new_system(two, poly({8, 10, 6}), {poly({2, 2}), poly({4})}, 9);
  CHECK(sorted.mode == LiftMode::Special);
  CHECK(sorted.factors == std::vector<MonicPoly>{poly({4}), poly({2, 2})});
  CHECK(sorted.profile.t == 1);
  CHECK(sorted.origin == std::vector<std::size_t>{1, 0});
}

TEST_CASE("system construction errors") {
  const PadicContext two(2);
  CHECK(error_of([&] { new_system(two, kCubic, {poly({0}), poly({2})}, 3); }) == Errc::DegreeMismatch);
  CHECK(error_of([&] { new_system(two, kCubic, {poly({1}), poly({2}), poly({7})}, 3); }) == Errc::NotCongruent);
  CHECK(error_of([&] { new_system(two, poly({0, 0}), {poly({0}), poly({0})}, 5); }) == Errc::ZeroResultant);
  CHECK(error_of([&] { new_system(two, kCubic, kCubicFactors, 3, LiftMode::Special); }) == Errc::NotSpecialForm);
  // (X + 1)(X + 17) = X^2 + 18X + 17: t = val_2(16) = 4 needs s >= 9, and
  // disc = 256 needs s >= 9 as well.
  CHECK(error_of([&] { new_system(two, poly({17, 18}), {poly({1}), poly({17})}, 8); }) ==
        Errc::PrecisionBoundViolated);
  CHECK(new_system(two, poly({17, 18}), {poly({1}), poly({17})}, 9).profile.t == 4);
}

TEST_CASE("first step of the cubic example") {
  const PadicContext two(2);
  const FactorSystem sys = new_system(two, kCubic, kCubicFactors, 3);
  const auto [next, step] = lift_step(sys);
  CHECK(all_congruent(step.new_factors, std::vector<MonicPoly>{poly({12}), poly({14}), poly({7})}, 3, two));
  CHECK(step.next_s == 4);
  CHECK(step.defect == 1);
  CHECK(next.s == 4);
  CHECK_FALSE(step.exact);
  // U A = beta.
  const IntRowVector r = step.U * build_matrix(sys.factors).entries - step.beta;
  for (Eigen::Index i = 0; i < r.size(); ++i) CHECK(val_by_division(r(i), 2) >= 3);
}

TEST_CASE("step on an exact factorization changes nothing") {
  const PadicContext three(3);
  const std::vector<MonicPoly> gs = {poly({1}), poly({5, 2})};
  const FactorSystem sys = new_system(three, product(gs), gs, 4);
  const auto [next, step] = lift_step(sys);
  CHECK(step.exact);
  CHECK(step.U.isZero());
  CHECK(step.new_factors == gs);
  CHECK(next.factors == gs);
  const LiftReport report = lift_to_precision(sys, 50);
  CHECK(report.exact);
  CHECK(report.steps.empty());
  CHECK(report.factors == gs);
}

TEST_CASE("first step of the octic example") {
  const FactorSystem sys = make_system(fixture("ex32.json"));
  const auto [next, step] = lift_step(sys);
  CHECK(step.next_s == 200);
  CHECK(step.defect == 3);
}

TEST_CASE("lifting the cubic example to 2^514") {
  const PadicContext two(2);
  const FactorSystem sys = new_system(two, kCubic, kCubicFactors, 3);
  const LiftReport report = lift_to_precision(sys, 514);
  CHECK(precisions(report) == std::vector<std::uint64_t>{3, 4, 6, 10, 18, 34, 66, 130, 258, 514});
  CHECK(defects(report) == std::vector<std::int64_t>(10, 1));
  CHECK(congruent_mod(product(report.factors), kCubic, 514, two));
  CHECK(all_congruent(report.factors, kCubicFactors, 2, two));
  CHECK(lift_to_precision(sys, 514).factors == report.factors);
}

TEST_CASE("lifting the decic example") {
  const ProblemSpec spec = fixture("ex33.json");
  const LiftReport report = lift_to_precision(make_system(spec), *spec.target);
  CHECK(precisions(report) ==
        std::vector<std::uint64_t>{46, 86, 172, 338, 672, 1342, 2680, 5358, 10712, 21422});
  CHECK(defects(report) == std::vector<std::int64_t>{3, 0, 3, 2, 1, 2, 1, 2, 1, 2});
}

TEST_CASE("lift_to_precision edge cases") {
  const PadicContext two(2);
  const FactorSystem sys = new_system(two, kCubic, kCubicFactors, 3);
  const LiftReport now = lift_to_precision(sys, 2);
  CHECK(now.steps.empty());
  CHECK(now.factors == std::vector<MonicPoly>{poly({0}), poly({2}), poly({3})});
  CHECK(error_of([&] { lift_to_precision(sys, 514, 3); }) == Errc::MaxStepsExceeded);
  const LiftReport two_steps = lift_steps(sys, 2);
  CHECK(precisions(two_steps) == std::vector<std::uint64_t>{3, 4});
  CHECK(two_steps.final_s == 6);
}

TEST_CASE("uniqueness of admissible lifts") {
  const PadicContext two(2);
  const FactorSystem sys = new_system(two, kCubic, kCubicFactors, 3);
  const std::vector<MonicPoly> a = {poly({12}), poly({14}), poly({7})};
  const std::vector<MonicPoly> b = {poly({4}), poly({6}), poly({7})};
  CHECK(check_uniqueness_bound(sys, a, a, 0));
  CHECK(check_uniqueness_bound(sys, a, b, 0));
  CHECK(error_of([&] { check_uniqueness_bound(sys, a, b, 2); }) == Errc::HypothesisViolated);
  const std::vector<MonicPoly> far = {poly({13}), poly({14}), poly({7})};
  CHECK(error_of([&] { check_uniqueness_bound(sys, a, far, 0); }) == Errc::HypothesisViolated);
}

TEST_CASE("strategy comparison") {
  const PadicContext two(2);
  const FactorSystem cubic = new_system(two, kCubic, kCubicFactors, 3);
  const StrategyComparison general = compare_strategies(cubic);
  CHECK(general.t == general.t0 + general.t1);
  CHECK(general.three_guaranteed_factor == 2);
  CHECK(general.nested_guaranteed_factor == 2);

  const StrategyComparison special = compare_strategies(make_system(fixture("ex33.json")));
  CHECK(special.special);
  CHECK(special.bound == 10);
  CHECK(special.bound + 1 == special.bound0 + special.bound1);
  CHECK(special.three_guaranteed_factor == special.nested_guaranteed_factor + 1);

  const FactorSystem pair = new_system(two, poly({0, 2}), {poly({0}), poly({2})}, 3);
  CHECK(error_of([&] { compare_strategies(pair); }) == Errc::InvalidArgument);
}

TEST_CASE("lifting recovers known linear factors") {
  Random rnd(51);
  int done = 0;
  while (done < 60) {
    const std::uint64_t p = rnd.pick({2, 3, 5, 7});
    const PadicContext ctx(p);
    const std::size_t n = rnd.index(2, 4);
    std::vector<MonicPoly> truth;
    for (std::size_t k = 0; k < n; ++k) truth.push_back(poly({rnd.uniform(-1000, 1000)}));
    const Integer res = resultant(truth);
    if (res == 0 || val_by_division(res, p) > 6) continue;
    const std::uint64_t s = 2 * val_by_division(res, p) + 1;
    std::vector<MonicPoly> start;
    for (const auto& g : truth) start.push_back(poly({static_cast<long>(canonical(g.coeff(0), s, ctx).value.get_si())}));
    const FactorSystem sys = new_system(ctx, product(truth), start, s, LiftMode::General);
    const LiftReport report = lift_to_precision(sys, 200);
    if (report.exact) {
      CHECK(report.factors.size() == n);
    }
    CHECK(all_congruent(report.factors, truth, 200, ctx));
    ++done;
  }
}

TEST_CASE("step contract on random systems") {
  Random rnd(52);
  for (int i = 0; i < 80; ++i) {
    const bool special = i % 2 == 1;
    const LiftInstance inst = draw_instance(rnd, special);
    FactorSystem sys = inst.system;
    const PadicContext& ctx = sys.ctx;
    const std::uint64_t b = sys.defect_bound();
    const std::uint64_t t = sys.profile.t;
    for (int step_no = 0; step_no < 3; ++step_no) {
      const auto [next, step] = lift_step(sys);
      if (step.exact) break;
      const std::uint64_t lambda = sys.s - b;
      CHECK(all_congruent(step.new_factors, sys.factors, lambda, ctx));
      CHECK(difference_valuation(product(step.new_factors), sys.f, ctx.prime()) >= 2 * lambda);
      CHECK(val_by_division(resultant(step.new_factors), ctx.prime()) == t);
      CHECK(step.defect <= static_cast<std::int64_t>(b));
      CHECK(step.next_s >= 2 * lambda);
      for (std::size_t k = 0; k < sys.factors.size(); ++k)
        CHECK(step.new_factors[k].degree() == sys.factors[k].degree());
      if (special) {
        CHECK(*sys.profile.e_prime() >= 0);
        for (std::size_t k = 0; k < sys.factors.size(); ++k) {
          std::vector<MonicPoly> rest = sys.factors;
          rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
          CHECK(coefficient_bound_holds(rest, ctx.prime()));
        }
      }
      sys = next;
    }
  }
}

TEST_CASE("lifts under different pivot rules agree modulo the uniqueness modulus") {
  Random rnd(53);
  int distinct = 0;
  for (int i = 0; i < 60; ++i) {
    const LiftInstance inst = draw_instance(rnd, i % 2 == 1);
    const auto [na, a] = lift_step(inst.system, {PivotRule::RowMajor, SolvePrecision::Minimal});
    const auto [nb, b] = lift_step(inst.system, {PivotRule::ReverseColumnMajor, SolvePrecision::Minimal});
    distinct += a.new_factors != b.new_factors;
    CHECK(check_uniqueness_bound(inst.system, a.new_factors, b.new_factors, 0));
  }
  CHECK(distinct > 0);
}
