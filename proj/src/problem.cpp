#include <henselift/error.hpp>
#include <henselift/problem.hpp>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

namespace henselift {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw Error(Errc::InvalidArgument, path + ": " + msg);
}

Integer parse_coefficient(const json& v, const std::string& path) {
  Integer x;
  if (v.is_string()) {
    if (!parse_integer(v.get<std::string>(), x)) fail(path, "expected a decimal integer string");
    return x;
  }
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
    return Integer(std::to_string(v.get<std::int64_t>()));
  }
  fail(path, "expected a decimal integer string");
}

IntPoly parse_poly(const json& v, const std::string& path) {
  if (!v.is_array() || v.empty()) fail(path, "expected a non-empty coefficient list");
  IntPoly out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(parse_coefficient(v[i], path + "[" + std::to_string(i) + "]"));
  if (out.back() != 1) fail(path, "leading coefficient must be 1");
  return out;
}

std::uint64_t parse_exponent(const json& v, const std::string& path) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(v.get<std::int64_t>());
  if (v.is_string()) {
    Integer x;
    if (parse_integer(v.get<std::string>(), x) && sgn(x) >= 0 && x.fits_ulong_p()) return x.get_ui();
  }
  fail(path, "expected a non-negative integer");
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace

ProblemSpec parse_problem(const json& doc) {
  if (!doc.is_object()) fail("$", "expected an object");
  for (const char* key : {"p", "f", "factors", "s"})
    if (!doc.contains(key)) fail(key, "missing required field");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    static const std::vector<std::string> known = {"p", "f", "factors", "s", "target", "mode", "compare"};
    if (std::find(known.begin(), known.end(), it.key()) == known.end()) fail(it.key(), "unknown field");
  }

  ProblemSpec spec;
  spec.p = parse_exponent(doc["p"], "p");
  if (!is_prime(spec.p)) fail("p", std::to_string(spec.p) + " is not prime");
  spec.f = parse_poly(doc["f"], "f");
  const json& fs = doc["factors"];
  if (!fs.is_array() || fs.empty()) fail("factors", "expected a non-empty list of coefficient lists");
  for (std::size_t k = 0; k < fs.size(); ++k) {
    const std::string path = "factors[" + std::to_string(k) + "]";
    spec.factors.push_back(parse_poly(fs[k], path));
    if (spec.factors.back().size() < 2) fail(path, "factor must have degree >= 1");
  }
  spec.s = parse_exponent(doc["s"], "s");
  if (spec.s == 0) fail("s", "precision must be >= 1");
  if (doc.contains("target")) spec.target = parse_exponent(doc["target"], "target");
  if (doc.contains("mode")) {
    if (!doc["mode"].is_string()) fail("mode", "expected one of auto, general, special");
    try {
      spec.mode = parse_lift_mode(doc["mode"].get<std::string>());
    } catch (const Error&) {
      fail("mode", "expected one of auto, general, special");
    }
  }
  if (doc.contains("compare")) {
    if (!doc["compare"].is_boolean()) fail("compare", "expected true or false");
    spec.compare = doc["compare"].get<bool>();
  }
  return spec;
}

ProblemSpec parse_problem_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail("$", std::string("malformed JSON (") + e.what() + ")");
  }
  return parse_problem(doc);
}

ProblemSpec load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem_text(buf.str());
}

FactorSystem make_system(const ProblemSpec& spec) {
  const PadicContext ctx(spec.p);
  const MonicPoly f = MonicPoly::from_dense(spec.f);
  std::vector<MonicPoly> factors;
  std::size_t total = 0;
  for (const auto& g : spec.factors) {
    factors.push_back(MonicPoly::from_dense(g));
    total += factors.back().degree();
  }
  if (total != f.degree())
    fail("factors", "degrees sum to " + std::to_string(total) + " but deg f = " + std::to_string(f.degree()));
  return new_system(ctx, f, std::move(factors), spec.s, spec.mode);
}

json coefficients_json(const MonicPoly& g) {
  json arr = json::array();
  for (const auto& c : g.dense()) arr.push_back(to_string(c));
  return arr;
}

json factor_json(const MonicPoly& g, std::uint64_t n, const PadicContext& ctx) {
  std::vector<Integer> canon, bal;
  for (const auto& c : g.lower()) {
    canon.push_back(canonical(c, n, ctx).value);
    bal.push_back(balanced(c, n, ctx));
  }
  return {{"canonical", coefficients_json(MonicPoly(canon))},
          {"balanced", coefficients_json(MonicPoly(bal))}};
}

json profile_json(const FactorSystem& sys) {
  json j;
  j["p"] = sys.ctx.prime();
  j["mode"] = to_string(sys.mode);
  j["t"] = sys.profile.t;
  j["t_prime"] = sys.profile.t_prime ? json(*sys.profile.t_prime) : json(nullptr);
  j["resultant"] = sys.profile.res ? json(to_string(*sys.profile.res)) : json(nullptr);
  j["degrees"] = sys.profile.degrees;
  j["order"] = sys.origin;
  j["d"] = sys.profile.d;
  j["s"] = sys.s;
  return j;
}

json report_json(const FactorSystem& sys, const LiftReport& report) {
  json j = profile_json(sys);
  j["initial_s"] = sys.s;
  j.erase("s");
  j["target"] = report.target;
  j["final_s"] = report.final_s;
  j["exact"] = report.exact;
  json steps = json::array();
  for (const auto& rec : report.steps) {
    json r;
    r["step"] = rec.step;
    r["s"] = rec.s;
    r["s_achieved"] = rec.s_achieved;
    r["defect"] = rec.defect;
    r["residual_valuation"] = rec.residual_valuation.is_infinite()
                                  ? json("inf")
                                  : json(rec.residual_valuation.value());
    r["next_s"] = rec.next_s;
    json fs = json::array();
    for (const auto& g : rec.factors) fs.push_back(factor_json(g, rec.next_s, sys.ctx));
    r["factors"] = fs;
    steps.push_back(r);
  }
  j["steps"] = steps;
  json fs = json::array();
  for (const auto& g : report.factors) {
    if (report.exact)
      fs.push_back({{"canonical", coefficients_json(g)}, {"balanced", coefficients_json(g)}});
    else
      fs.push_back(factor_json(g, report.target, sys.ctx));
  }
  j["factors"] = fs;
  return j;
}

json comparison_json(const StrategyComparison& c) {
  auto val = [](const Valuation& v) { return v.is_infinite() ? json("inf") : json(v.value()); };
  json j;
  j["mode"] = c.special ? "special" : "general";
  j["s"] = c.s;
  j["t"] = c.t;
  j["t0"] = c.t0;
  j["t1"] = c.t1;
  if (c.special) {
    j["t_prime"] = c.bound;
    j["t0_prime"] = c.bound0;
    j["t1_prime"] = c.bound1;
  }
  j["three_factor"] = {{"guaranteed_factor_precision", c.three_guaranteed_factor},
                       {"guaranteed_product_precision", c.three_guaranteed_product},
                       {"achieved_factor_precision", c.three_achieved_factor},
                       {"achieved_product_precision", val(c.three_achieved_product)}};
  j["nested"] = {{"guaranteed_factor_precision", c.nested_guaranteed_factor},
                 {"guaranteed_product_precision", c.nested_guaranteed_product},
                 {"achieved_factor_precision", c.nested_achieved_factor},
                 {"achieved_product_precision", val(c.nested_achieved_product)}};
  return j;
}

std::string render_table(const LiftReport& report) {
  std::string out = "step  precision s  defect s-s'\n";
  for (const auto& rec : report.steps) {
    out += pad_left(std::to_string(rec.step), 4) + "  " + pad_left(std::to_string(rec.s), 11) + "  " +
           pad_left(std::to_string(rec.defect), 11) + "\n";
  }
  if (report.exact) out += "exact factorization reached\n";
  return out;
}

std::string render_profile(const FactorSystem& sys) {
  std::string out;
  out += "p        " + std::to_string(sys.ctx.prime()) + "\n";
  out += "mode     " + to_string(sys.mode) + "\n";
  out += "t        " + std::to_string(sys.profile.t) + "\n";
  if (sys.profile.t_prime) out += "t'       " + std::to_string(*sys.profile.t_prime) + "\n";
  out += "s        " + std::to_string(sys.s) + "\n";
  for (std::size_t k = 0; k < sys.factors.size(); ++k)
    out += "g(" + std::to_string(k + 1) + ")     " + to_string(sys.factors[k]) + "\n";
  return out;
}

std::string render_comparison(const StrategyComparison& c) {
  const std::string b = c.special ? "t'" : "t";
  std::string out;
  out += "mode " + std::string(c.special ? "special" : "general") + ", s = " + std::to_string(c.s) + "\n";
  out += b + " = " + std::to_string(c.bound) + ", " + b + "0 = " + std::to_string(c.bound0) + ", " + b +
         "1 = " + std::to_string(c.bound1) + " (t = " + std::to_string(c.t) + ", t0 = " + std::to_string(c.t0) +
         ", t1 = " + std::to_string(c.t1) + ")\n";
  out += "                  factor guaranteed  factor achieved  product guaranteed  product achieved\n";
  auto row = [&](const char* name, std::uint64_t gf, std::uint64_t af, std::uint64_t gp, const Valuation& ap) {
    out += std::string(name) + pad_left(std::to_string(gf), 20) + "  ";
    out += pad_left(std::to_string(af), 15) + "  " + pad_left(std::to_string(gp), 18) + "  " +
           pad_left(to_string(ap), 16) + "\n";
  };
  row("three-factor   ", c.three_guaranteed_factor, c.three_achieved_factor, c.three_guaranteed_product,
      c.three_achieved_product);
  row("nested         ", c.nested_guaranteed_factor, c.nested_achieved_factor, c.nested_guaranteed_product,
      c.nested_achieved_product);
  return out;
}

ReportFactors parse_report_factors(const json& report) {
  ReportFactors out;
  out.p = parse_exponent(report.at("p"), "p");
  out.target = parse_exponent(report.at("target"), "target");
  const json& fs = report.at("factors");
  for (std::size_t k = 0; k < fs.size(); ++k)
    out.factors.push_back(
        MonicPoly::from_dense(parse_poly(fs[k].at("canonical"), "factors[" + std::to_string(k) + "].canonical")));
  return out;
}

namespace {

IntPoly random_lower(std::mt19937_64& rng, std::size_t m, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  IntPoly out(m);
  for (auto& c : out) c = dist(rng);
  return out;
}

MonicPoly perturb(const MonicPoly& g, const Integer& scale, std::mt19937_64& rng) {
  std::vector<Integer> lower(g.lower().begin(), g.lower().end());
  const IntPoly noise = random_lower(rng, lower.size(), 1000);
  for (std::size_t i = 0; i < lower.size(); ++i) lower[i] += scale * noise[i];
  return MonicPoly(std::move(lower));
}

bool divisible(const Integer& x, const Integer& d) { return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0; }

}  // namespace

std::vector<CheckResult> run_identity_checks(const FactorSystem& sys, std::uint64_t seed, std::size_t cases) {
  const PadicContext& ctx = sys.ctx;
  const auto& gs = sys.factors;
  const std::size_t n = gs.size();
  std::vector<CheckResult> out;
  const Integer res = sys.profile.res ? *sys.profile.res : resultant(gs);

  {
    Integer pairwise = 1;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = k + 1; l < n; ++l) pairwise *= sylvester_resultant(gs[k], gs[l]);
    out.push_back({"resultant equals product of pairwise resultants", res == pairwise, false,
                   "Res = " + to_string(res)});
  }
  {
    Integer rhs = res * res;
    for (const auto& g : gs) rhs *= discriminant(g);
    const Integer lhs = discriminant(product(gs));
    out.push_back({"discriminant of product equals product of discriminants times Res^2", lhs == rhs, false,
                   "disc = " + to_string(lhs)});
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> rdist(1, 8);
  {
    bool ok = true;
    std::string detail;
    for (std::size_t c = 0; c < cases && ok; ++c) {
      const std::uint64_t r = rdist(rng);
      const Integer pr = ctx.power(r);
      std::vector<MonicPoly> moved;
      for (const auto& g : gs) moved.push_back(perturb(g, pr, rng));
      if (!divisible(resultant(moved) - res, pr)) {
        ok = false;
        detail = "case " + std::to_string(c) + ", r = " + std::to_string(r);
      }
    }
    out.push_back({"perturbing factors by p^r moves the resultant by a multiple of p^r", ok, false, detail});
  }
  {
    bool ok = true;
    std::string detail;
    const Integer disc_f = discriminant(sys.f);
    for (std::size_t c = 0; c < cases && ok; ++c) {
      const std::uint64_t r = rdist(rng);
      const Integer pr = ctx.power(r);
      if (!divisible(discriminant(perturb(sys.f, pr, rng)) - disc_f, pr)) {
        ok = false;
        detail = "case " + std::to_string(c) + ", r = " + std::to_string(r);
      }
    }
    out.push_back({"perturbing f by p^r moves the discriminant by a multiple of p^r", ok, false, detail});
  }
  {
    const Integer disc_f = discriminant(sys.f);
    CheckResult cr{"2 t <= val_p(disc f) when f is congruent to the product mod p disc f", true, false, ""};
    if (disc_f == 0) {
      cr.skipped = true;
      cr.detail = "disc f = 0";
    } else {
      const IntPoly diff = subtract(sys.f.dense(), product(gs).dense());
      bool hyp = true;
      const Integer modulus = ctx.prime_integer() * disc_f;
      for (const auto& c : diff) hyp = hyp && divisible(c, modulus);
      if (!hyp) {
        cr.skipped = true;
        cr.detail = "hypothesis not met";
      } else {
        const std::uint64_t vd = valuation(disc_f, ctx).value();
        cr.passed = 2 * sys.profile.t <= vd;
        cr.detail = "2t = " + std::to_string(2 * sys.profile.t) + ", val(disc f) = " + std::to_string(vd);
      }
    }
    out.push_back(cr);
  }
  if (sys.special()) {
    out.push_back({"t' >= 0", *sys.profile.t_prime >= 0, false, "t' = " + std::to_string(*sys.profile.t_prime)});
    const ResultantMatrix A = build_matrix(gs);
    out.push_back({"p^{d_i} divides column i of the resultant matrix", columns_divisible(A.entries, sys.profile.d, ctx),
                   false, ""});
    const MonicPoly prod = product(gs);
    bool ok = true;
    for (std::size_t i = 0; i <= prod.degree(); ++i) {
      std::size_t j = 0, partial = 0;
      while (j < n && partial + gs[j].degree() <= i) partial += gs[j++].degree();
      if (valuation(prod.coeff(i), ctx) < n - j) ok = false;
    }
    out.push_back({"product coefficients satisfy val(b_i) >= n - max{j : m_1 + ... + m_j <= i}", ok, false, ""});
  }
  return out;
}

}  // namespace henselift
