#include "young/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "json.hpp"
#include "young/bounds.hpp"
#include "young/problem_file.hpp"

namespace young {

namespace {

class Source {
 public:
  Source(std::uint64_t seed, int index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index)};
    rng_.seed(seq);
  }
  // Portable uniform double in [lo, hi).
  double uniform(double lo, double hi) {
    const double unit = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }
  int pick(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }

 private:
  std::mt19937_64 rng_;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Increasing maps with value 0 at 0, applied to `arg`.
std::string base_map(int kind, const std::string& arg, double p, double lambda) {
  switch (kind) {
    case 0:
      return "(" + arg + ")^" + num(p);
    case 1:
      return "exp(" + num(lambda) + "*(" + arg + "))-1";
    default:
      return num(lambda) + "*ln(1+(" + arg + "))+(" + arg + ")^2";
  }
}

struct Draw {
  std::string function;
  double c;
  double a;
  bool equality;
  double b_fraction;
  int order;
  double lp;
};

Draw draw(std::uint64_t seed, int index) {
  Source src(seed, index);
  Draw d;
  const int family = src.pick(4);
  if (family < 3) {
    d.function = base_map(family, "x", src.uniform(1.2, 5.0), src.uniform(0.3, 1.5));
    d.c = src.uniform(0.5, 1.5);
  } else {
    // Compositions use narrower parameters so values stay moderate.
    const int outer = src.pick(3);
    const int inner = src.pick(3);
    const std::string in = base_map(inner, "x", src.uniform(1.2, 2.5), src.uniform(0.3, 1.0));
    d.function = base_map(outer, in, src.uniform(1.2, 2.5), src.uniform(0.3, 1.0));
    d.c = src.uniform(0.5, 1.0);
  }
  d.a = src.uniform(0.05 * d.c, d.c);
  d.equality = src.pick(5) == 0;
  d.b_fraction = src.uniform(0.0, 1.0);
  d.order = src.pick(4);
  const double lps[] = {1.0, 2.0, 3.0, kInf};
  d.lp = lps[src.pick(4)];
  return d;
}

std::string instance_json(const Draw& d) {
  const Expr h = parse_expr(d.function);
  double b;
  if (d.equality) {
    b = eval(h, d.a);
  } else {
    const double lo = eval(h, 0.05 * d.c);
    const double hi = eval(h, d.c);
    b = lo + d.b_fraction * (hi - lo);
  }
  nlohmann::json opts{{"taylor_order", d.order}};
  if (std::isinf(d.lp)) {
    opts["lp_p"] = "inf";
  } else {
    opts["lp_p"] = d.lp;
  }
  nlohmann::json j{{"function", d.function}, {"a", d.a}, {"b", b}, {"c", d.c}, {"options", opts}};
  return j.dump();
}

bool remainder_like(TargetTag tag) { return tag == TargetTag::Gap || tag == TargetTag::Remainder; }

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string sweep_instance_json(std::uint64_t seed, int index) { return instance_json(draw(seed, index)); }

int SweepSummary::violation_count(const std::string& kind) const {
  int n = 0;
  for (const auto& v : violations) n += v.kind == kind;
  return n;
}

SweepSummary sweep(std::uint64_t seed, int count) {
  SweepSummary s;
  s.seed = seed;
  s.count = count;
  for (int i = 0; i < count; ++i) {
    const Draw d = draw(seed, i);
    const std::string json = instance_json(d);
    s.equality_instances += d.equality;
    std::optional<ProblemFile> pf;
    OracleDetails oracle;
    try {
      pf.emplace(load_problem_text(json));
      oracle = oracle_details(pf->instance);
    } catch (const Error& e) {
      s.errors.push_back("instance " + std::to_string(i) + ": " + e.what() + " " + json);
      continue;
    }
    const ProblemInstance& inst = pf->instance;
    if (oracle.gap < -1e-10) s.violations.push_back({"NONNEGATIVITY", "oracle", "gap " + fmt(oracle.gap), json});
    if (d.equality) {
      ++s.equality_checks;
      if (std::fabs(oracle.gap) > 1e-9) {
        s.violations.push_back({"EQUALITY", "oracle", "gap " + fmt(oracle.gap), json});
      }
    }

    std::vector<std::string> names{"all"};
    if (d.order != 0) {
      names.push_back("taylor-lagrange(0)");
      names.push_back("taylor-holder(0)");
    }
    std::vector<BoundResult> results;
    for (const MethodSpec& spec : expand_methods(names, inst.options())) {
      BoundResult r;
      try {
        r = evaluate(spec, inst);
      } catch (const Error& e) {
        s.errors.push_back("instance " + std::to_string(i) + " " + spec.name() + ": " + e.what());
        continue;
      }
      ++s.estimates;
      results.push_back(r);
      if (!r.applicable) {
        ++s.not_applicable;
        continue;
      }
      const double truth = oracle_target(r.target, oracle.sum);
      ++s.sandwich_checks;
      const bool low_ok = !r.lower || *r.lower - kSandwichTol <= truth;
      const bool up_ok = !r.upper || truth <= *r.upper + kSandwichTol;
      if (!low_ok || !up_ok) {
        s.violations.push_back({"SANDWICH", r.method,
                                "oracle " + fmt(truth) + " outside [" + (r.lower ? fmt(*r.lower) : "-") + ", " +
                                    (r.upper ? fmt(*r.upper) : "-") + "] on " + r.target.label(),
                                json});
      }
      if (d.equality && remainder_like(r.target.tag)) {
        ++s.equality_checks;
        const double worst = std::max(r.lower ? std::fabs(*r.lower) : 0.0, r.upper ? std::fabs(*r.upper) : 0.0);
        if (worst > kEqualityTol) {
          s.violations.push_back({"EQUALITY", r.method, "bound magnitude " + fmt(worst) + " at b = h(a)", json});
        }
      }
    }

    auto find = [&](const std::string& name) -> const BoundResult* {
      for (const auto& r : results) {
        if (r.method == name) return &r;
      }
      return nullptr;
    };
    auto compare = [&](const char* x, const char* y, double tol) {
      const BoundResult* p = find(x);
      const BoundResult* q = find(y);
      if (!p || !q) return;
      ++s.reduction_checks;
      auto diff = [](const std::optional<double>& u, const std::optional<double>& v) {
        if (u.has_value() != v.has_value()) return kInf;
        return u ? std::fabs(*u - *v) : 0.0;
      };
      const double worst = std::max(diff(p->lower, q->lower), diff(p->upper, q->upper));
      if (worst > tol) {
        s.violations.push_back({"REDUCTION", std::string(x) + " vs " + y, "difference " + fmt(worst), json});
      }
    };
    compare("taylor-lagrange(0)", "endpoint-slope", 1e-14);
    compare("taylor-holder(0)", "holder-norm", 1e-12);
  }
  return s;
}

std::string SweepSummary::text() const {
  std::ostringstream out;
  out << "sweep seed=" << seed << " count=" << count << "\n";
  out << "equality instances: " << equality_instances << "\n";
  out << "estimates: " << estimates << " (hypotheses not verified: " << not_applicable << ")\n";
  out << "sandwich checks: " << sandwich_checks << ", violations: " << violation_count("SANDWICH") << "\n";
  out << "reduction checks: " << reduction_checks << ", violations: " << violation_count("REDUCTION") << "\n";
  out << "equality checks: " << equality_checks << ", violations: " << violation_count("EQUALITY") << "\n";
  out << "nonnegativity violations: " << violation_count("NONNEGATIVITY") << "\n";
  out << "errors: " << errors.size() << "\n";
  for (const auto& e : errors) out << "  error " << e << "\n";
  for (const auto& v : violations) {
    out << "  InvariantViolation " << v.kind << " " << v.method << ": " << v.detail << "\n    replay: " << v.instance
        << "\n";
  }
  out << "total violations: " << violations.size() << "\n";
  return out.str();
}

}  // namespace young
