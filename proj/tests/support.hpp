#pragma once

// Helpers shared by the unit tests and the acceptance binary.

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/tools/roots.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <string>
#include <vector>

#include "young/bounds.hpp"
#include "young/problem.hpp"

namespace testing_support {

using Big = boost::multiprecision::cpp_bin_float_50;

inline young::ProblemInstance make(const std::string& f, double a, double b, young::ProblemOptions opts = {},
                                   std::optional<double> c = std::nullopt) {
  return young::ProblemInstance::create(young::parse_expr(f), a, b, c, opts);
}

// Independent reference for the integral sum: tanh-sinh in 50 digits and a
// TOMS748 root, using int_0^b h^{-1} = b h^{-1}(b) - int_0^{h^{-1}(b)} h.
inline double reference_sum(const std::string& f, double a, double b) {
  const young::Expr h = young::parse_expr(f);
  // h(0) = 0 holds as a limit for every valid instance.
  auto fn = [&](const Big& x) { return x <= 0 ? Big(0) : young::eval_as<Big>(h.root(), x); };
  boost::math::quadrature::tanh_sinh<Big> ts;
  auto integral = [&](const Big& hi) -> Big {
    if (hi == 0) return Big(0);
    return ts.integrate(fn, Big(0), hi);
  };
  Big xb = 0;
  if (b > 0) {
    Big hi = 1;
    while (fn(hi) < Big(b)) hi *= 2;
    std::uintmax_t iters = 200;
    auto root = boost::math::tools::toms748_solve([&](const Big& x) { return fn(x) - Big(b); }, Big(0), hi,
                                                  boost::math::tools::eps_tolerance<Big>(150), iters);
    xb = (root.first + root.second) / 2;
  }
  const Big sum = integral(Big(a)) + Big(b) * xb - integral(xb);
  return static_cast<double>(sum);
}

// Synthetic instances h = x + eps*psi(x) covering every (order parity,
// orientation, direction) combination of the remainder estimators.
struct CaseInstance {
  std::string function;
  double a;
  double b;
  int n;
  bool a_above;  // b < h(a)
  int g_direction;  // sign of h^(n+2)
  int g_convexity;  // sign of h^(n+3)
};

inline std::vector<CaseInstance> case_instances() {
  struct Psi {
    std::string text;
    double eps;
  };
  // psi^(k) signs: e^x - 1 all positive; 1 - e^-x alternates starting at +.
  const std::vector<Psi> psis = {{"(exp(x)-1)", 0.2}, {"(exp(x)-1)", -0.2}, {"(1-exp(-x))", 0.2}, {"(1-exp(-x))", -0.2}};
  std::vector<CaseInstance> out;
  for (int n = 0; n <= 3; ++n) {
    for (const Psi& psi : psis) {
      for (bool above : {true, false}) {
        CaseInstance c;
        char buf[64];
        std::snprintf(buf, sizeof buf, "x+(%g)*", psi.eps);
        c.function = buf + psi.text;
        const young::Expr h = young::parse_expr(c.function);
        c.n = n;
        c.a = 1.0;
        c.a_above = above;
        c.b = young::eval(h, above ? 0.6 : 1.4);
        const bool alternating = psi.text[1] == '1';
        auto sign = [&](int k) {
          const int s = alternating && k % 2 == 0 ? -1 : 1;
          return psi.eps > 0 ? s : -s;
        };
        c.g_direction = sign(n + 2);
        c.g_convexity = sign(n + 3);
        out.push_back(c);
      }
    }
  }
  return out;
}

struct CaseCheck {
  std::string method;
  std::string label;
  bool applicable = false;
  bool holds = false;
  std::string detail;
};

// Runs the case-table estimators on one synthetic instance and checks each
// bound against the oracle.
inline std::vector<CaseCheck> run_case(const CaseInstance& c, double tol = 1e-10) {
  young::ProblemOptions opts;
  opts.taylor_order = c.n;
  // c = 1.5 keeps h increasing for the eps < 0 members.
  const young::ProblemInstance inst = make(c.function, c.a, c.b, opts, 1.5);
  const double sum = young::oracle_sum(inst);
  std::vector<young::BoundResult> results = {
      young::bound_taylor_lagrange(inst, c.n),  young::bound_taylor_cebysev(inst, c.n),
      young::bound_taylor_jensen(inst, c.n),    young::bound_taylor_product_hh(inst, c.n),
      young::bound_polya_higher(inst, c.n),
  };
  std::vector<CaseCheck> out;
  for (const auto& r : results) {
    CaseCheck k;
    k.method = r.method;
    k.label = r.case_label;
    k.applicable = r.applicable;
    const double truth = young::oracle_target(r.target, sum);
    const bool lo = !r.lower || *r.lower <= truth + tol;
    const bool up = !r.upper || truth <= *r.upper + tol;
    k.holds = lo && up && (r.lower || r.upper);
    char buf[200];
    std::snprintf(buf, sizeof buf, "%s n=%d b%sh(a): [%.17g, %.17g] vs %.17g", c.function.c_str(), c.n,
                  c.a_above ? "<" : ">", r.lower ? *r.lower : -HUGE_VAL, r.upper ? *r.upper : HUGE_VAL, truth);
    k.detail = buf;
    out.push_back(k);
  }
  return out;
}

}  // namespace testing_support
