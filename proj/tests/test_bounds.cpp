#include <cmath>
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "young/sweep.hpp"
#include "young/problem_file.hpp"

using namespace young;
using testing_support::make;

namespace {

void check_pair(const BoundResult& r, double lo, double up, double tol = 1e-12) {
  CAPTURE(r.method);
  REQUIRE(r.lower.has_value());
  REQUIRE(r.upper.has_value());
  CHECK(std::fabs(*r.lower - lo) <= tol);
  CHECK(std::fabs(*r.upper - up) <= tol);
}

void check_contains(const BoundResult& r, double truth, double tol = 1e-12) {
  CAPTURE(r.method);
  CAPTURE(truth);
  if (r.lower) CHECK(*r.lower <= truth + tol);
  if (r.upper) CHECK(truth <= *r.upper + tol);
}

}  // namespace

TEST_CASE("cubic instance, hand-computed values") {
  const ProblemInstance cube = make("x^3", 1.5, 1);
  const double sum = oracle_sum(cube);
  CHECK(oracle_gap(cube) == doctest::Approx(0.515625).epsilon(1e-14));

  check_pair(bound_endpoint_slope(cube), 0.375, 0.84375);
  check_pair(bound_hh_cebysev(cube), 0.4765625, 0.59375);
  check_pair(bound_jensen_first(cube), 49.0 / 96.0, 0.53125);
  CHECK(*bound_holder_norm(cube, {1, -kInf}, {1, kInf}).upper == doctest::Approx(0.84375).epsilon(1e-14));
  // Gap-scale values; the estimator reports REMAINDER(1) = gap - T_1.
  const double t1 = taylor_sum(cube, 1);
  CHECK(t1 == doctest::Approx(0.375).epsilon(1e-15));
  check_pair(bound_taylor_lagrange(cube, 1), 0.5 - t1, 0.5625 - t1);
  CHECK(*bound_taylor_holder(cube, 1, {1, -kInf}, {1, kInf}).upper == doctest::Approx(0.1875).epsilon(1e-14));

  const BoundResult tc0 = bound_taylor_cebysev(cube, 0);
  CHECK_FALSE(tc0.lower.has_value());
  CHECK(*tc0.upper == doctest::Approx(0.59375).epsilon(1e-14));
  const BoundResult tc1 = bound_taylor_cebysev(cube, 1);
  CHECK(*tc1.upper == doctest::Approx(0.15625).epsilon(1e-14));
  CHECK(oracle_target(tc1.target, sum) == doctest::Approx(0.140625).epsilon(1e-13));

  const BoundResult p1 = bound_polya_first(cube);
  CHECK(p1.target.tag == TargetTag::Shifted);
  check_pair(p1, 7.328125 / 7.5, 9.078125 / 7.5);
  CHECK(oracle_target(p1.target, sum) == doctest::Approx(1.015625).epsilon(1e-14));

  // Middle quantity: SUM - a h(a) + (a^2 h'(a) - xb^2 h'(xb))/2.
  const BoundResult p2 = bound_polya_second(cube);
  CHECK(oracle_target(p2.target, sum) == doctest::Approx(3.046875).epsilon(1e-14));
  check_contains(p2, 3.046875);

  for (const BoundResult& r : {bound_polya_higher(cube, 1, 1.25), bound_polya_higher(cube, 2),
                               bound_taylor_jensen(cube, 1), bound_taylor_product_hh(cube, 1)}) {
    check_contains(r, oracle_target(r.target, sum));
  }

  const BoundResult lp = bound_lp_remainder(cube, 1, kInf, 1.25);
  CHECK(*lp.upper == doctest::Approx(2 * std::pow(0.25, 3) / 6 * 9).epsilon(1e-14));
  check_contains(lp, oracle_target(lp.target, sum));
}

TEST_CASE("every catalog entry sandwiches the cubic oracle") {
  ProblemOptions o;
  o.taylor_order = 2;
  const ProblemInstance cube = make("x^3", 1.5, 1, o);
  const double sum = oracle_sum(cube);
  for (const MethodSpec& spec : expand_methods({"all"}, o)) {
    const BoundResult r = evaluate(spec, cube);
    CHECK(r.applicable);
    check_contains(r, oracle_target(r.target, sum), 1e-12);
  }
}

TEST_CASE("linear collapse") {
  for (double lambda : {0.5, 1.0, 3.0}) {
    CAPTURE(lambda);
    const double a = 1.0;
    const double b = 0.4 * lambda;
    const ProblemInstance inst = make(std::to_string(lambda) + "*x", a, b);
    const double expect = lambda * (a - b / lambda) * (a - b / lambda) / 2;
    check_pair(bound_endpoint_slope(inst), expect, expect);
    check_pair(bound_hh_cebysev(inst), expect, expect);
    check_pair(bound_jensen_first(inst), expect, expect);
    CHECK(oracle_gap(inst) == doctest::Approx(expect).epsilon(1e-13));
  }
  check_pair(bound_endpoint_slope(make("x", 1, 0.5)), 0.125, 0.125);
}

TEST_CASE("h = x, a = b = 1: every two-sided row is exact") {
  const ProblemInstance inst = make("x", 1, 1);
  const double sum = oracle_sum(inst);
  for (const MethodSpec& spec : expand_methods({"all"}, inst.options())) {
    const BoundResult r = evaluate(spec, inst);
    if (!r.lower || !r.upper) continue;
    CAPTURE(r.method);
    CHECK(*r.sum_lower() == doctest::Approx(sum).epsilon(1e-14));
    CHECK(*r.sum_upper() == doctest::Approx(sum).epsilon(1e-14));
  }
}

TEST_CASE("holder family") {
  const ProblemInstance cube = make("x^3", 1.5, 1);
  // (p, q) = (inf, 1): |d| times the total variation of h.
  CHECK(*bound_holder_norm(cube, {1, -kInf}, {kInf, 1}).upper == doctest::Approx(0.5 * (3.375 - 1)).epsilon(1e-13));
  CHECK(*bound_holder_norm(make("x", 1, 0.3), {-kInf, 1}, {1, kInf}).lower == 0.0);
  CHECK(*bound_holder_norm(cube, {0.5, -1}, {2, 2}).lower <= oracle_gap(cube));
  CHECK_THROWS_AS(bound_holder_norm(cube, {1, -kInf}, {2, 3}), ExponentDomain);
  CHECK_THROWS_AS(bound_holder_norm(cube, {2, 2}, {2, 2}), ExponentDomain);
  // C_r needs r(n+1) + 1 > 0.
  CHECK_THROWS_AS(bound_holder_norm(cube, {-1, 0.5}, {1, kInf}), ExponentDomain);
  const BoundResult both = bound_holder_norm(cube, {1, -kInf}, {2, 2});
  CHECK_FALSE(both.alternates.empty());
}

TEST_CASE("reductions at n = 0") {
  const char* fs[] = {"x^3", "exp(x^2)-1", "(x^4+1)^(1/4)-1", "exp(-1/x)"};
  const double ab[][2] = {{1.5, 1}, {1, 1}, {3, 2}, {0.5, 0.5}};
  for (int i = 0; i < 4; ++i) {
    const ProblemInstance inst = make(fs[i], ab[i][0], ab[i][1]);
    const BoundResult es = bound_endpoint_slope(inst);
    const BoundResult tl = bound_taylor_lagrange(inst, 0);
    CHECK(*tl.lower == *es.lower);
    CHECK(*tl.upper == *es.upper);
    const BoundResult hn = bound_holder_norm(inst, {0.5, -1}, {3, 1.5});
    const BoundResult th = bound_taylor_holder(inst, 0, {0.5, -1}, {3, 1.5});
    CHECK(std::fabs(*hn.lower - *th.lower) <= 1e-12);
    CHECK(std::fabs(*hn.upper - *th.upper) <= 1e-12);
  }
}

TEST_CASE("equality case b = h(a)") {
  for (const char* f : {"x^1.2", "exp(0.7*x)-1", "0.4*ln(1+x)+x^2"}) {
    CAPTURE(f);
    const double a = 0.8;
    ProblemOptions o;
    o.taylor_order = 2;
    const ProblemInstance inst = make(f, a, eval(parse_expr(f), a), o);
    CHECK(std::fabs(oracle_gap(inst)) <= 1e-9);
    for (const MethodSpec& spec : expand_methods({"all", "taylor-lagrange(1)", "taylor-jensen(3)"}, o)) {
      const BoundResult r = evaluate(spec, inst);
      if (r.target.tag != TargetTag::Gap && r.target.tag != TargetTag::Remainder) continue;
      CAPTURE(r.method);
      if (r.lower) CHECK(std::fabs(*r.lower) <= 1e-10);
      if (r.upper) CHECK(std::fabs(*r.upper) <= 1e-10);
    }
  }
}

TEST_CASE("S polynomial derivatives") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int n = 1; n <= 6; ++n) {
    std::vector<double> derivs;
    for (int j = 0; j <= n - 2; ++j) derivs.push_back(u(rng));
    const SnPolynomial s(n, derivs, u(rng));
    for (int trial = 0; trial < 5; ++trial) {
      const double x = u(rng);
      const double step = 1e-5;
      for (int i = 0; i < n; ++i) {
        const double fd = (s.partial(i, x + step) - s.partial(i, x - step)) / (2 * step);
        const double exact = s.partial(i + 1, x);
        CAPTURE(n);
        CAPTURE(i);
        CHECK(std::fabs(fd - exact) <= 1e-6 * std::max(1.0, std::fabs(exact)));
      }
      CHECK(s.partial(n, x) == doctest::Approx(s.partial(n, 0.0)).epsilon(1e-14));
      CHECK(s.partial(n + 1, x) == 0.0);
    }
    // Taylor expansion of a polynomial is exact: sum (-1)^i/i! S^(i)(u0) t^i = S(u0 - t).
    const double u0 = u(rng);
    const double t = u(rng);
    double series = 0.0;
    double fact = 1.0;
    for (int i = 0; i <= n; ++i) {
      if (i > 0) fact *= i;
      series += (i % 2 ? -1.0 : 1.0) / fact * s.partial(i, u0) * std::pow(t, i);
    }
    CHECK(series == doctest::Approx(s.value(u0 - t)).epsilon(1e-12));
  }
}

TEST_CASE("polya estimators") {
  // Degenerate derivative range: exact linear value.
  const ProblemInstance lin = make("x", 1, 0.5);
  const BoundResult p1 = bound_polya_first(lin);
  CHECK(p1.case_label.find("degenerate") != std::string::npos);
  CHECK(*p1.lower == *p1.upper);
  CHECK(*p1.lower == doctest::Approx(oracle_target(p1.target, oracle_sum(lin))).epsilon(1e-15));
  const BoundResult p2 = bound_polya_second(lin);
  check_contains(p2, oracle_target(p2.target, oracle_sum(lin)));
  for (int n : {0, 1, 2}) check_pair(bound_polya_higher(lin, n), 0.375, 0.375);

  // Wider user ranges are accepted and loosen the bracket.
  ProblemOptions wide;
  wide.polya_lower = 2.0;
  wide.polya_upper = 8.0;
  const ProblemInstance cube = make("x^3", 1.5, 1, wide);
  const BoundResult loose = bound_polya_first(cube);
  check_contains(loose, 1.015625);
  CHECK(*loose.lower < 7.328125 / 7.5);
  CHECK(*loose.upper > 9.078125 / 7.5);

  CHECK_THROWS_AS(bound_polya_higher(make("x^3", 1.5, 1), 1, 2.0), InvalidT);
  CHECK_THROWS_AS(bound_lp_remainder(make("x^3", 1.5, 1), 1, 2.0, 0.5), InvalidT);
  ProblemOptions no_reflect;
  no_reflect.reflect = false;
  CHECK_THROWS_AS(bound_lp_remainder(make("x^3", 1, 3.375, no_reflect), 1, 2.0), OrientationError);
}

TEST_CASE("lp remainder: tight bound never exceeds the coarse one") {
  for (int i = 0; i < 100; ++i) {
    const ProblemFile pf = load_problem_text(sweep_instance_json(5, i));
    const double sum = oracle_sum(pf.instance);
    for (double p : {1.0, 1.5, 2.0, 4.0, kInf}) {
      for (int n : {0, 1, 2}) {
        const BoundResult r = bound_lp_remainder(pf.instance, n, p);
        double coarse = -1;
        for (const Alternate& alt : r.alternates) {
          if (alt.name == "coarse bound") coarse = alt.value;
        }
        CAPTURE(pf.instance.to_json());
        CHECK(*r.upper <= coarse * (1 + 1e-12) + 1e-300);
        check_contains(r, oracle_target(r.target, sum), 1e-9);
      }
    }
  }
}

TEST_CASE("estimators reflect a swapped orientation") {
  // Same functional from both sides of a = h^{-1}(b).
  for (const char* f : {"x^3", "exp(x)-1"}) {
    for (double b : {0.2, 2.5}) {
      ProblemOptions o;
      o.taylor_order = 3;
      const ProblemInstance inst = make(f, 1.0, b, o);
      const double sum = oracle_sum(inst);
      for (const MethodSpec& spec : expand_methods({"all"}, o)) {
        const BoundResult r = evaluate(spec, inst);
        CAPTURE(f);
        CAPTURE(b);
        REQUIRE(r.applicable);
        check_contains(r, oracle_target(r.target, sum), 1e-10);
      }
    }
  }
}
