#include <cmath>

#include "doctest.h"
#include "support.hpp"
#include "young/problem_file.hpp"

using namespace young;
using testing_support::make;
using testing_support::reference_sum;

TEST_CASE("anchors") {
  const Anchors lin = make("x", 0.3, 0.7).anchors();
  CHECK(lin.h_inv_b == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(lin.alpha == 0.3);
  CHECK(lin.beta == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(lin.orientation == Orientation::ABelowInverse);

  const Anchors q = make("(x^4+1)^(1/4)-1", 3, 2).anchors();
  CHECK(q.h_inv_b == doctest::Approx(2 * std::pow(5.0, 0.25)).epsilon(1e-15));
  CHECK(q.alpha == q.h_inv_b);
  CHECK(q.beta == 3.0);
  CHECK(q.d() > 0);

  const Anchors r = make("exp(-1/x)", 0.5, 0.5).anchors();
  CHECK(r.h_inv_b == doctest::Approx(1 / std::log(2.0)).epsilon(1e-15));
  CHECK(r.alpha == 0.5);
  CHECK(r.d() < 0);

  CHECK(make("x^2", 0.0, 0.0, {}, 1.0).anchors().orientation == Orientation::Equal);
  CHECK_THROWS_AS(make("x^2", 0.0, 0.0), ValidationError);
}

TEST_CASE("oracle examples") {
  CHECK(oracle_gap(make("x", 0.4, 0.4)) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(std::fabs(oracle_gap(make("x", 0.4, 0.4))) <= 1e-15);
  CHECK(oracle_gap(make("x^3", 1.5, 1)) == doctest::Approx(0.515625).epsilon(1e-14));
  CHECK(oracle_sum(make("x^3", 1.5, 1)) == doctest::Approx(2.015625).epsilon(1e-14));
  CHECK(oracle_sum(make("x", 1, 1)) == doctest::Approx(1.0).epsilon(1e-15));

  const double quartic = oracle_sum(make("(x^4+1)^(1/4)-1", 3, 2)) + 3.0;
  CHECK(quartic >= 9.00004286765564673);
  CHECK(quartic <= 9.00004287010602764);
  const double expsq = oracle_sum(make("exp(x^2)-1", 1, 1)) + 1.0;
  CHECK(expsq >= 2.05281277502489567);
  CHECK(expsq <= 2.06746020503978898);

  const OracleDetails det = oracle_details(make("x^1.2", 0.8, std::pow(0.8, 1.2)));
  CHECK(std::fabs(det.gap) <= 1e-9);
}

TEST_CASE("oracle agrees with the multiprecision reference") {
  struct Case {
    const char* f;
    double a;
    double b;
  };
  const Case cases[] = {{"(x^4+1)^(1/4)-1", 3, 2}, {"exp(-1/x)", 0.5, 0.5}, {"exp(x^2)-1", 1, 1},
                        {"x^1.7", 0.9, 0.3},        {"0.6*ln(1+x)+x^2", 0.2, 1.1}};
  for (const Case& c : cases) {
    CAPTURE(c.f);
    const double ours = oracle_sum(make(c.f, c.a, c.b));
    const double ref = reference_sum(c.f, c.a, c.b);
    CHECK(std::fabs(ours - ref) <= 1e-12 * std::max(1.0, std::fabs(ref)));
  }
}

TEST_CASE("oracle symmetry under inversion") {
  // gap(h, a, b) = gap(h^{-1}, b, a)
  const double forward = oracle_gap(make("x^3", 1.5, 1));
  const double backward = oracle_gap(make("x^(1/3)", 1, 1.5));
  CHECK(forward == doctest::Approx(backward).epsilon(1e-12));
  const double f2 = oracle_gap(make("exp(x)-1", 0.3, 1.2));
  const double b2 = oracle_gap(make("ln(1+x)", 1.2, 0.3));
  CHECK(f2 == doctest::Approx(b2).epsilon(1e-12));
}

TEST_CASE("validation") {
  auto field_of = [](auto&& fn) -> std::string {
    try {
      fn();
    } catch (const ValidationError& e) {
      return e.field();
    }
    return "";
  };
  CHECK(field_of([] { make("x^2", -1, 0); }) == "a");
  CHECK(field_of([] { make("x^2", 1, -0.5); }) == "b");
  CHECK(field_of([] { make("x+1", 1, 1); }) == "function");
  CHECK(field_of([] { make("x^2-x", 2, 1); }) == "function");
  CHECK(field_of([] {
          ProblemInstance::create(parse_expr("x"), 1, 2, 1.5);
        }) == "b");
  CHECK(field_of([] {
          ProblemOptions o;
          o.taylor_order = 14;
          make("x", 1, 1, o);
        }) == "options.taylor_order");
}

TEST_CASE("problem files") {
  const ProblemFile lin = load_problem_text(R"({"function":"x","a":1,"b":1})");
  CHECK(oracle_gap(lin.instance) == doctest::Approx(0.0));
  REQUIRE(lin.methods.size() == 1);
  CHECK(lin.methods[0] == "all");

  const ProblemFile q = load_problem_text(R"({"function":"(x^4+1)^(1/4)-1","a":3,"b":2,"c":3})");
  CHECK(q.instance.c() == 3.0);
  CHECK(load_problem_text(R"({"function":"x","a":"1/2","b":"sqrt(2)/4"})").instance.b() ==
        doctest::Approx(std::sqrt(2.0) / 4));

  const ProblemFile opts = load_problem_text(
      R"j({"function":"x^3","a":1.5,"b":1,"methods":["endpoint-slope","taylor-jensen(2)"],
          "options":{"taylor_order":2,"t_grid":9,"quad_rel_tol":1e-10,"holder_upper":["inf",1],
                     "assume":["h(3)>=0"],"lp_p":2}})j");
  CHECK(opts.instance.options().taylor_order == 2);
  CHECK(opts.instance.options().t_grid == 9);
  CHECK(opts.instance.options().holder_upper.first == kInf);
  CHECK(opts.methods.size() == 2);

  auto field_of = [](const char* text) -> std::string {
    try {
      load_problem_text(text);
    } catch (const ValidationError& e) {
      return e.field();
    }
    return "";
  };
  CHECK(field_of(R"({"function":"x^2","a":-1,"b":0})") == "a");
  CHECK(field_of(R"({"function":"x","a":1})") == "b");
  CHECK(field_of(R"({"function":"x","a":1,"b":1,"colour":2})") == "colour");
  CHECK(field_of(R"({"function":"x","a":1,"b":1,"methods":["nope"]})") == "methods");
  CHECK(field_of(R"({"function":"x","a":"x","b":1})") == "a");
  CHECK(field_of(R"({"function":"x^","a":1,"b":1})") == "function");
  CHECK(field_of(R"({"function":"x","a":1,"b":1,"options":{"t_grid":"many"}})") == "options.t_grid");
  CHECK_THROWS_AS(load_problem_text("{not json"), ParseError);
  CHECK_THROWS_AS(load_problem_file("/nonexistent/problem.json"), ParseError);
}

TEST_CASE("instance json round trip") {
  ProblemOptions o;
  o.taylor_order = 3;
  o.integrand_offset = 1;
  const ProblemInstance inst = make("exp(x^2)-1", 1, 1, o);
  const ProblemFile back = load_problem_text(inst.to_json());
  CHECK(back.instance.a() == inst.a());
  CHECK(back.instance.b() == inst.b());
  CHECK(back.instance.c() == inst.c());
  CHECK(back.instance.options().taylor_order == 3);
  CHECK(back.instance.sum_shift() == 1.0);
  CHECK(oracle_sum(back.instance) == oracle_sum(inst));
}
