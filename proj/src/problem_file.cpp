#include "young/problem_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "young/bounds.hpp"

namespace young {

namespace {

using nlohmann::json;

double to_real(const json& value, const std::string& field) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) {
    const auto text = value.get<std::string>();
    if (text == "inf" || text == "+inf") return kInf;
    if (text == "-inf") return -kInf;
    try {
      const Expr e = parse_expr(text);
      if (depends_on_x(e.root())) throw ValidationError(field, "constant expected, got '" + text + "'");
      return eval(e, 0.0);
    } catch (const ValidationError&) {
      throw;
    } catch (const Error& err) {
      throw ValidationError(field, err.what());
    }
  }
  throw ValidationError(field, "expected a number");
}

int to_int(const json& value, const std::string& field) {
  const double v = to_real(value, field);
  if (std::floor(v) != v || std::fabs(v) > 1e9) throw ValidationError(field, "expected an integer");
  return static_cast<int>(v);
}

ExponentPair to_pair(const json& value, const std::string& field) {
  if (!value.is_array() || value.size() != 2) throw ValidationError(field, "expected a pair [r1, r2]");
  return {to_real(value[0], field), to_real(value[1], field)};
}

void reject_unknown(const json& obj, const std::set<std::string>& known, const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    if (!known.count(key)) throw ValidationError(where.empty() ? key : where + "." + key, "unknown key");
  }
}

ProblemOptions parse_options(const json& o) {
  ProblemOptions opts;
  if (!o.is_object()) throw ValidationError("options", "expected an object");
  reject_unknown(o,
                 {"taylor_order", "t_grid", "quad_rel_tol", "holder_lower", "holder_upper", "lp_p", "t",
                  "integrand_offset", "assume", "polya_lower", "polya_upper", "reflect"},
                 "options");
  if (o.contains("taylor_order")) opts.taylor_order = to_int(o["taylor_order"], "options.taylor_order");
  if (o.contains("t_grid")) opts.t_grid = to_int(o["t_grid"], "options.t_grid");
  if (o.contains("quad_rel_tol")) opts.quad_rel_tol = to_real(o["quad_rel_tol"], "options.quad_rel_tol");
  if (o.contains("holder_lower")) opts.holder_lower = to_pair(o["holder_lower"], "options.holder_lower");
  if (o.contains("holder_upper")) opts.holder_upper = to_pair(o["holder_upper"], "options.holder_upper");
  if (o.contains("lp_p")) opts.lp_p = to_real(o["lp_p"], "options.lp_p");
  if (o.contains("t")) opts.t = to_real(o["t"], "options.t");
  if (o.contains("integrand_offset")) {
    opts.integrand_offset = to_real(o["integrand_offset"], "options.integrand_offset");
  }
  if (o.contains("polya_lower")) opts.polya_lower = to_real(o["polya_lower"], "options.polya_lower");
  if (o.contains("polya_upper")) opts.polya_upper = to_real(o["polya_upper"], "options.polya_upper");
  if (o.contains("reflect")) {
    if (!o["reflect"].is_boolean()) throw ValidationError("options.reflect", "expected true or false");
    opts.reflect = o["reflect"].get<bool>();
  }
  if (o.contains("assume")) {
    if (!o["assume"].is_array()) throw ValidationError("options.assume", "expected a list of strings");
    for (const auto& item : o["assume"]) {
      if (!item.is_string()) throw ValidationError("options.assume", "expected a list of strings");
      opts.assume.push_back(item.get<std::string>());
    }
  }
  return opts;
}

}  // namespace

ProblemFile load_problem_text(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("problem must be a JSON object");
  reject_unknown(j, {"function", "a", "b", "c", "methods", "options"}, "");

  for (const char* key : {"function", "a", "b"}) {
    if (!j.contains(key)) throw ValidationError(key, "missing");
  }
  if (!j["function"].is_string()) throw ValidationError("function", "expected a string");
  const auto text = j["function"].get<std::string>();
  Expr h{nullptr, ""};
  try {
    h = parse_expr(text);
  } catch (const Error& e) {
    throw ValidationError("function", e.what());
  }
  const double a = to_real(j["a"], "a");
  const double b = to_real(j["b"], "b");
  std::optional<double> c;
  if (j.contains("c") && !j["c"].is_null()) c = to_real(j["c"], "c");
  const ProblemOptions opts = j.contains("options") ? parse_options(j["options"]) : ProblemOptions{};

  std::vector<std::string> methods{"all"};
  if (j.contains("methods")) {
    const json& m = j["methods"];
    if (m.is_string()) {
      methods = {m.get<std::string>()};
    } else if (m.is_array()) {
      methods.clear();
      for (const auto& item : m) {
        if (!item.is_string()) throw ValidationError("methods", "expected method names");
        methods.push_back(item.get<std::string>());
      }
    } else {
      throw ValidationError("methods", "expected \"all\" or a list of method names");
    }
  }
  try {
    expand_methods(methods, opts);
  } catch (const UnknownMethod& e) {
    throw ValidationError("methods", e.what());
  }

  return {ProblemInstance::create(std::move(h), a, b, c, opts), methods};
}

ProblemFile load_problem_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return load_problem_text(text.str());
}

ProblemInstance load_problem(const std::filesystem::path& path) { return load_problem_file(path).instance; }

}  // namespace young
