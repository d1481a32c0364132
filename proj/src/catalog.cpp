#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <string_view>

#include "bounds_internal.hpp"
#include "young/jet.hpp"

namespace young {

namespace {

struct Entry {
  std::string_view id;
  MethodKind kind;
  int max_args;  // 0: no parentheses allowed
};

constexpr std::array<Entry, 13> kEntries = {{
    {"endpoint-slope", MethodKind::EndpointSlope, 0},
    {"hh-cebysev", MethodKind::HhCebysev, 0},
    {"jensen-first", MethodKind::JensenFirst, 0},
    {"holder-norm", MethodKind::HolderNorm, 0},
    {"taylor-lagrange", MethodKind::TaylorLagrange, 1},
    {"taylor-holder", MethodKind::TaylorHolder, 1},
    {"taylor-cebysev", MethodKind::TaylorCebysev, 1},
    {"taylor-jensen", MethodKind::TaylorJensen, 1},
    {"taylor-product-hh", MethodKind::TaylorProductHh, 1},
    {"polya-first", MethodKind::PolyaFirst, 0},
    {"polya-second", MethodKind::PolyaSecond, 0},
    {"polya-higher", MethodKind::PolyaHigher, 2},
    {"lp-remainder", MethodKind::LpRemainder, 2},
}};

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

double parse_real(const std::string& text, const std::string& method) {
  if (text == "inf" || text == "+inf") return kInf;
  if (text == "-inf") return -kInf;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UnknownMethod("bad argument '" + text + "' in method '" + method + "'");
  }
  return v;
}

const Entry& entry_for(MethodKind kind) {
  for (const Entry& e : kEntries) {
    if (e.kind == kind) return e;
  }
  throw UnknownMethod("unknown method kind");
}

}  // namespace

std::string MethodSpec::name() const {
  std::string out(entry_for(kind).id);
  switch (kind) {
    case MethodKind::TaylorLagrange:
    case MethodKind::TaylorHolder:
    case MethodKind::TaylorCebysev:
    case MethodKind::TaylorJensen:
    case MethodKind::TaylorProductHh:
      out += "(" + std::to_string(n) + ")";
      break;
    case MethodKind::PolyaHigher:
      out += "(" + std::to_string(n) + (t ? "," + detail::format_number(*t) : "") + ")";
      break;
    case MethodKind::LpRemainder:
      out += "(" + std::to_string(n) + (p ? "," + detail::format_number(*p) : "") + ")";
      break;
    default:
      break;
  }
  return out;
}

MethodSpec parse_method(const std::string& raw, int default_order) {
  const std::string text = trim(raw);
  const std::size_t open = text.find('(');
  const std::string id = trim(text.substr(0, open));
  const auto it = std::find_if(kEntries.begin(), kEntries.end(), [&](const Entry& e) { return e.id == id; });
  if (it == kEntries.end()) throw UnknownMethod("unknown method '" + text + "'");

  std::vector<std::string> args;
  if (open != std::string::npos) {
    if (text.back() != ')') throw UnknownMethod("unbalanced parentheses in '" + text + "'");
    const std::string inner = text.substr(open + 1, text.size() - open - 2);
    std::size_t start = 0;
    while (start <= inner.size()) {
      const std::size_t comma = inner.find(',', start);
      args.push_back(trim(inner.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (args.size() == 1 && args[0].empty()) args.clear();
  }
  if (static_cast<int>(args.size()) > it->max_args) {
    throw UnknownMethod("too many arguments for '" + std::string(it->id) + "'");
  }

  MethodSpec spec;
  spec.kind = it->kind;
  spec.n = default_order;
  if (!args.empty()) {
    const double n = parse_real(args[0], text);
    if (!(n >= 0.0) || std::floor(n) != n || n > kDefaultOrderCap - 3) {
      throw UnknownMethod("order must be an integer in [0, 13] in '" + text + "'");
    }
    spec.n = static_cast<int>(n);
  }
  if (args.size() == 2) {
    const double v = parse_real(args[1], text);
    if (spec.kind == MethodKind::PolyaHigher) {
      spec.t = v;
    } else {
      spec.p = v;
    }
  }
  return spec;
}

std::vector<std::string> all_method_names() {
  std::vector<std::string> out;
  for (const Entry& e : kEntries) out.emplace_back(e.id);
  return out;
}

std::vector<MethodSpec> expand_methods(const std::vector<std::string>& names, const ProblemOptions& options) {
  std::vector<MethodSpec> out;
  for (const std::string& name : names) {
    if (trim(name) == "all") {
      for (const Entry& e : kEntries) out.push_back(parse_method(std::string(e.id), options.taylor_order));
    } else {
      out.push_back(parse_method(name, options.taylor_order));
    }
  }
  for (MethodSpec& spec : out) {
    if (spec.kind == MethodKind::LpRemainder && !spec.p) spec.p = options.lp_p;
  }
  return out;
}

BoundResult evaluate(const MethodSpec& spec, const ProblemInstance& inst) {
  const ProblemOptions& o = inst.options();
  BoundResult r;
  switch (spec.kind) {
    case MethodKind::EndpointSlope:
      r = bound_endpoint_slope(inst);
      break;
    case MethodKind::HhCebysev:
      r = bound_hh_cebysev(inst);
      break;
    case MethodKind::JensenFirst:
      r = bound_jensen_first(inst);
      break;
    case MethodKind::HolderNorm:
      r = bound_holder_norm(inst, o.holder_lower, o.holder_upper);
      break;
    case MethodKind::TaylorLagrange:
      r = bound_taylor_lagrange(inst, spec.n);
      break;
    case MethodKind::TaylorHolder:
      r = bound_taylor_holder(inst, spec.n, o.holder_lower, o.holder_upper);
      break;
    case MethodKind::TaylorCebysev:
      r = bound_taylor_cebysev(inst, spec.n);
      break;
    case MethodKind::TaylorJensen:
      r = bound_taylor_jensen(inst, spec.n);
      break;
    case MethodKind::TaylorProductHh:
      r = bound_taylor_product_hh(inst, spec.n);
      break;
    case MethodKind::PolyaFirst:
      r = bound_polya_first(inst);
      break;
    case MethodKind::PolyaSecond:
      r = bound_polya_second(inst);
      break;
    case MethodKind::PolyaHigher:
      r = bound_polya_higher(inst, spec.n, spec.t ? spec.t : o.t);
      break;
    case MethodKind::LpRemainder:
      r = bound_lp_remainder(inst, spec.n, spec.p.value_or(o.lp_p), o.t);
      break;
  }
  r.method = spec.name();
  return r;
}

}  // namespace young
