#include "eulerop_cli/io.hpp"

#include <cstdio>
#include <map>

#include "eulerop/error.hpp"
#include "eulerop/expr.hpp"

namespace eulerop::cli {

namespace {

[[noreturn]] void bad_document(const std::string& what) {
  throw Error(ErrorKind::InvalidArgument, "malformed document: " + what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad_document(std::string("missing '") + key + "'");
  return j.at(key);
}

std::string latex_name(const std::string& name) {
  static const std::map<std::string, std::string> greek = {
      {"alpha", "\\alpha"}, {"beta", "\\beta"},     {"gamma", "\\gamma"}, {"lambda", "\\lambda"},
      {"nu", "\\nu"},       {"mu", "\\mu"},         {"l", "l"},           {"n", "n"}};
  auto it = greek.find(name);
  return it == greek.end() ? "\\mathrm{" + name + "}" : it->second;
}

bool is_sum(const OpExpr& e) {
  return e.kind == OpExpr::Kind::Add || e.kind == OpExpr::Kind::Sub;
}

std::string render(const OpExpr& e) {
  using K = OpExpr::Kind;
  auto paren = [](const OpExpr& a) {
    return is_sum(a) || a.kind == K::Neg ? "\\left(" + render(a) + "\\right)" : render(a);
  };
  switch (e.kind) {
    case K::X: return "x";
    case K::Deriv: return "\\frac{d}{dx}";
    case K::Euler: return "D";
    case K::Number: return e.number.get_str();
    case K::Param: return latex_name(e.name);
    case K::Neg: return "-" + paren(e.args[0]);
    case K::Add: return render(e.args[0]) + " + " + render(e.args[1]);
    case K::Sub: {
      const OpExpr& r = e.args[1];
      return render(e.args[0]) + " - " + (is_sum(r) ? paren(r) : render(r));
    }
    case K::Mul: return paren(e.args[0]) + " " + paren(e.args[1]);
    case K::Div: return "\\frac{" + render(e.args[0]) + "}{" + render(e.args[1]) + "}";
    case K::Pow: {
      const OpExpr& b = e.args[0];
      const bool atom = b.kind == K::X || b.kind == K::Param || b.kind == K::Number;
      return (atom ? render(b) : "\\left(" + render(b) + "\\right)") + "^{" +
             std::to_string(e.exponent) + "}";
    }
  }
  return {};
}

// Rebuilds polynomial subdocuments in place.
Json normalise(const Json& j) {
  if (j.is_object()) {
    // embedded polynomials are rebuilt in place; metadata keys keep their order
    Json rebuilt;
    if (j.contains("variable") && j.contains("terms")) {
      rebuilt = polynomial_json(read_polynomial(j), j.at("variable").get<std::string>());
    } else if (j.contains("basis") && j.contains("terms")) {
      rebuilt = sympoly_json(read_sympoly(j));
    }
    Json out = Json::object();
    for (const auto& [k, v] : j.items()) {
      out[k] = rebuilt.is_object() && rebuilt.contains(k) ? rebuilt[k] : normalise(v);
    }
    return out;
  }
  if (j.is_array()) {
    Json out = Json::array();
    for (const auto& v : j) out.push_back(normalise(v));
    return out;
  }
  return j;
}

}  // namespace

Format format_from_name(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "latex") return Format::Latex;
  throw Error(ErrorKind::InvalidArgument, "unknown format '" + std::string(name) + "'");
}

Json polynomial_json(const LaurentPoly& p, const std::string& var) {
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    terms.push_back(Json{{"exp", it->first}, {"coeff", it->second.str()}});
  }
  return Json{{"variable", var}, {"terms", terms}};
}

LaurentPoly read_polynomial(const Json& j) {
  if (!field(j, "variable").is_string()) bad_document("'variable' must be a string");
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) bad_document("'terms' must be an array");
  LaurentPoly p;
  for (const auto& t : terms) {
    const Json& e = field(t, "exp");
    const Json& c = field(t, "coeff");
    if (!e.is_number_integer() || !c.is_string()) bad_document("bad term");
    p.add_term(e.get<long>(), read_coefficient(c.get<std::string>()));
  }
  return p;
}

Json sympoly_json(const manybody::SymPoly& p) {
  Json terms = Json::array();
  for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
    terms.push_back(Json{{"partition", it->first.parts}, {"coeff", it->second.str()}});
  }
  return Json{{"basis", "m"}, {"N", p.n}, {"terms", terms}};
}

manybody::SymPoly read_sympoly(const Json& j) {
  if (field(j, "basis") != "m") bad_document("only the m basis is supported");
  const Json& n = field(j, "N");
  if (!n.is_number_unsigned()) bad_document("'N' must be a nonnegative integer");
  manybody::SymPoly p;
  p.n = n.get<std::size_t>();
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) bad_document("'terms' must be an array");
  for (const auto& t : terms) {
    const Json& part = field(t, "partition");
    const Json& c = field(t, "coeff");
    if (!part.is_array() || !c.is_string()) bad_document("bad term");
    std::vector<long> parts;
    for (const auto& v : part) {
      if (!v.is_number_integer()) bad_document("partition entries must be integers");
      parts.push_back(v.get<long>());
    }
    p.add_term(manybody::Partition(parts).padded(p.n), read_coefficient(c.get<std::string>()));
  }
  return p;
}

RatFun read_coefficient(std::string_view s) {
  const OpExpr e = parse_expr(s);
  return parse_scalar(s, identifiers(e));
}

std::string reemit(std::string_view json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::InvalidArgument, e.what());
  }
  return dump(normalise(j));
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

std::string decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string decimal(const Rational& r) { return decimal(r.get_d()); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string polynomial_csv(const LaurentPoly& p) {
  std::string out = "exp,coeff\n";
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    out += std::to_string(it->first) + "," + csv_field(it->second.str()) + "\n";
  }
  return out;
}

std::string sympoly_csv(const manybody::SymPoly& p) {
  std::string out = "partition,coeff\n";
  for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
    out += csv_field(it->first.str()) + "," + csv_field(it->second.str()) + "\n";
  }
  return out;
}

std::string latex(const RatFun& c) { return render(parse_expr(c.str())); }

std::string latex(const LaurentPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [k, c0] = *it;
    const bool neg = leading_negative(c0);
    const RatFun c = neg ? -c0 : c0;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    std::string cs = latex(c);
    if (c.str().find(' ') != std::string::npos && k != 0) cs = "\\left(" + cs + "\\right)";
    if (k == 0) {
      out += cs;
      continue;
    }
    if (!c.is_one()) out += cs + " ";
    out += var;
    if (k != 1) out += "^{" + std::to_string(k) + "}";
  }
  return out;
}

std::string latex(const manybody::SymPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
    const bool neg = leading_negative(it->second);
    const RatFun c = neg ? -it->second : it->second;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    std::string cs = latex(c);
    if (c.str().find(' ') != std::string::npos) cs = "\\left(" + cs + "\\right)";
    if (!c.is_one()) out += cs + " ";
    out += "m_{" + it->first.str() + "}";
  }
  return out;
}

std::string latex(const DiffOp& op) { return render(parse_expr(to_string(op))); }

}  // namespace eulerop::cli
