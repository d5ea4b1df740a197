#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "eulerop/diffop.hpp"
#include "eulerop/manybody.hpp"

namespace eulerop::cli {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Latex };
Format format_from_name(std::string_view name);

// {"variable":"x","terms":[{"exp":3,"coeff":"8"}, ...]}, descending exponents.
Json polynomial_json(const LaurentPoly& p, const std::string& var = "x");
LaurentPoly read_polynomial(const Json& j);

// {"basis":"m","N":2,"terms":[{"partition":[2,0],"coeff":"1"}, ...]}
Json sympoly_json(const manybody::SymPoly& p);
manybody::SymPoly read_sympoly(const Json& j);

/// Canonical coefficient string back to a RatFun; every identifier in the
/// string is taken as a parameter.
RatFun read_coefficient(std::string_view s);

/// Parses a JSON document and re-emits it, rebuilding every embedded
/// polynomial from its parsed value.
std::string reemit(std::string_view json_text);

std::string dump(const Json& j);

std::string decimal(double v);
std::string decimal(const Rational& r);

std::string polynomial_csv(const LaurentPoly& p);
std::string sympoly_csv(const manybody::SymPoly& p);
std::string csv_field(const std::string& s);

std::string latex(const RatFun& c);
std::string latex(const LaurentPoly& p, const std::string& var = "x");
std::string latex(const manybody::SymPoly& p);
std::string latex(const DiffOp& op);

}  // namespace eulerop::cli
