#include "eulerop/symbol.hpp"

#include <cctype>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "eulerop/error.hpp"

namespace eulerop {

namespace {

struct Registry {
  std::shared_mutex mutex;
  std::deque<std::string> names;
  std::unordered_map<std::string, std::uint32_t> ids;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

Symbol Symbol::intern(std::string_view name) {
  auto& r = registry();
  std::string key(name);
  {
    std::shared_lock lock(r.mutex);
    if (auto it = r.ids.find(key); it != r.ids.end()) return Symbol(it->second);
  }
  std::unique_lock lock(r.mutex);
  if (auto it = r.ids.find(key); it != r.ids.end()) return Symbol(it->second);
  auto id = static_cast<std::uint32_t>(r.names.size());
  r.names.push_back(key);
  r.ids.emplace(std::move(key), id);
  return Symbol(id);
}

const std::string& Symbol::name() const {
  auto& r = registry();
  std::shared_lock lock(r.mutex);
  // deque never relocates elements, so the reference outlives the lock
  return r.names.at(id_);
}

bool is_valid_identifier(std::string_view name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name.front())) && name.front() != '_') return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  // reserved by the operator grammar
  return name != "x" && name != "d" && name != "D";
}

ParamSet::ParamSet(std::initializer_list<std::string_view> names) {
  for (auto n : names) declare(n);
}

void ParamSet::declare(std::string_view name) {
  if (!is_valid_identifier(name)) {
    throw Error(ErrorKind::InvalidArgument, "invalid parameter name '" + std::string(name) + "'");
  }
  names_.emplace(name);
}

bool ParamSet::contains(std::string_view name) const {
  return names_.find(std::string(name)) != names_.end();
}

Symbol ParamSet::require(std::string_view name) const {
  if (!contains(name)) {
    throw Error(ErrorKind::UnknownParameter, "'" + std::string(name) + "' is not declared");
  }
  return Symbol::intern(name);
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::EvaluationPole: return "EvaluationPole";
    case ErrorKind::UnknownParameter: return "UnknownParameter";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NonTerminatingBCH: return "NonTerminatingBCH";
    case ErrorKind::TruncationRequired: return "TruncationRequired";
    case ErrorKind::ResonanceError: return "ResonanceError";
    case ErrorKind::NotAnIndicialRoot: return "NotAnIndicialRoot";
    case ErrorKind::InvalidEquation: return "InvalidEquation";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::NoPolynomialSolution: return "NoPolynomialSolution";
    case ErrorKind::MatchingInconsistent: return "MatchingInconsistent";
    case ErrorKind::TooManyParts: return "TooManyParts";
    case ErrorKind::DivisionRemainder: return "DivisionRemainder";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

bool is_usage_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownParameter:
    case ErrorKind::SyntaxError:
    case ErrorKind::UnknownFamily:
    case ErrorKind::InvalidArgument:
    case ErrorKind::TooManyParts:
    case ErrorKind::InvalidEquation:
      return true;
    default:
      return false;
  }
}

}  // namespace eulerop
