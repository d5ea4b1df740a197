#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <string>
#include <string_view>

namespace eulerop {

/// Interned parameter name. Ids are process-wide and stable for the
/// lifetime of the process; ordering by id is an internal storage order
/// only, printing always orders by name.
class Symbol {
 public:
  Symbol() = default;
  static Symbol intern(std::string_view name);
  // Only valid for ids previously produced by intern().
  static Symbol from_id(std::uint32_t id) { return Symbol(id); }

  std::uint32_t id() const noexcept { return id_; }
  const std::string& name() const;

  friend auto operator<=>(Symbol, Symbol) = default;

 private:
  explicit Symbol(std::uint32_t id) : id_(id) {}
  std::uint32_t id_ = 0;
};

/// Parameter names declared for one computation; expressions may only
/// refer to declared names.
class ParamSet {
 public:
  ParamSet() = default;
  ParamSet(std::initializer_list<std::string_view> names);

  void declare(std::string_view name);
  bool contains(std::string_view name) const;
  // Throws UnknownParameter when the name was never declared.
  Symbol require(std::string_view name) const;

  const std::set<std::string>& names() const noexcept { return names_; }

 private:
  std::set<std::string> names_;
};

bool is_valid_identifier(std::string_view name);

}  // namespace eulerop
