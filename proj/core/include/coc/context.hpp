#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "coc/term.hpp"

namespace coc {

struct Universal {
  std::string name;
  Term type;
};

struct Definition {
  std::string name;
  Term type;
  Term body;
};

// A hole `?x : T` to be instantiated by proof synthesis.
struct Existential {
  std::string name;
  Term type;
};

struct Equation {
  Term lhs;
  Term rhs;
};

using ContextEntry = std::variant<Universal, Definition, Existential, Equation>;

// Name of the entry, empty for equations.
const std::string& entry_name(const ContextEntry& e);

// An ordered, immutable-by-convention sequence of declarations. Entries only
// mention names declared before them.
class Context {
 public:
  Context() = default;
  explicit Context(std::vector<ContextEntry> entries) : entries_(std::move(entries)) {}

  const std::vector<ContextEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  Context with(ContextEntry e) const;
  void push_back(ContextEntry e) { entries_.push_back(std::move(e)); }

  const ContextEntry* find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name) != nullptr; }
  std::optional<Term> type_of(std::string_view name) const;
  // Body of a definition, for delta-reduction.
  const Term* definition_of(std::string_view name) const;
  bool is_existential(std::string_view name) const;

  // No existentials and no equations.
  bool is_plain() const;
  // Existentials read as universals; equations dropped.
  Context as_universal() const;

  std::vector<std::string> existential_names() const;
  // Universals and definitions, oldest first.
  std::vector<std::string> constant_names() const;

 private:
  std::vector<ContextEntry> entries_;
};

}  // namespace coc
