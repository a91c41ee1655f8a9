#include "coc/context.hpp"

namespace coc {

const std::string& entry_name(const ContextEntry& e) {
  static const std::string none;
  return std::visit(
      [](const auto& entry) -> const std::string& {
        if constexpr (std::is_same_v<std::decay_t<decltype(entry)>, Equation>)
          return none;
        else
          return entry.name;
      },
      e);
}

Context Context::with(ContextEntry e) const {
  Context out = *this;
  out.entries_.push_back(std::move(e));
  return out;
}

const ContextEntry* Context::find(std::string_view name) const {
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
    if (!std::holds_alternative<Equation>(*it) && entry_name(*it) == name) return &*it;
  return nullptr;
}

std::optional<Term> Context::type_of(std::string_view name) const {
  const ContextEntry* e = find(name);
  if (!e) return std::nullopt;
  if (auto u = std::get_if<Universal>(e)) return u->type;
  if (auto d = std::get_if<Definition>(e)) return d->type;
  if (auto x = std::get_if<Existential>(e)) return x->type;
  return std::nullopt;
}

const Term* Context::definition_of(std::string_view name) const {
  const ContextEntry* e = find(name);
  if (auto d = e ? std::get_if<Definition>(e) : nullptr) return &d->body;
  return nullptr;
}

bool Context::is_existential(std::string_view name) const {
  const ContextEntry* e = find(name);
  return e && std::holds_alternative<Existential>(*e);
}

bool Context::is_plain() const {
  for (const auto& e : entries_)
    if (std::holds_alternative<Existential>(e) || std::holds_alternative<Equation>(e)) return false;
  return true;
}

Context Context::as_universal() const {
  Context out;
  for (const auto& e : entries_) {
    if (auto x = std::get_if<Existential>(&e))
      out.entries_.push_back(Universal{x->name, x->type});
    else if (!std::holds_alternative<Equation>(e))
      out.entries_.push_back(e);
  }
  return out;
}

std::vector<std::string> Context::existential_names() const {
  std::vector<std::string> out;
  for (const auto& e : entries_)
    if (auto x = std::get_if<Existential>(&e)) out.push_back(x->name);
  return out;
}

std::vector<std::string> Context::constant_names() const {
  std::vector<std::string> out;
  for (const auto& e : entries_)
    if (std::holds_alternative<Universal>(e) || std::holds_alternative<Definition>(e))
      out.push_back(entry_name(e));
  return out;
}

}  // namespace coc
