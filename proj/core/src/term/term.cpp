#include "coc/term.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace coc {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Term Term::make(Node node) {
  std::size_t h = static_cast<std::size_t>(node.kind) * 31 + 7;
  switch (node.kind) {
    case Kind::Sort:
      h = mix(h, static_cast<std::size_t>(node.sort));
      break;
    case Kind::Bound:
      h = mix(h, node.index);
      node.loose = node.index + 1;
      break;
    case Kind::Free:
      h = mix(h, std::hash<std::string>{}(node.name));
      break;
    case Kind::App:
      h = mix(mix(h, node.left->hash()), node.right->hash());
      node.loose = std::max(node.left->loose_bound(), node.right->loose_bound());
      node.size = 1 + node.left->size() + node.right->size();
      break;
    case Kind::Lam:
    case Kind::Prod: {
      h = mix(mix(h, node.left->hash()), node.right->hash());
      std::uint32_t body_loose = node.right->loose_bound();
      node.loose = std::max(node.left->loose_bound(), body_loose == 0 ? 0u : body_loose - 1);
      node.size = 1 + node.left->size() + node.right->size();
      break;
    }
  }
  node.hash = h;
  return Term(std::make_shared<const Node>(std::move(node)));
}

Term::Term() : node_(sort(Sort::Prop).node_) {}

Term Term::sort(Sort s) {
  auto make_sort = [](Sort value) {
    Node n(Kind::Sort);
    n.sort = value;
    return make(std::move(n));
  };
  static const Term prop = make_sort(Sort::Prop);
  static const Term type = make_sort(Sort::Type);
  return s == Sort::Prop ? prop : type;
}

Term Term::bound(std::uint32_t index) {
  Node n(Kind::Bound);
  n.index = index;
  return make(std::move(n));
}

Term Term::free(std::string name) {
  Node n(Kind::Free);
  n.name = std::move(name);
  return make(std::move(n));
}

Term Term::app(Term fn, Term arg) {
  Node n(Kind::App);
  n.left = std::make_unique<Term>(std::move(fn));
  n.right = std::make_unique<Term>(std::move(arg));
  return make(std::move(n));
}

Term Term::app(Term fn, const std::vector<Term>& args) {
  for (const auto& a : args) fn = app(std::move(fn), a);
  return fn;
}

Term Term::lam(std::string binder, Term domain, Term body) {
  Node n(Kind::Lam);
  n.name = std::move(binder);
  n.left = std::make_unique<Term>(std::move(domain));
  n.right = std::make_unique<Term>(std::move(body));
  return make(std::move(n));
}

Term Term::prod(std::string binder, Term domain, Term body) {
  Node n(Kind::Prod);
  n.name = std::move(binder);
  n.left = std::make_unique<Term>(std::move(domain));
  n.right = std::make_unique<Term>(std::move(body));
  return make(std::move(n));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case Term::Kind::Sort:
      return a.sort_value() == b.sort_value();
    case Term::Kind::Bound:
      return a.index() == b.index();
    case Term::Kind::Free:
      return a.name() == b.name();
    case Term::Kind::App:
      return a.fn() == b.fn() && a.arg() == b.arg();
    case Term::Kind::Lam:
    case Term::Kind::Prod:
      return a.domain() == b.domain() && a.body() == b.body();
  }
  return false;
}

bool term_less(const Term& a, const Term& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  switch (a.kind()) {
    case Term::Kind::Sort:
      return a.sort_value() < b.sort_value();
    case Term::Kind::Bound:
      return a.index() < b.index();
    case Term::Kind::Free:
      return a.name() < b.name();
    case Term::Kind::App:
      if (a.fn() != b.fn()) return term_less(a.fn(), b.fn());
      return term_less(a.arg(), b.arg());
    case Term::Kind::Lam:
    case Term::Kind::Prod:
      if (a.domain() != b.domain()) return term_less(a.domain(), b.domain());
      return term_less(a.body(), b.body());
  }
  return false;
}

Term shift(const Term& t, std::int64_t amount, std::uint32_t cutoff) {
  if (amount == 0 || t.loose_bound() <= cutoff) return t;
  switch (t.kind()) {
    case Term::Kind::Bound: {
      if (t.index() < cutoff) return t;
      std::int64_t i = static_cast<std::int64_t>(t.index()) + amount;
      if (i < 0) throw std::logic_error("shift produced a negative de Bruijn index");
      return Term::bound(static_cast<std::uint32_t>(i));
    }
    case Term::Kind::App:
      return Term::app(shift(t.fn(), amount, cutoff), shift(t.arg(), amount, cutoff));
    case Term::Kind::Lam:
      return Term::lam(t.name(), shift(t.domain(), amount, cutoff), shift(t.body(), amount, cutoff + 1));
    case Term::Kind::Prod:
      return Term::prod(t.name(), shift(t.domain(), amount, cutoff), shift(t.body(), amount, cutoff + 1));
    default:
      return t;
  }
}

namespace {

Term instantiate_at(const Term& t, const Term& value, std::uint32_t depth) {
  if (t.loose_bound() <= depth) return t;
  switch (t.kind()) {
    case Term::Kind::Bound:
      if (t.index() == depth) return shift(value, depth);
      if (t.index() > depth) return Term::bound(t.index() - 1);
      return t;
    case Term::Kind::App:
      return Term::app(instantiate_at(t.fn(), value, depth), instantiate_at(t.arg(), value, depth));
    case Term::Kind::Lam:
      return Term::lam(t.name(), instantiate_at(t.domain(), value, depth),
                       instantiate_at(t.body(), value, depth + 1));
    case Term::Kind::Prod:
      return Term::prod(t.name(), instantiate_at(t.domain(), value, depth),
                        instantiate_at(t.body(), value, depth + 1));
    default:
      return t;
  }
}

Term abstract_at(const Term& t, std::string_view name, std::uint32_t depth) {
  switch (t.kind()) {
    case Term::Kind::Free:
      return t.name() == name ? Term::bound(depth) : t;
    case Term::Kind::App:
      return Term::app(abstract_at(t.fn(), name, depth), abstract_at(t.arg(), name, depth));
    case Term::Kind::Lam:
      return Term::lam(t.name(), abstract_at(t.domain(), name, depth), abstract_at(t.body(), name, depth + 1));
    case Term::Kind::Prod:
      return Term::prod(t.name(), abstract_at(t.domain(), name, depth), abstract_at(t.body(), name, depth + 1));
    default:
      return t;
  }
}

Term subst_at(const Term& t, std::string_view name, const Term& value, std::uint32_t depth) {
  switch (t.kind()) {
    case Term::Kind::Free:
      return t.name() == name ? shift(value, depth) : t;
    case Term::Kind::App: {
      Term f = subst_at(t.fn(), name, value, depth);
      Term a = subst_at(t.arg(), name, value, depth);
      if (f.same_node(t.fn()) && a.same_node(t.arg())) return t;
      return Term::app(std::move(f), std::move(a));
    }
    case Term::Kind::Lam:
    case Term::Kind::Prod: {
      Term d = subst_at(t.domain(), name, value, depth);
      Term b = subst_at(t.body(), name, value, depth + 1);
      if (d.same_node(t.domain()) && b.same_node(t.body())) return t;
      return t.is_lam() ? Term::lam(t.name(), std::move(d), std::move(b))
                        : Term::prod(t.name(), std::move(d), std::move(b));
    }
    default:
      return t;
  }
}

void collect_free(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::Free:
      out.insert(t.name());
      break;
    case Term::Kind::App:
    case Term::Kind::Lam:
    case Term::Kind::Prod:
      collect_free(t.is_app() ? t.fn() : t.domain(), out);
      collect_free(t.is_app() ? t.arg() : t.body(), out);
      break;
    default:
      break;
  }
}

bool has_loose(const Term& t, std::uint32_t index) {
  if (t.loose_bound() <= index) return false;
  switch (t.kind()) {
    case Term::Kind::Bound:
      return t.index() == index;
    case Term::Kind::App:
      return has_loose(t.fn(), index) || has_loose(t.arg(), index);
    case Term::Kind::Lam:
    case Term::Kind::Prod:
      return has_loose(t.domain(), index) || has_loose(t.body(), index + 1);
    default:
      return false;
  }
}

void debug_into(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Sort:
      out += t.sort_value() == Sort::Prop ? "Prop" : "Type";
      break;
    case Term::Kind::Bound:
      out += "#" + std::to_string(t.index());
      break;
    case Term::Kind::Free:
      out += t.name();
      break;
    case Term::Kind::App:
      out += "(";
      debug_into(t.fn(), out);
      out += " ";
      debug_into(t.arg(), out);
      out += ")";
      break;
    case Term::Kind::Lam:
    case Term::Kind::Prod:
      out += t.is_lam() ? "[" : "(";
      debug_into(t.domain(), out);
      out += t.is_lam() ? "]" : ")";
      debug_into(t.body(), out);
      break;
  }
}

}  // namespace

Term instantiate(const Term& body, const Term& value) { return instantiate_at(body, value, 0); }

Term abstract(const Term& t, std::string_view name) { return abstract_at(t, name, 0); }

Term subst(const Term& t, std::string_view name, const Term& value) { return subst_at(t, name, value, 0); }

bool occurs_free(const Term& t, std::string_view name) {
  switch (t.kind()) {
    case Term::Kind::Free:
      return t.name() == name;
    case Term::Kind::App:
      return occurs_free(t.fn(), name) || occurs_free(t.arg(), name);
    case Term::Kind::Lam:
    case Term::Kind::Prod:
      return occurs_free(t.domain(), name) || occurs_free(t.body(), name);
    default:
      return false;
  }
}

std::set<std::string> free_names(const Term& t) {
  std::set<std::string> out;
  collect_free(t, out);
  return out;
}

bool binds_loose_zero(const Term& body) { return has_loose(body, 0); }

Term make_pi(const std::vector<Binder>& binders, const Term& body) {
  Term out = body;
  for (auto it = binders.rbegin(); it != binders.rend(); ++it)
    out = Term::prod(display_name(it->name), it->type, abstract(out, it->name));
  return out;
}

Term make_lambda(const std::vector<Binder>& binders, const Term& body) {
  Term out = body;
  for (auto it = binders.rbegin(); it != binders.rend(); ++it)
    out = Term::lam(display_name(it->name), it->type, abstract(out, it->name));
  return out;
}

Term make_arrow(const Term& from, const Term& to) { return Term::prod("_", from, shift(to, 1)); }

Spine spine(const Term& t) {
  std::vector<Term> args;
  const Term* cur = &t;
  while (cur->is_app()) {
    args.push_back(cur->arg());
    cur = &cur->fn();
  }
  std::reverse(args.begin(), args.end());
  return Spine{*cur, std::move(args)};
}

std::string display_name(std::string_view name) {
  auto pos = name.find('#');
  return std::string(pos == std::string_view::npos ? name : name.substr(0, pos));
}

std::string NameSupply::fresh(std::string_view base) {
  std::string stem = display_name(base);
  if (stem.empty() || stem == "_") stem = "x";
  return stem + "#" + tag_ + std::to_string(++counter_);
}

std::string debug_string(const Term& t) {
  std::string out;
  debug_into(t, out);
  return out;
}

}  // namespace coc
