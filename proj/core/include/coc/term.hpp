#pragma once

// Terms of the Calculus of Constructions.
//
// Bound variables are de Bruijn indices and free variables are names, so
// alpha-equivalent terms are structurally identical. Binder names are kept
// only for printing and never take part in equality or hashing.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace coc {

enum class Sort { Prop, Type };

class Term {
 public:
  enum class Kind { Sort, Bound, Free, App, Lam, Prod };

  // Prop; lets terms sit in default-constructed aggregates.
  Term();

  static Term sort(Sort s);
  static Term prop() { return sort(Sort::Prop); }
  static Term type() { return sort(Sort::Type); }
  static Term bound(std::uint32_t index);
  static Term free(std::string name);
  static Term app(Term fn, Term arg);
  static Term app(Term fn, const std::vector<Term>& args);
  static Term lam(std::string binder, Term domain, Term body);
  static Term prod(std::string binder, Term domain, Term body);

  Kind kind() const { return node_->kind; }
  bool is_sort() const { return kind() == Kind::Sort; }
  bool is_bound() const { return kind() == Kind::Bound; }
  bool is_free() const { return kind() == Kind::Free; }
  bool is_app() const { return kind() == Kind::App; }
  bool is_lam() const { return kind() == Kind::Lam; }
  bool is_prod() const { return kind() == Kind::Prod; }
  bool is_binder() const { return is_lam() || is_prod(); }

  Sort sort_value() const { return node_->sort; }
  std::uint32_t index() const { return node_->index; }
  // Free variable name, or binder display name for Lam/Prod.
  const std::string& name() const { return node_->name; }
  const Term& fn() const { return *node_->left; }
  const Term& arg() const { return *node_->right; }
  const Term& domain() const { return *node_->left; }
  const Term& body() const { return *node_->right; }

  // One past the largest loose de Bruijn index; 0 for locally closed terms.
  std::uint32_t loose_bound() const { return node_->loose; }
  bool locally_closed() const { return node_->loose == 0; }
  std::size_t size() const { return node_->size; }
  std::size_t hash() const { return node_->hash; }

  bool same_node(const Term& other) const { return node_ == other.node_; }

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Node {
    explicit Node(Kind k) : kind(k) {}
    Kind kind;
    Sort sort = Sort::Prop;
    std::uint32_t index = 0;
    std::string name;
    std::unique_ptr<Term> left;
    std::unique_ptr<Term> right;
    std::uint32_t loose = 0;
    std::size_t size = 1;
    std::size_t hash = 0;
  };

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Term make(Node node);

  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

// Total order compatible with operator==; used for canonical sets of terms.
bool term_less(const Term& a, const Term& b);

struct TermLess {
  bool operator()(const Term& a, const Term& b) const { return term_less(a, b); }
};

// -- de Bruijn plumbing --------------------------------------------------

// Adds `amount` to every loose index >= cutoff.
Term shift(const Term& t, std::int64_t amount, std::uint32_t cutoff = 0);

// Body of a binder with index 0 replaced by `value` (the beta step).
Term instantiate(const Term& body, const Term& value);

// Turns free occurrences of `name` into the index bound by a new outermost
// binder: the inverse of instantiate(body, free(name)).
Term abstract(const Term& t, std::string_view name);

// Capture-avoiding replacement of the free variable `name` by `value`.
Term subst(const Term& t, std::string_view name, const Term& value);

bool occurs_free(const Term& t, std::string_view name);
std::set<std::string> free_names(const Term& t);

// Whether the binder of a Lam/Prod body is referenced.
bool binds_loose_zero(const Term& body);

// -- convenience builders over named binders ------------------------------

struct Binder {
  std::string name;  // free name standing for the bound variable
  Term type;
};

// (x1:T1)...(xn:Tn)body, closing over the binder names.
Term make_pi(const std::vector<Binder>& binders, const Term& body);
// [x1:T1]...[xn:Tn]body.
Term make_lambda(const std::vector<Binder>& binders, const Term& body);
Term make_arrow(const Term& from, const Term& to);

// Applications flattened to head and arguments.
struct Spine {
  Term head;
  std::vector<Term> args;
};
Spine spine(const Term& t);

// The display part of a generated name ("x#s4" -> "x").
std::string display_name(std::string_view name);

// Problem-scoped generator of names that cannot collide with source
// identifiers (they contain '#').
class NameSupply {
 public:
  explicit NameSupply(std::string tag = "s") : tag_(std::move(tag)) {}
  std::string fresh(std::string_view base);

 private:
  std::string tag_;
  std::uint64_t counter_ = 0;
};

// Unambiguous structural rendering with de Bruijn indices (debugging, keys).
std::string debug_string(const Term& t);

}  // namespace coc
