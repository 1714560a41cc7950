#include "pt/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pt {

  AtomId::AtomId(std::string name) : name_(std::move(name)) {
    if (!is_valid_name(name_)) throw std::invalid_argument("invalid atom name: \"" + name_ + "\"");
  }

  bool AtomId::is_valid_name(std::string_view name) noexcept {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
    for (char c : name) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
  }

  Literal complement(const Literal& l) {
    return {l.atom, l.positive() ? Sign::Negative : Sign::Positive};
  }

  std::string to_string(const Literal& l) {
    return (l.positive() ? "" : "~") + l.atom.name();
  }

  Literal parse_literal(std::string_view text) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
      return s;
    };
    text = trim(text);
    Sign sign = Sign::Positive;
    if (text.starts_with("~")) {
      sign = Sign::Negative;
      text.remove_prefix(1);
    } else if (text.starts_with("¬")) {
      sign = Sign::Negative;
      text.remove_prefix(std::string_view("¬").size());
    }
    text = trim(text);
    if (!AtomId::is_valid_name(text)) throw std::invalid_argument("invalid literal: \"" + std::string(text) + "\"");
    return {AtomId(std::string(text)), sign};
  }

  // ---------------------------------------------------------------------------

  Formula Formula::atom(AtomId a) {
    return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(a), {}, 0, 1}));
  }

  Formula Formula::negation(Formula f) {
    auto d = f.depth() + 1, s = f.size() + 1;
    return Formula(std::make_shared<const Node>(Node{Kind::Not, std::nullopt, {std::move(f)}, d, s}));
  }

  Formula Formula::conjunction(Formula l, Formula r) {
    auto d = std::max(l.depth(), r.depth()) + 1, s = l.size() + r.size() + 1;
    return Formula(std::make_shared<const Node>(Node{Kind::And, std::nullopt, {std::move(l), std::move(r)}, d, s}));
  }

  Formula Formula::disjunction(Formula l, Formula r) {
    auto d = std::max(l.depth(), r.depth()) + 1, s = l.size() + r.size() + 1;
    return Formula(std::make_shared<const Node>(Node{Kind::Or, std::nullopt, {std::move(l), std::move(r)}, d, s}));
  }

  Formula Formula::implication(Formula l, Formula r) {
    auto d = std::max(l.depth(), r.depth()) + 1, s = l.size() + r.size() + 1;
    return Formula(std::make_shared<const Node>(Node{Kind::Implies, std::nullopt, {std::move(l), std::move(r)}, d, s}));
  }

  Formula Formula::of(const Literal& l) {
    auto a = atom(l.atom);
    return l.positive() ? a : negation(std::move(a));
  }

  const AtomId& Formula::atom_id() const {
    if (kind() != Kind::Atom) throw std::logic_error("Formula::atom_id on a compound formula");
    return *node_->atom;
  }

  const Formula& Formula::operand() const {
    if (kind() != Kind::Not) throw std::logic_error("Formula::operand on a non-negation");
    return node_->children[0];
  }

  const Formula& Formula::lhs() const {
    if (!is_binary()) throw std::logic_error("Formula::lhs on a non-binary formula");
    return node_->children[0];
  }

  const Formula& Formula::rhs() const {
    if (!is_binary()) throw std::logic_error("Formula::rhs on a non-binary formula");
    return node_->children[1];
  }

  std::optional<Literal> Formula::as_literal() const {
    if (kind() == Kind::Atom) return positive(atom_id());
    if (kind() == Kind::Not && operand().kind() == Kind::Atom) return negative(operand().atom_id());
    return std::nullopt;
  }

  std::size_t Formula::depth() const noexcept { return node_->depth; }
  std::size_t Formula::size() const noexcept { return node_->size; }

  bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind() || a.size() != b.size()) return false;
    if (a.kind() == Formula::Kind::Atom) return a.atom_id() == b.atom_id();
    const auto& ca = a.node_->children;
    const auto& cb = b.node_->children;
    for (std::size_t i = 0; i < ca.size(); i++) {
      if (!(ca[i] == cb[i])) return false;
    }
    return true;
  }

  namespace {
    void collect_atoms(const Formula& f, std::set<AtomId>& out) {
      switch (f.kind()) {
        case Formula::Kind::Atom:
          out.insert(f.atom_id());
          break;
        case Formula::Kind::Not:
          collect_atoms(f.operand(), out);
          break;
        default:
          collect_atoms(f.lhs(), out);
          collect_atoms(f.rhs(), out);
      }
    }
  }  // namespace

  std::set<AtomId> atoms_of(const Formula& f) {
    std::set<AtomId> res;
    collect_atoms(f, res);
    return res;
  }

  // ---------------------------------------------------------------------------

  std::optional<Literal> PresupMap::lookup(const AtomId& a) const {
    if (auto it = entries_.find(a); it != entries_.end()) return it->second;
    return std::nullopt;
  }

  void PresupMap::annotate(const AtomId& a, const Literal& target) {
    auto [it, inserted] = entries_.emplace(a, target);
    if (!inserted && it->second != target) throw AnnotationConflict(a, it->second, target);
  }

  PresupMap PresupMap::merge(const PresupMap& a, const PresupMap& b) {
    PresupMap res = a;
    for (const auto& [atom, target] : b.entries_) res.annotate(atom, target);
    return res;
  }

  PresupMap PresupMap::restricted_to(const std::set<AtomId>& atoms) const {
    PresupMap res;
    for (const auto& [atom, target] : entries_) {
      if (atoms.contains(atom)) res.entries_.emplace(atom, target);
    }
    return res;
  }

  AnnotationConflict::AnnotationConflict(AtomId atom_, Literal existing_, Literal incoming_) :
      std::runtime_error("annotation conflict: " + atom_.name() + "[" + to_string(existing_) + "] vs " +
                         atom_.name() + "[" + to_string(incoming_) + "]"),
      atom(std::move(atom_)),
      existing(std::move(existing_)),
      incoming(std::move(incoming_)) {}

  std::vector<PresupMapViolation> validate_presup_map(const PresupMap& m) {
    std::vector<PresupMapViolation> res;
    for (const auto& [source, target] : m.entries()) {
      if (target.atom == source) {
        res.push_back({PresupMapViolation::Kind::SelfAnnotation, source,
                       source.name() + " is annotated with its own atom"});
      } else if (m.contains(target.atom)) {
        res.push_back({PresupMapViolation::Kind::Chain, target.atom,
                       "chained annotation: " + source.name() + "[" + to_string(target) + "] targets annotated atom " +
                           target.atom.name()});
      }
    }
    return res;
  }

  namespace {
    std::string describe(const std::vector<PresupMapViolation>& v) {
      std::ostringstream ss;
      ss << "invalid presupposition map";
      for (const auto& x : v) ss << "; " << x.message;
      return ss.str();
    }
  }  // namespace

  InvalidPresupMap::InvalidPresupMap(std::vector<PresupMapViolation> v) :
      std::runtime_error(describe(v)), violations(std::move(v)) {}

  void require_valid(const PresupMap& m) {
    if (auto v = validate_presup_map(m); !v.empty()) throw InvalidPresupMap(std::move(v));
  }

  SignedAnnotatedAtom annotate(const Literal& l, const PresupMap& m) {
    return {l, m.lookup(l.atom)};
  }

}  // namespace pt
