// pt :: syntax
//
// Propositional formulas over annotated atoms. An annotation `a[b]` says that
// the atom `a` presupposes the literal `b`; annotations live in a PresupMap
// that is shared by every sentence of a discourse.

#ifndef PT_SYNTAX_HPP_
#define PT_SYNTAX_HPP_

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pt {

  class AtomId {
  public:
    // Throws std::invalid_argument unless `name` is [A-Za-z][A-Za-z0-9_]*.
    explicit AtomId(std::string name);

    static bool is_valid_name(std::string_view name) noexcept;

    const std::string& name() const noexcept { return name_; }

    friend bool operator==(const AtomId&, const AtomId&) = default;
    friend auto operator<=>(const AtomId&, const AtomId&) = default;

  private:
    std::string name_;
  };

  enum class Sign { Positive, Negative };

  struct Literal {
    AtomId atom;
    Sign sign = Sign::Positive;

    bool positive() const noexcept { return sign == Sign::Positive; }

    friend bool operator==(const Literal&, const Literal&) = default;
    friend auto operator<=>(const Literal&, const Literal&) = default;
  };

  Literal complement(const Literal& l);

  inline Literal positive(AtomId a) { return {std::move(a), Sign::Positive}; }
  inline Literal negative(AtomId a) { return {std::move(a), Sign::Negative}; }

  // "b" or "~b".
  std::string to_string(const Literal& l);
  // Inverse of to_string; also accepts "¬b". Throws std::invalid_argument.
  Literal parse_literal(std::string_view text);

  class Formula {
  public:
    enum class Kind { Atom, Not, And, Or, Implies };

    static Formula atom(AtomId a);
    static Formula atom(std::string name) { return atom(AtomId(std::move(name))); }
    static Formula negation(Formula f);
    static Formula conjunction(Formula l, Formula r);
    static Formula disjunction(Formula l, Formula r);
    static Formula implication(Formula l, Formula r);
    static Formula of(const Literal& l);

    Kind kind() const noexcept;
    bool is_binary() const noexcept { return kind() >= Kind::And; }

    // Preconditions on the accessors below follow kind(); violating them is a
    // logic error and throws std::logic_error.
    const AtomId& atom_id() const;
    const Formula& operand() const;
    const Formula& lhs() const;
    const Formula& rhs() const;

    // Literal view of Atom(a) and Not(Atom(a)); nullopt otherwise.
    std::optional<Literal> as_literal() const;

    std::size_t depth() const noexcept;
    std::size_t size() const noexcept;

    friend bool operator==(const Formula& a, const Formula& b);

  private:
    struct Node;

    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    std::shared_ptr<const Node> node_;
  };

  struct Formula::Node {
    Kind kind;
    std::optional<AtomId> atom;
    std::vector<Formula> children;
    std::size_t depth = 0;
    std::size_t size = 1;
  };

  inline Formula::Kind Formula::kind() const noexcept { return node_->kind; }

  std::set<AtomId> atoms_of(const Formula& f);

  // Partial map atom -> presupposed literal.
  class PresupMap {
  public:
    PresupMap() = default;
    PresupMap(std::initializer_list<std::pair<const AtomId, Literal>> entries)
        : entries_(entries) {}

    std::optional<Literal> lookup(const AtomId& a) const;
    bool contains(const AtomId& a) const { return entries_.contains(a); }

    // Records a -> target. Throws AnnotationConflict if `a` already has a
    // different annotation; re-adding the same annotation is a no-op.
    void annotate(const AtomId& a, const Literal& target);

    // Union of two maps; throws AnnotationConflict on disagreement.
    static PresupMap merge(const PresupMap& a, const PresupMap& b);

    // Entries whose source atom is in `atoms`.
    PresupMap restricted_to(const std::set<AtomId>& atoms) const;

    const std::map<AtomId, Literal>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }
    std::size_t size() const noexcept { return entries_.size(); }

    friend bool operator==(const PresupMap&, const PresupMap&) = default;

  private:
    std::map<AtomId, Literal> entries_;
  };

  struct AnnotationConflict : std::runtime_error {
    AnnotationConflict(AtomId atom, Literal existing, Literal incoming);
    AtomId atom;
    Literal existing;
    Literal incoming;
  };

  struct PresupMapViolation {
    enum class Kind { Chain, SelfAnnotation };
    Kind kind;
    AtomId atom;   // the atom at which the invariant breaks
    std::string message;
  };

  // Empty result means the map is valid.
  std::vector<PresupMapViolation> validate_presup_map(const PresupMap& m);

  struct InvalidPresupMap : std::runtime_error {
    explicit InvalidPresupMap(std::vector<PresupMapViolation> v);
    std::vector<PresupMapViolation> violations;
  };

  // Throws InvalidPresupMap when validate_presup_map reports anything.
  void require_valid(const PresupMap& m);

  // A signed atom together with its annotation. The annotation depends on the
  // atom only, so a and ~a carry the same presupposition.
  struct SignedAnnotatedAtom {
    Literal literal;
    std::optional<Literal> presup;
  };

  SignedAnnotatedAtom annotate(const Literal& l, const PresupMap& m);

  // Raised when an operation is called outside its precondition (e.g. asking a
  // closed branch for presuppositions).
  struct PreconditionError : std::logic_error {
    using std::logic_error::logic_error;
  };

}  // namespace pt

#endif  // PT_SYNTAX_HPP_
