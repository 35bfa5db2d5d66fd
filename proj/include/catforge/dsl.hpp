#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "catforge/adjunction.hpp"
#include "catforge/category.hpp"
#include "catforge/diagram.hpp"
#include "catforge/finset.hpp"
#include "catforge/functor.hpp"

namespace catforge {

struct Span {
  uint32_t line = 0;  // 1-based
  uint32_t column = 0;

  bool operator==(const Span&) const = default;
};

/// Located syntax error: where, what was found, what was expected.
struct ParseError {
  std::string message;
  uint32_t line = 0;
  uint32_t column = 0;
  std::string offending_token;
  std::vector<std::string> expected;
};

class ParseException : public Error {
 public:
  explicit ParseException(ParseError err);
  const ParseError& error() const { return err_; }

 private:
  ParseError err_;
};

/// Name-resolution or structure error found after parsing, with a location.
class ElaborationError : public Error {
 public:
  ElaborationError(Span span, const std::string& msg);
  Span span() const { return span_; }

 private:
  Span span_;
};

struct Name {
  std::string value;
  Span span;
};

struct ArrowDecl {
  Name name;
  Name dom;
  Name cod;
};

struct ComposeDecl {
  Name g;  // outer factor: g . f = result
  Name f;
  Name result;
};

struct CategoryDecl {
  Name name;
  std::vector<Name> objects;
  std::vector<ArrowDecl> arrows;
  std::vector<ComposeDecl> composes;
};

struct NodeDecl {
  Name name;
  Name object;
};

struct EdgeDecl {
  Name arrow;
  Name src;
  Name dst;
};

struct DiagramDecl {
  Name name;
  Name over;
  std::vector<NodeDecl> nodes;
  std::vector<EdgeDecl> edges;
};

struct MapEntry {
  Name from;
  Name to;
};

struct FunctorDecl {
  Name name;
  Name source;
  Name target;
  std::vector<MapEntry> objects;
  std::vector<MapEntry> arrows;
};

struct NatDecl {
  Name name;
  Name from_functor;
  Name to_functor;
  std::vector<MapEntry> components;  // at OBJECT = ARROW
};

struct AdjunctionDecl {
  Name name;
  Name left;   // left adjoint functor F : A -> B
  Name right;  // right adjoint functor G : B -> A
  Name unit;   // nat Id_A => (right . left)
  Name counit; // nat (left . right) => Id_B
};

using Decl = std::variant<CategoryDecl, DiagramDecl, FunctorDecl, NatDecl, AdjunctionDecl>;

struct CategorySpec {
  std::vector<Decl> decls;
};

/// Parses the whole source or throws ParseException with the first error.
CategorySpec parse_catfile(std::string_view text);

/// Canonical text form; parse(serialize(s)) is equivalent to s.
std::string serialize(const CategorySpec& spec);

/// Span-insensitive structural equality.
bool equivalent(const CategorySpec& a, const CategorySpec& b);

// -- elaboration -------------------------------------------------------------

struct NamedCategory {
  std::string name;
  CatPtr category;
};

struct NamedDiagram {
  std::string name;
  std::string over;
  Diagram diagram;
};

struct NamedFunctor {
  std::string name;
  Functor functor;
};

struct NamedNat {
  std::string name;
  NaturalTransformation nat;
};

struct NamedAdjunction {
  std::string name;
  AdjointSituation situation;
};

struct Workspace {
  std::vector<NamedCategory> categories;
  std::vector<NamedDiagram> diagrams;
  std::vector<NamedFunctor> functors;
  std::vector<NamedNat> nats;
  std::vector<NamedAdjunction> adjunctions;

  const NamedCategory* category(const std::string& name) const;
  const NamedDiagram* diagram(const std::string& name) const;
  const NamedFunctor* functor(const std::string& name) const;
  const NamedNat* nat(const std::string& name) const;
  const NamedAdjunction* adjunction(const std::string& name) const;
};

/// Per-entity validation outcome gathered during elaboration; law failures do
/// not abort elaboration, they surface here with the declaration's span.
struct EntityCheck {
  enum class Kind : uint8_t { category, diagram, functor, nat, adjunction } kind;
  std::string name;
  Span span;
  bool valid = false;
  std::string detail;  // human-readable failure summary, empty when valid
};

struct Elaborated {
  Workspace workspace;
  std::vector<EntityCheck> checks;

  bool all_valid() const {
    for (const EntityCheck& c : checks) {
      if (!c.valid) return false;
    }
    return true;
  }
};

/// Builds every declaration: categories (identities auto-generated, identity
/// composites auto-filled, any other unbound composable pair is an error
/// listing the missing pairs), then diagrams, functors (identity arrows map
/// to identities unless overridden), transformations, and adjunctions,
/// validating each. Resolution and structure problems throw
/// ElaborationError; law violations are recorded in the checks.
Elaborated elaborate(const CategorySpec& spec);

/// The category of the given finite sets, rendered as DSL source.
std::string finset_to_catlang(const FinSetCategory& fsc, const std::string& name);

}  // namespace catforge
