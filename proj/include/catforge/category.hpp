#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "catforge/errors.hpp"
#include "catforge/ids.hpp"
#include "catforge/parallel.hpp"

namespace catforge {

/// One arrow of a finite category. Arrows are oriented dom -> cod throughout
/// the workbench: hom(A,B) collects exactly the arrows with dom A and cod B.
struct ArrowRecord {
  ArrowId id;
  ObjectId dom;
  ObjectId cod;
  std::string name;
};

// Canonical law order; violation lists are sorted by (law, witness).
enum class LawKind : uint8_t {
  IdentityTyping,       // id_A must have dom = cod = A
  CompositionDefined,   // comp(g,f) defined iff cod(f) = dom(g)
  CompositionTyping,    // dom(g.f) = dom(f), cod(g.f) = cod(g)
  LeftIdentity,         // id_cod(f) . f = f
  RightIdentity,        // f . id_dom(f) = f
  Associativity,        // h . (g . f) = (h . g) . f
  FunctorTyping,
  FunctorIdentity,
  FunctorComposition,
  Naturality,
};

const char* law_name(LawKind law);

struct LawViolation {
  LawKind law;
  std::vector<ArrowId> witness;

  auto operator<=>(const LawViolation&) const = default;
};

struct LawReport {
  std::vector<LawViolation> violations;

  bool valid() const { return violations.empty(); }
};

/// A finite category given as explicit data: ordered object and arrow lists,
/// an identity arrow per object, and a composition table defined exactly on
/// composable pairs. Immutable after construction; safe to share across
/// threads.
class FinCategory {
 public:
  // Composite of a composable pair; called only when cod(f) = dom(g).
  using CompFn = std::function<ArrowId(ArrowId g, ArrowId f)>;

  size_t object_count() const { return objects_.size(); }
  size_t arrow_count() const { return arrows_.size(); }

  const std::string& object_name(ObjectId a) const { return objects_.at(a.value); }
  const ArrowRecord& arrow(ArrowId f) const { return arrows_.at(f.value); }
  const std::vector<ArrowRecord>& arrows() const { return arrows_; }

  ObjectId dom(ArrowId f) const { return arrows_.at(f.value).dom; }
  ObjectId cod(ArrowId f) const { return arrows_.at(f.value).cod; }

  ArrowId identity(ObjectId a) const { return identities_.at(a.value); }
  bool is_identity(ArrowId f) const;

  bool composable(ArrowId g, ArrowId f) const { return cod(f) == dom(g); }

  /// Table lookup: the bound composite of (g, f), or an invalid ArrowId when
  /// the pair has no entry (non-composable, or a hole in a broken table).
  ArrowId composite(ArrowId g, ArrowId f) const;

  /// Arrows from a to b in arrow-list order.
  std::span<const ArrowId> hom(ObjectId a, ObjectId b) const;
  std::span<const ArrowId> arrows_from(ObjectId a) const { return from_.at(a.value); }
  std::span<const ArrowId> arrows_into(ObjectId a) const { return into_.at(a.value); }

  std::optional<ObjectId> object_by_name(const std::string& name) const;
  std::optional<ArrowId> arrow_by_name(const std::string& name) const;

  /// Copy of this category with one composition-table cell rebound. Only
  /// meaningful on table-backed categories; used to express broken tables
  /// for negative tests.
  FinCategory rebind_composite(ArrowId g, ArrowId f, ArrowId value) const;

 private:
  friend class FinCategoryBuilder;
  FinCategory() = default;

  struct DenseComp {
    std::vector<uint32_t> cells;  // n*n, ArrowId sentinel for unset
  };
  struct SparseComp {
    std::unordered_map<uint64_t, uint32_t> cells;
  };
  struct FnComp {
    CompFn fn;
  };

  std::vector<std::string> objects_;
  std::vector<ArrowRecord> arrows_;
  std::vector<ArrowId> identities_;
  std::variant<DenseComp, SparseComp, FnComp> comp_;
  std::vector<std::vector<ArrowId>> homs_;  // object_count^2, row-major (dom, cod)
  std::vector<std::vector<ArrowId>> from_;
  std::vector<std::vector<ArrowId>> into_;

  void build_indexes();
};

using CatPtr = std::shared_ptr<const FinCategory>;

/// Assembles a FinCategory; build() checks structural invariants (index
/// bounds, identity totality, entries only on composable pairs) and throws
/// StructuralError on failure. Category *laws* are deliberately not checked
/// here: broken tables must be constructible so validate_category has
/// something to catch.
class FinCategoryBuilder {
 public:
  ObjectId add_object(std::string name);
  ArrowId add_arrow(std::string name, ObjectId dom, ObjectId cod);
  /// Declares id_a; creates the arrow record if no name is supplied.
  ArrowId add_identity(ObjectId a);
  void set_identity(ObjectId a, ArrowId f);
  void set_composite(ArrowId g, ArrowId f, ArrowId gf);
  bool has_composite(ArrowId g, ArrowId f) const;

  size_t object_count() const { return objects_.size(); }
  size_t arrow_count() const { return arrows_.size(); }
  const ArrowRecord& arrow(ArrowId f) const { return arrows_.at(f.value); }

  /// Fills comp(id,f) and comp(f,id) entries that are still unset.
  void fill_identity_composites();

  CatPtr build();

  /// Builds with composition evaluated on demand instead of a stored table;
  /// for generated categories whose composable-pair count is too large to
  /// materialize. `fn` must be total on composable pairs.
  CatPtr build_with_composition_fn(FinCategory::CompFn fn);

 private:
  std::vector<std::string> objects_;
  std::vector<ArrowRecord> arrows_;
  std::vector<ArrowId> identities_;
  std::unordered_map<uint64_t, uint32_t> comp_;

  void check_structure() const;
  FinCategory finish_core();
};

// -- Operations ---------------------------------------------------------

/// Exhaustive scan of every category law over every arrow, pair, and
/// composable triple. Violations are reported with minimal witnesses in a
/// deterministic order. Throws StructuralError for out-of-range indices,
/// which are not law violations.
LawReport validate_category(const FinCategory& cat, ExecMode mode = default_exec_mode());

LawReport validate_category_serial(const FinCategory& cat);
LawReport validate_category_parallel(const FinCategory& cat);

/// comp(g, f) for a composable pair; throws CompositionMismatch otherwise.
ArrowId compose(const FinCategory& cat, ArrowId g, ArrowId f);

/// Arrows from a to b in arrow-list order.
std::vector<ArrowId> hom_set(const FinCategory& cat, ObjectId a, ObjectId b);

/// The unique two-sided inverse of i, if any. Throws InternalError if two
/// distinct inverses satisfy the equations (impossible in a valid category).
std::optional<ArrowId> is_isomorphism(const FinCategory& cat, ArrowId i);

/// All objects with exactly one arrow to every object.
std::vector<ObjectId> find_initial(const FinCategory& cat);
/// All objects with exactly one arrow from every object.
std::vector<ObjectId> find_terminal(const FinCategory& cat);

bool is_initial(const FinCategory& cat, ObjectId a);
bool is_terminal(const FinCategory& cat, ObjectId a);

/// The unique isomorphism between two initial objects. Throws
/// PreconditionError unless both objects are initial; verifies uniqueness and
/// invertibility of the connecting arrow.
ArrowId unique_iso_between_initials(const FinCategory& cat, ObjectId i, ObjectId i2);

}  // namespace catforge
