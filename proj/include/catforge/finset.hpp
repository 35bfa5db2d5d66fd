#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "catforge/category.hpp"
#include "catforge/universal.hpp"

namespace catforge {

struct FinSetObject {
  std::string name;
  std::vector<std::string> elements;  // labels, distinct within the set

  size_t size() const { return elements.size(); }
};

/// A total function between two sets of a FinSetCategory, as an element map.
struct FinFunction {
  uint32_t dom_set;
  uint32_t cod_set;
  std::vector<uint32_t> mapping;  // mapping[i] = index in cod of image of element i

  auto operator<=>(const FinFunction&) const = default;
};

struct ArrowClassification {
  bool mono = false;       // left-cancellable over all parallel pairs
  bool epi = false;        // right-cancellable
  bool iso = false;        // has a two-sided inverse arrow
  bool injective = false;  // from the mapping table
  bool surjective = false;
  bool bijective = false;
};

/// The category of the given finite sets and all total functions between
/// them, with each arrow's underlying function retained. Composition is
/// g.f(a) = g(f(a)); identities map every element to itself. Arrows are
/// ordered by (dom set, cod set, mapping) lexicographically.
class FinSetCategory {
 public:
  CatPtr category;
  std::vector<FinSetObject> sets;
  std::vector<FinFunction> functions;  // indexed by arrow id

  const FinFunction& function(ArrowId f) const { return functions.at(f.value); }
  /// Arrow id of an explicit function table; InternalError if absent.
  ArrowId arrow_of(const FinFunction& fn) const;
  ObjectId object_of_set(uint32_t set_index) const { return ObjectId(set_index); }
};

/// Builds the category; throws CapExceeded when the total arrow count
/// (sum over pairs of |cod|^|dom|) exceeds `cap`. Set names must be distinct.
FinSetCategory finset_category(std::vector<FinSetObject> sets, uint64_t cap = 100000);

/// Convenience: one set per requested size, named S0, S1, ... with elements
/// namespaced by the set name.
FinSetCategory finset_category_of_sizes(const std::vector<size_t>& sizes, uint64_t cap = 100000);

ArrowClassification classify_arrow(const FinSetCategory& fsc, ArrowId f);
std::vector<ArrowClassification> classify_all_arrows(const FinSetCategory& fsc,
                                                     ExecMode mode = default_exec_mode());
std::vector<ArrowClassification> classify_all_arrows_serial(const FinSetCategory& fsc);
std::vector<ArrowClassification> classify_all_arrows_parallel(const FinSetCategory& fsc);

struct CorrespondenceDisagreement {
  ArrowId arrow;
  ArrowClassification flags;
};

/// mono <=> injective, epi <=> surjective, iso <=> bijective, for every
/// arrow. Expected to agree everywhere; disagreements are listed.
struct CorrespondenceReport {
  uint64_t arrows_checked = 0;
  std::vector<CorrespondenceDisagreement> disagreements;

  bool all_agree() const { return disagreements.empty(); }
};

CorrespondenceReport verify_correspondence_table(const FinSetCategory& fsc,
                                                 ExecMode mode = default_exec_mode());

struct SingletonIsoReport {
  std::vector<ObjectId> singletons;
  std::vector<std::pair<ObjectId, ObjectId>> isomorphic_pairs;
  std::vector<std::pair<ObjectId, ObjectId>> failures;  // singleton pairs with no isomorphism
  std::vector<ObjectId> non_terminal_singletons;

  bool ok() const { return failures.empty() && non_terminal_singletons.empty(); }
};

/// Every pair of singleton objects must be isomorphic and every singleton
/// terminal.
SingletonIsoReport singleton_isomorphism_check(const FinSetCategory& fsc);

/// The canonical product cone for (A,B): the first object whose size is
/// |A|*|B|, with row-major projections (element k represents the pair
/// (k / |B|, k % |B|)). Absent when no object has that size.
std::optional<ProductCone> canonical_product_cone(const FinSetCategory& fsc, ObjectId a, ObjectId b);

/// The canonical exponential B^A: the first object of size |B|^|A|, elements
/// enumerating functions A -> B in lexicographic order (base-|B| digits),
/// with eval over the canonical product cone of (B^A, A).
std::optional<ExponentialData> canonical_exponential(const FinSetCategory& fsc, ObjectId a, ObjectId b);

}  // namespace catforge
