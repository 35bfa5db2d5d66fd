#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "catforge/category.hpp"

namespace catforge {

/// A candidate binary product: apex with projections apex -> A and apex -> B.
struct ProductCone {
  ObjectId apex;
  ArrowId proj1;
  ArrowId proj2;

  auto operator<=>(const ProductCone&) const = default;
};

/// Failure evidence for a cone: a test object and leg pair with zero or at
/// least two mediating arrows.
struct ProductFailure {
  ObjectId test_object;
  ArrowId f;
  ArrowId g;
  uint32_t mediator_count = 0;
  std::vector<ArrowId> mediators;  // at most two samples
};

struct ProductCheck {
  bool ok = false;
  std::optional<ProductFailure> failure;
};

/// Exhaustive universal-property check: for every object X and every leg pair
/// (f: X->A, g: X->B) there must be exactly one m: X->apex with
/// proj1.m = f and proj2.m = g. Mediators are counted by full enumeration.
ProductCheck verify_product(const FinCategory& cat, const ProductCone& cone, ObjectId a, ObjectId b,
                            ExecMode mode = default_exec_mode());
ProductCheck verify_product_serial(const FinCategory& cat, const ProductCone& cone, ObjectId a, ObjectId b);
ProductCheck verify_product_parallel(const FinCategory& cat, const ProductCone& cone, ObjectId a,
                                     ObjectId b);

/// Every cone passing verify_product, in lexicographic (apex, proj1, proj2)
/// order. Empty result = the pair has no product. Throws CapExceeded when the
/// candidate space outgrows `cap`.
std::vector<ProductCone> find_products(const FinCategory& cat, ObjectId a, ObjectId b,
                                       uint64_t cap = default_cap(), ExecMode mode = default_exec_mode());

/// The unique m with proj1.m = f and proj2.m = g through a verified cone.
/// Zero or multiple candidates indicate an unverified cone (InternalError).
ArrowId mediating_arrow(const FinCategory& cat, const ProductCone& cone, ArrowId f, ArrowId g);

/// The arrow f x id: for cones over (A,Y) and (B,Y) and f: A -> B, the
/// mediating arrow <f . proj1, proj2> from the first apex through the second
/// cone.
ArrowId product_of_arrow_with_identity(const FinCategory& cat, const ProductCone& cone_a,
                                       const ProductCone& cone_b, ArrowId f);

/// Exponential data for (A,B): the object B^A, an evaluation arrow from a
/// verified product of expObject and A to B, and the cone used.
struct ExponentialData {
  ObjectId exp_object;
  ArrowId eval;
  ProductCone product_cone;  // product of (exp_object, A)

  auto operator<=>(const ExponentialData&) const = default;
};

struct ExponentialFailure {
  ObjectId test_object;
  ArrowId h;  // arrow X x A -> B with zero or >= 2 curried forms
  uint32_t curry_count = 0;
};

struct ExponentialCheck {
  bool ok = false;
  std::optional<ExponentialFailure> failure;
  std::vector<ObjectId> skipped_objects;  // test objects without an (X,A) product in the table
};

class ProductTable;

/// Universal property of the exponential: for every object X with a product
/// cone for (X,A) in `products` and every h: X x A -> B there is exactly one
/// curried arrow c: X -> expObject with eval . (c x id_A) = h. Objects
/// without an (X,A) product contribute vacuously and are recorded as skipped.
ExponentialCheck verify_exponential(const FinCategory& cat, const ExponentialData& exp, ObjectId a,
                                    ObjectId b, const ProductTable& products);

/// Canonical product cones for every ordered object pair; entries are absent
/// where no product exists in the category.
class ProductTable {
 public:
  ProductTable() = default;
  explicit ProductTable(size_t object_count) : n_(object_count), cells_(object_count * object_count) {}

  const std::optional<ProductCone>& at(ObjectId a, ObjectId b) const {
    return cells_.at(static_cast<size_t>(a.value) * n_ + b.value);
  }
  void set(ObjectId a, ObjectId b, ProductCone cone) {
    cells_.at(static_cast<size_t>(a.value) * n_ + b.value) = cone;
  }
  size_t object_count() const { return n_; }
  bool total() const;

 private:
  size_t n_ = 0;
  std::vector<std::optional<ProductCone>> cells_;
};

class ExponentialTable {
 public:
  ExponentialTable() = default;
  explicit ExponentialTable(size_t object_count) : n_(object_count), cells_(object_count * object_count) {}

  // Entry for (A,B) describes B^A (exponent A, base B).
  const std::optional<ExponentialData>& at(ObjectId a, ObjectId b) const {
    return cells_.at(static_cast<size_t>(a.value) * n_ + b.value);
  }
  void set(ObjectId a, ObjectId b, ExponentialData data) {
    cells_.at(static_cast<size_t>(a.value) * n_ + b.value) = data;
  }
  size_t object_count() const { return n_; }
  bool total() const;

 private:
  size_t n_ = 0;
  std::vector<std::optional<ExponentialData>> cells_;
};

struct MissingStructure {
  enum class Kind : uint8_t { terminal, product, exponential } kind;
  ObjectId a;  // unused for terminal
  ObjectId b;
};

struct CCCReport {
  std::optional<ObjectId> terminal;
  ProductTable products;
  ExponentialTable exponentials;
  std::vector<MissingStructure> failures;

  bool is_ccc() const { return failures.empty() && terminal.has_value(); }
};

/// Searches the whole category for a terminal object, a canonical product
/// cone per object pair, and a canonical exponential per pair. Canonical =
/// lexicographically least verified candidate.
CCCReport check_cartesian_closed(const FinCategory& cat, uint64_t cap = default_cap(),
                                 ExecMode mode = default_exec_mode());

/// Canonical product cone for one pair (least verified candidate), if any.
std::optional<ProductCone> find_canonical_product(const FinCategory& cat, ObjectId a, ObjectId b,
                                                  uint64_t cap = default_cap(),
                                                  ExecMode mode = default_exec_mode());

/// Canonical exponential for (A,B) given a product table, if any.
std::optional<ExponentialData> find_canonical_exponential(const FinCategory& cat, ObjectId a, ObjectId b,
                                                          const ProductTable& products,
                                                          uint64_t cap = default_cap());

}  // namespace catforge
