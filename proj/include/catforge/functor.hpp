#pragma once

#include <cstdint>
#include <vector>

#include "catforge/category.hpp"
#include "catforge/diagram.hpp"
#include "catforge/universal.hpp"

namespace catforge {

/// A functor between two finite categories, given by total object and arrow
/// maps. Categories are held by handle; "same category" means same handle.
struct Functor {
  CatPtr source;
  CatPtr target;
  std::vector<ObjectId> object_map;  // indexed by source object
  std::vector<ArrowId> arrow_map;    // indexed by source arrow

  ObjectId on_object(ObjectId a) const { return object_map.at(a.value); }
  ArrowId on_arrow(ArrowId f) const { return arrow_map.at(f.value); }

  bool operator==(const Functor& other) const {
    return source == other.source && target == other.target && object_map == other.object_map &&
           arrow_map == other.arrow_map;
  }
};

/// Checks totality/typing structurally (StructuralError), then reports every
/// violated typing, identity, or composition law with witnesses.
LawReport validate_functor(const Functor& f);

Functor identity_functor(CatPtr cat);
/// Everything in `source` goes to object b of `target` and its identity.
Functor constant_functor(CatPtr source, CatPtr target, ObjectId b);
/// Pointwise composite g . f (apply f first). Requires f.target == g.source.
Functor compose_functors(const Functor& g, const Functor& f);

/// The endofunctor - x Y over a category whose product table has a cone for
/// (X, Y) at every X. Object map: X -> apex(X x Y); arrow map:
/// f -> <f . proj1, proj2>. Throws StructuralError naming the first object
/// without a product.
Functor product_functor(CatPtr cat, ObjectId y, const ProductTable& products);

/// The endofunctor (-)^Y: X -> X^Y with arrow action by currying
/// post-composition. Needs an exponential-table entry (Y, X) for every X.
Functor exponential_functor(CatPtr cat, ObjectId y, const ExponentialTable& exponentials);

/// An object-indexed family of arrows t_A : F(A) -> G(A) between parallel
/// functors.
struct NaturalTransformation {
  Functor f;
  Functor g;
  std::vector<ArrowId> components;  // indexed by source object

  ArrowId at(ObjectId a) const { return components.at(a.value); }

  bool operator==(const NaturalTransformation& other) const {
    return f == other.f && g == other.g && components == other.components;
  }
};

/// Component typing failures are structural; a violated naturality square for
/// some arrow is reported with the arrow and the two unequal composites.
LawReport validate_natural_transformation(const NaturalTransformation& t);

NaturalTransformation identity_transformation(const Functor& f);

/// Pointwise composite of t : F -> G and u : G -> H. Throws PreconditionError
/// when the middle functor does not match.
NaturalTransformation vertical_compose(const NaturalTransformation& t, const NaturalTransformation& u);

/// All functors source -> target in canonical order (object map then arrow
/// map, lexicographic). Throws CapExceeded when the search space is too big.
std::vector<Functor> enumerate_functors(CatPtr source, CatPtr target, uint64_t cap = default_cap());

/// All natural transformations F -> G in canonical (componentwise) order.
std::vector<NaturalTransformation> enumerate_natural_transformations(const Functor& f, const Functor& g,
                                                                     uint64_t cap = default_cap());

/// The functor category: objects are all functors A -> B, arrows all natural
/// transformations, composition vertical. Object i of `category` corresponds
/// to `objects[i]`, arrow j to `arrows[j]`.
struct FunctorCategory {
  CatPtr category;
  std::vector<Functor> objects;
  std::vector<NaturalTransformation> arrows;
};

FunctorCategory functor_category(CatPtr a, CatPtr b, uint64_t cap = default_cap());

/// Image of a diagram under a functor (nodes and edges mapped pointwise).
Diagram apply_functor(const Functor& f, const Diagram& diagram);

}  // namespace catforge
