#pragma once

#include <vector>

#include "catforge/functor.hpp"

namespace catforge {

/// An adjoint situation <G, F, t, u> between categories A and B:
/// F : A -> B (left adjoint), G : B -> A (right adjoint),
/// unit t : Id_A -> G.F and counit u : F.G -> Id_B. The convention some texts
/// state with the composite written in the other order reads the same once
/// composition is taken diagrammatically; this is the only type-correct one.
struct AdjointSituation {
  CatPtr a;
  CatPtr b;
  Functor f;  // left adjoint
  Functor g;  // right adjoint
  NaturalTransformation unit;
  NaturalTransformation counit;
};

struct TriangleFailure {
  // first:  counit_{F A} . F(unit_A) = id_{F A}   (object in A)
  // second: G(counit_B) . unit_{G B} = id_{G B}   (object in B)
  enum class Which : uint8_t { first, second } which;
  ObjectId object;
  ArrowId got;
  ArrowId expected;
};

struct AdjunctionReport {
  LawReport functor_f;
  LawReport functor_g;
  LawReport unit_naturality;
  LawReport counit_naturality;
  std::vector<TriangleFailure> triangle_failures;

  bool valid() const {
    return functor_f.valid() && functor_g.valid() && unit_naturality.valid() &&
           counit_naturality.valid() && triangle_failures.empty();
  }
};

/// Checks the four pieces individually, then both triangle identities at
/// every object, exhaustively. Typing mismatches among the pieces (wrong
/// endpoint functors, wrong categories) throw StructuralError.
AdjunctionReport verify_adjoint_situation(const AdjointSituation& s);

/// For two verified situations sharing the left adjoint F: a natural
/// isomorphism G -> G' found by exhaustive search over all natural
/// transformations. Throws PreconditionError on unverified input and
/// InternalError when no isomorphism exists (impossible for verified inputs).
NaturalTransformation check_adjoint_uniqueness(const AdjointSituation& s, const AdjointSituation& s2,
                                               uint64_t cap = default_cap());

/// The conjugate transformation w : G2 -> G induced by v : F -> F2, computed
/// componentwise as w_B = G(u2_B) . G(v_{G2 B}) . t_{G2 B}; uniqueness is
/// certified by exhaustive search over all candidates satisfying the
/// conjugation equation u_B . F(w_B) = u2_B . v_{G2 B}.
NaturalTransformation induced_transformation(const AdjointSituation& s, const AdjointSituation& s2,
                                             const NaturalTransformation& v, uint64_t cap = default_cap());

/// Pastes <G,F,t,u> between A,B with <G2,F2,t2,u2> between B,C into an
/// adjoint situation between A and C with F2.F left adjoint to G.G2.
AdjointSituation compose_adjunctions(const AdjointSituation& s1, const AdjointSituation& s2);

/// Builds (- x Y) -| (-)^Y over a category whose product and exponential
/// tables are total for Y: unit by currying identities, counit = eval.
/// Throws StructuralError when structure is missing.
AdjointSituation product_exponential_adjunction(CatPtr cat, ObjectId y, const CCCReport& ccc);

}  // namespace catforge
