#include "catforge/adjunction.hpp"

#include <algorithm>

namespace catforge {

namespace {

void check_situation_typing(const AdjointSituation& s) {
  if (!s.a || !s.b) throw StructuralError("adjoint situation with null category");
  if (s.f.source != s.a || s.f.target != s.b) {
    throw StructuralError("left adjoint is not a functor A -> B");
  }
  if (s.g.source != s.b || s.g.target != s.a) {
    throw StructuralError("right adjoint is not a functor B -> A");
  }
  if (!(s.unit.f == identity_functor(s.a)) || !(s.unit.g == compose_functors(s.g, s.f))) {
    throw StructuralError("unit is not a transformation Id_A -> G.F");
  }
  if (!(s.counit.f == compose_functors(s.f, s.g)) || !(s.counit.g == identity_functor(s.b))) {
    throw StructuralError("counit is not a transformation F.G -> Id_B");
  }
}

}  // namespace

AdjunctionReport verify_adjoint_situation(const AdjointSituation& s) {
  check_situation_typing(s);
  AdjunctionReport report;
  report.functor_f = validate_functor(s.f);
  report.functor_g = validate_functor(s.g);
  report.unit_naturality = validate_natural_transformation(s.unit);
  report.counit_naturality = validate_natural_transformation(s.counit);

  const FinCategory& a = *s.a;
  const FinCategory& b = *s.b;
  // counit_{F A} . F(unit_A) = id_{F A}
  for (uint32_t ai = 0; ai < a.object_count(); ++ai) {
    ObjectId obj(ai);
    ObjectId fa = s.f.on_object(obj);
    ArrowId lhs = b.composite(s.counit.at(fa), s.f.on_arrow(s.unit.at(obj)));
    ArrowId expected = b.identity(fa);
    if (lhs != expected) {
      report.triangle_failures.push_back(TriangleFailure{TriangleFailure::Which::first, obj, lhs, expected});
    }
  }
  // G(counit_B) . unit_{G B} = id_{G B}
  for (uint32_t bi = 0; bi < b.object_count(); ++bi) {
    ObjectId obj(bi);
    ObjectId gb = s.g.on_object(obj);
    ArrowId lhs = a.composite(s.g.on_arrow(s.counit.at(obj)), s.unit.at(gb));
    ArrowId expected = a.identity(gb);
    if (lhs != expected) {
      report.triangle_failures.push_back(TriangleFailure{TriangleFailure::Which::second, obj, lhs, expected});
    }
  }
  return report;
}

NaturalTransformation induced_transformation(const AdjointSituation& s, const AdjointSituation& s2,
                                             const NaturalTransformation& v, uint64_t cap) {
  if (!verify_adjoint_situation(s).valid() || !verify_adjoint_situation(s2).valid()) {
    throw PreconditionError("induced_transformation: situations must be verified");
  }
  if (s.a != s2.a || s.b != s2.b) {
    throw PreconditionError("induced_transformation: situations live between different categories");
  }
  if (!(v.f == s.f) || !(v.g == s2.f)) {
    throw PreconditionError("induced_transformation: v must run F -> F2");
  }
  if (!validate_natural_transformation(v).valid()) {
    throw PreconditionError("induced_transformation: v is not natural");
  }

  const FinCategory& a = *s.a;
  const FinCategory& b = *s.b;

  // w_B = G(u2_B) . G(v_{G2 B}) . t_{G2 B}
  NaturalTransformation w;
  w.f = s2.g;
  w.g = s.g;
  w.components.resize(b.object_count());
  for (uint32_t bi = 0; bi < b.object_count(); ++bi) {
    ObjectId obj(bi);
    ObjectId g2b = s2.g.on_object(obj);
    ArrowId step1 = s.unit.at(g2b);
    ArrowId step2 = s.g.on_arrow(v.at(g2b));
    ArrowId step3 = s.g.on_arrow(s2.counit.at(obj));
    w.components[bi] = compose(a, step3, compose(a, step2, step1));
  }
  LawReport w_report = validate_natural_transformation(w);
  if (!w_report.valid()) {
    throw InternalError("induced_transformation: conjugate formula produced a non-natural family");
  }

  // Certify uniqueness: w is the only natural G2 -> G satisfying
  // u_B . F(w_B) = u2_B . v_{G2 B} for every B.
  auto satisfies_conjugation = [&](const NaturalTransformation& cand) {
    for (uint32_t bi = 0; bi < b.object_count(); ++bi) {
      ObjectId obj(bi);
      ObjectId g2b = s2.g.on_object(obj);
      ArrowId lhs = b.composite(s.counit.at(obj), s.f.on_arrow(cand.at(obj)));
      ArrowId rhs = b.composite(s2.counit.at(obj), v.at(g2b));
      if (lhs != rhs || !lhs.valid()) return false;
    }
    return true;
  };
  size_t matches = 0;
  for (const NaturalTransformation& cand : enumerate_natural_transformations(s2.g, s.g, cap)) {
    if (satisfies_conjugation(cand)) {
      ++matches;
      if (!(cand.components == w.components)) {
        throw InternalError("induced_transformation: a different candidate satisfies the equations");
      }
    }
  }
  if (matches != 1) {
    throw InternalError("induced_transformation: expected exactly one conjugate, found " +
                        std::to_string(matches));
  }
  return w;
}

NaturalTransformation check_adjoint_uniqueness(const AdjointSituation& s, const AdjointSituation& s2,
                                               uint64_t cap) {
  if (!verify_adjoint_situation(s).valid() || !verify_adjoint_situation(s2).valid()) {
    throw PreconditionError("check_adjoint_uniqueness: situations must be verified");
  }
  if (!(s.f == s2.f)) {
    throw PreconditionError("check_adjoint_uniqueness: situations do not share the left adjoint");
  }
  // The conjugate of id_F taken from s2 to s runs G -> G2.
  NaturalTransformation w = induced_transformation(s2, s, identity_transformation(s.f), cap);
  for (uint32_t bi = 0; bi < s.b->object_count(); ++bi) {
    if (!is_isomorphism(*s.a, w.components[bi]).has_value()) {
      throw InternalError("check_adjoint_uniqueness: component at object " + std::to_string(bi) +
                          " is not an isomorphism");
    }
  }
  return w;
}

AdjointSituation compose_adjunctions(const AdjointSituation& s1, const AdjointSituation& s2) {
  if (s1.b != s2.a) throw PreconditionError("compose_adjunctions: middle category does not match");
  if (!verify_adjoint_situation(s1).valid() || !verify_adjoint_situation(s2).valid()) {
    throw PreconditionError("compose_adjunctions: situations must be verified");
  }

  AdjointSituation out;
  out.a = s1.a;
  out.b = s2.b;
  out.f = compose_functors(s2.f, s1.f);
  out.g = compose_functors(s1.g, s2.g);

  const FinCategory& a = *s1.a;
  const FinCategory& c = *s2.b;

  out.unit.f = identity_functor(out.a);
  out.unit.g = compose_functors(out.g, out.f);
  out.unit.components.resize(a.object_count());
  for (uint32_t xi = 0; xi < a.object_count(); ++xi) {
    ObjectId x(xi);
    ArrowId t1 = s1.unit.at(x);  // X -> G F X
    ArrowId t2 = s2.unit.at(s1.f.on_object(x));  // F X -> G2 F2 F X
    out.unit.components[xi] = compose(a, s1.g.on_arrow(t2), t1);
  }

  out.counit.f = compose_functors(out.f, out.g);
  out.counit.g = identity_functor(out.b);
  out.counit.components.resize(c.object_count());
  for (uint32_t zi = 0; zi < c.object_count(); ++zi) {
    ObjectId z(zi);
    ArrowId u1 = s1.counit.at(s2.g.on_object(z));  // F G G2 Z -> G2 Z
    ArrowId u2 = s2.counit.at(z);                  // F2 G2 Z -> Z
    out.counit.components[zi] = compose(c, u2, s2.f.on_arrow(u1));
  }
  return out;
}

AdjointSituation product_exponential_adjunction(CatPtr cat, ObjectId y, const CCCReport& ccc) {
  AdjointSituation s;
  s.a = cat;
  s.b = cat;
  s.f = product_functor(cat, y, ccc.products);
  s.g = exponential_functor(cat, y, ccc.exponentials);

  const FinCategory& c = *cat;
  s.unit.f = identity_functor(cat);
  s.unit.g = compose_functors(s.g, s.f);
  s.unit.components.resize(c.object_count());
  for (uint32_t xi = 0; xi < c.object_count(); ++xi) {
    ObjectId x(xi);
    const ProductCone& cone_xy = *ccc.products.at(x, y);
    const ExponentialData& exp = *ccc.exponentials.at(y, cone_xy.apex);  // (X x Y)^Y
    // unit_X is the currying of id_{X x Y}.
    ArrowId target = c.identity(cone_xy.apex);
    ArrowId found = kNoArrow;
    for (ArrowId cand : c.hom(x, exp.exp_object)) {
      ArrowId cand_times_id = product_of_arrow_with_identity(c, cone_xy, exp.product_cone, cand);
      if (c.composite(exp.eval, cand_times_id) == target) {
        if (found.valid()) {
          throw InternalError("product_exponential_adjunction: unit currying is not unique");
        }
        found = cand;
      }
    }
    if (!found.valid()) {
      throw InternalError("product_exponential_adjunction: no curried unit component at object '" +
                          c.object_name(x) + "'");
    }
    s.unit.components[xi] = found;
  }

  s.counit.f = compose_functors(s.f, s.g);
  s.counit.g = identity_functor(cat);
  s.counit.components.resize(c.object_count());
  for (uint32_t zi = 0; zi < c.object_count(); ++zi) {
    ObjectId z(zi);
    const ExponentialData& exp = *ccc.exponentials.at(y, z);  // Z^Y with eval : Z^Y x Y -> Z
    s.counit.components[zi] = exp.eval;
  }
  return s;
}

}  // namespace catforge
