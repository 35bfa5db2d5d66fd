#include "catforge/functor.hpp"

#include <algorithm>

namespace catforge {

namespace {

void check_functor_structure(const Functor& f) {
  if (!f.source || !f.target) throw StructuralError("functor with null category");
  if (f.object_map.size() != f.source->object_count()) {
    throw StructuralError("functor object map is not total");
  }
  if (f.arrow_map.size() != f.source->arrow_count()) {
    throw StructuralError("functor arrow map is not total");
  }
  for (ObjectId a : f.object_map) {
    if (a.value >= f.target->object_count()) throw StructuralError("functor object map out of range");
  }
  for (ArrowId g : f.arrow_map) {
    if (g.value >= f.target->arrow_count()) throw StructuralError("functor arrow map out of range");
  }
}

}  // namespace

LawReport validate_functor(const Functor& f) {
  check_functor_structure(f);
  const FinCategory& src = *f.source;
  const FinCategory& dst = *f.target;
  LawReport report;

  for (uint32_t fi = 0; fi < src.arrow_count(); ++fi) {
    ArrowId arrow(fi);
    ArrowId image = f.on_arrow(arrow);
    if (dst.dom(image) != f.on_object(src.dom(arrow)) || dst.cod(image) != f.on_object(src.cod(arrow))) {
      report.violations.push_back(LawViolation{LawKind::FunctorTyping, {arrow, image}});
    }
  }
  for (uint32_t ai = 0; ai < src.object_count(); ++ai) {
    ObjectId a(ai);
    ArrowId image = f.on_arrow(src.identity(a));
    if (image != dst.identity(f.on_object(a))) {
      report.violations.push_back(LawViolation{LawKind::FunctorIdentity, {src.identity(a), image}});
    }
  }
  for (uint32_t fi = 0; fi < src.arrow_count(); ++fi) {
    ArrowId inner(fi);
    for (ArrowId outer : src.arrows_from(src.cod(inner))) {
      ArrowId composite = src.composite(outer, inner);
      if (!composite.valid()) continue;  // broken table: reported by validate_category
      ArrowId lhs = f.on_arrow(composite);
      ArrowId rhs = dst.composite(f.on_arrow(outer), f.on_arrow(inner));
      if (lhs != rhs || !rhs.valid()) {
        report.violations.push_back(LawViolation{LawKind::FunctorComposition, {outer, inner}});
      }
    }
  }
  std::sort(report.violations.begin(), report.violations.end());
  return report;
}

Functor identity_functor(CatPtr cat) {
  Functor f;
  f.source = cat;
  f.target = cat;
  f.object_map.resize(cat->object_count());
  f.arrow_map.resize(cat->arrow_count());
  for (uint32_t i = 0; i < cat->object_count(); ++i) f.object_map[i] = ObjectId(i);
  for (uint32_t i = 0; i < cat->arrow_count(); ++i) f.arrow_map[i] = ArrowId(i);
  return f;
}

Functor constant_functor(CatPtr source, CatPtr target, ObjectId b) {
  if (b.value >= target->object_count()) throw StructuralError("constant_functor: object out of range");
  Functor f;
  f.source = source;
  f.target = target;
  f.object_map.assign(source->object_count(), b);
  f.arrow_map.assign(source->arrow_count(), target->identity(b));
  return f;
}

Functor compose_functors(const Functor& g, const Functor& f) {
  if (f.target != g.source) throw PreconditionError("compose_functors: categories do not match");
  Functor out;
  out.source = f.source;
  out.target = g.target;
  out.object_map.reserve(f.object_map.size());
  out.arrow_map.reserve(f.arrow_map.size());
  for (ObjectId a : f.object_map) out.object_map.push_back(g.on_object(a));
  for (ArrowId k : f.arrow_map) out.arrow_map.push_back(g.on_arrow(k));
  return out;
}

Functor product_functor(CatPtr cat, ObjectId y, const ProductTable& products) {
  Functor f;
  f.source = cat;
  f.target = cat;
  f.object_map.resize(cat->object_count());
  for (uint32_t xi = 0; xi < cat->object_count(); ++xi) {
    const auto& cone = products.at(ObjectId(xi), y);
    if (!cone.has_value()) {
      throw StructuralError("product_functor: no product for (" + cat->object_name(ObjectId(xi)) + ", " +
                            cat->object_name(y) + ")");
    }
    f.object_map[xi] = cone->apex;
  }
  f.arrow_map.resize(cat->arrow_count());
  for (uint32_t fi = 0; fi < cat->arrow_count(); ++fi) {
    ArrowId arrow(fi);
    const ProductCone& cone_dom = *products.at(cat->dom(arrow), y);
    const ProductCone& cone_cod = *products.at(cat->cod(arrow), y);
    f.arrow_map[fi] = product_of_arrow_with_identity(*cat, cone_dom, cone_cod, arrow);
  }
  return f;
}

Functor exponential_functor(CatPtr cat, ObjectId y, const ExponentialTable& exponentials) {
  Functor g;
  g.source = cat;
  g.target = cat;
  g.object_map.resize(cat->object_count());
  for (uint32_t xi = 0; xi < cat->object_count(); ++xi) {
    const auto& exp = exponentials.at(y, ObjectId(xi));  // X^Y: exponent y, base X
    if (!exp.has_value()) {
      throw StructuralError("exponential_functor: no exponential (" + cat->object_name(ObjectId(xi)) + ")^(" +
                            cat->object_name(y) + ")");
    }
    g.object_map[xi] = exp->exp_object;
  }
  g.arrow_map.resize(cat->arrow_count());
  for (uint32_t fi = 0; fi < cat->arrow_count(); ++fi) {
    ArrowId arrow(fi);
    const ExponentialData& exp_dom = *exponentials.at(y, cat->dom(arrow));
    const ExponentialData& exp_cod = *exponentials.at(y, cat->cod(arrow));
    // arrow^Y is the unique c with eval_cod . (c x id_Y) = arrow . eval_dom.
    ArrowId target_arrow = compose(*cat, arrow, exp_dom.eval);
    ArrowId found = kNoArrow;
    for (ArrowId c : cat->hom(exp_dom.exp_object, exp_cod.exp_object)) {
      ArrowId c_times_id = product_of_arrow_with_identity(*cat, exp_dom.product_cone, exp_cod.product_cone, c);
      if (cat->composite(exp_cod.eval, c_times_id) == target_arrow) {
        if (found.valid()) throw InternalError("exponential_functor: currying is not unique");
        found = c;
      }
    }
    if (!found.valid()) throw InternalError("exponential_functor: no curried arrow found");
    g.arrow_map[fi] = found;
  }
  return g;
}

LawReport validate_natural_transformation(const NaturalTransformation& t) {
  if (t.f.source != t.g.source || t.f.target != t.g.target) {
    throw StructuralError("natural transformation between functors with different categories");
  }
  const FinCategory& src = *t.f.source;
  const FinCategory& dst = *t.f.target;
  if (t.components.size() != src.object_count()) {
    throw StructuralError("natural transformation component map is not total");
  }
  for (uint32_t ai = 0; ai < src.object_count(); ++ai) {
    ObjectId a(ai);
    ArrowId comp_a = t.at(a);
    if (comp_a.value >= dst.arrow_count() || dst.dom(comp_a) != t.f.on_object(a) ||
        dst.cod(comp_a) != t.g.on_object(a)) {
      throw StructuralError("component at '" + src.object_name(a) + "' is not typed F(A) -> G(A)");
    }
  }
  LawReport report;
  for (uint32_t fi = 0; fi < src.arrow_count(); ++fi) {
    ArrowId arrow(fi);
    ObjectId a = src.dom(arrow);
    ObjectId b = src.cod(arrow);
    ArrowId left = dst.composite(t.g.on_arrow(arrow), t.at(a));  // G(f) . t_A
    ArrowId right = dst.composite(t.at(b), t.f.on_arrow(arrow));  // t_B . F(f)
    if (left != right || !left.valid()) {
      report.violations.push_back(LawViolation{LawKind::Naturality, {arrow, left, right}});
    }
  }
  std::sort(report.violations.begin(), report.violations.end());
  return report;
}

NaturalTransformation identity_transformation(const Functor& f) {
  NaturalTransformation t;
  t.f = f;
  t.g = f;
  t.components.reserve(f.object_map.size());
  for (ObjectId a : f.object_map) t.components.push_back(f.target->identity(a));
  return t;
}

NaturalTransformation vertical_compose(const NaturalTransformation& t, const NaturalTransformation& u) {
  if (!(t.g == u.f)) throw PreconditionError("vertical_compose: middle functor does not match");
  NaturalTransformation out;
  out.f = t.f;
  out.g = u.g;
  out.components.reserve(t.components.size());
  for (size_t i = 0; i < t.components.size(); ++i) {
    out.components.push_back(compose(*t.f.target, u.components[i], t.components[i]));
  }
  return out;
}

std::vector<Functor> enumerate_functors(CatPtr source, CatPtr target, uint64_t cap) {
  const FinCategory& src = *source;
  const FinCategory& dst = *target;
  const size_t n_obj = src.object_count();

  // Non-identity arrows are assigned by backtracking; identities are forced.
  std::vector<ArrowId> free_arrows;
  for (uint32_t fi = 0; fi < src.arrow_count(); ++fi) {
    if (!src.is_identity(ArrowId(fi))) free_arrows.push_back(ArrowId(fi));
  }

  uint64_t object_space = 1;
  for (size_t i = 0; i < n_obj; ++i) {
    object_space *= dst.object_count();
    if (object_space > cap) throw CapExceeded("enumerate_functors: object-map space exceeds cap");
  }
  if (n_obj == 0) object_space = 1;

  std::vector<Functor> found;
  std::vector<ObjectId> object_map(n_obj);

  auto try_object_map = [&]() {
    Functor f;
    f.source = source;
    f.target = target;
    f.object_map = object_map;
    f.arrow_map.assign(src.arrow_count(), kNoArrow);
    for (uint32_t ai = 0; ai < n_obj; ++ai) {
      f.arrow_map[src.identity(ObjectId(ai)).value] = dst.identity(object_map[ai]);
    }

    // Depth-first assignment of free arrows, pruning on composition as soon
    // as both factors of a pair are assigned.
    std::vector<size_t> choice(free_arrows.size(), 0);
    std::vector<std::vector<ArrowId>> options(free_arrows.size());
    size_t depth = 0;
    while (true) {
      if (depth == free_arrows.size()) {
        if (validate_functor(f).valid()) found.push_back(f);
        if (depth == 0) return;
        --depth;
        f.arrow_map[free_arrows[depth].value] = kNoArrow;
        ++choice[depth];
        continue;
      }
      ArrowId arrow = free_arrows[depth];
      if (choice[depth] == 0) {
        auto h = dst.hom(f.on_object(src.dom(arrow)), f.on_object(src.cod(arrow)));
        options[depth].assign(h.begin(), h.end());
      }
      bool advanced = false;
      while (choice[depth] < options[depth].size()) {
        ArrowId candidate = options[depth][choice[depth]];
        f.arrow_map[arrow.value] = candidate;
        // Incremental composition pruning against already-assigned arrows.
        bool ok = true;
        for (size_t j = 0; j <= depth && ok; ++j) {
          ArrowId other = free_arrows[j];
          ArrowId gf = src.composite(arrow, other);
          if (gf.valid() && f.arrow_map[gf.value].valid() && f.arrow_map[other.value].valid()) {
            if (dst.composite(f.arrow_map[arrow.value], f.arrow_map[other.value]) != f.arrow_map[gf.value]) {
              ok = false;
            }
          }
          ArrowId fg = src.composite(other, arrow);
          if (ok && fg.valid() && f.arrow_map[fg.value].valid() && f.arrow_map[other.value].valid()) {
            if (dst.composite(f.arrow_map[other.value], f.arrow_map[arrow.value]) != f.arrow_map[fg.value]) {
              ok = false;
            }
          }
        }
        if (ok) {
          advanced = true;
          break;
        }
        ++choice[depth];
      }
      if (advanced) {
        ++depth;
        if (depth < choice.size()) choice[depth] = 0;
        continue;
      }
      f.arrow_map[arrow.value] = kNoArrow;
      if (depth == 0) return;
      --depth;
      f.arrow_map[free_arrows[depth].value] = kNoArrow;
      ++choice[depth];
    }
  };

  // Odometer over object maps in lexicographic order; the n_obj == 0 case
  // runs once with the empty map.
  if (n_obj > 0 && dst.object_count() == 0) return found;
  for (uint64_t idx = 0; idx < object_space; ++idx) {
    uint64_t rest = idx;
    for (size_t i = n_obj; i-- > 0;) {
      object_map[i] = ObjectId(static_cast<uint32_t>(rest % dst.object_count()));
      rest /= dst.object_count();
    }
    try_object_map();
    if (found.size() > cap) throw CapExceeded("enumerate_functors: result count exceeds cap");
  }
  return found;
}

std::vector<NaturalTransformation> enumerate_natural_transformations(const Functor& f, const Functor& g,
                                                                     uint64_t cap) {
  if (f.source != g.source || f.target != g.target) {
    throw PreconditionError("enumerate_natural_transformations: functors are not parallel");
  }
  const FinCategory& src = *f.source;
  const size_t n_obj = src.object_count();
  std::vector<std::vector<ArrowId>> options(n_obj);
  uint64_t space = 1;
  for (uint32_t ai = 0; ai < n_obj; ++ai) {
    auto h = f.target->hom(f.on_object(ObjectId(ai)), g.on_object(ObjectId(ai)));
    options[ai].assign(h.begin(), h.end());
    space *= std::max<size_t>(options[ai].size(), 1);
    if (space > cap) throw CapExceeded("enumerate_natural_transformations: space exceeds cap");
    if (options[ai].empty()) return {};
  }

  std::vector<NaturalTransformation> found;
  NaturalTransformation t;
  t.f = f;
  t.g = g;
  t.components.assign(n_obj, kNoArrow);

  // Backtracking with per-arrow naturality pruning once both endpoints have
  // components.
  std::vector<size_t> choice(n_obj, 0);
  size_t depth = 0;
  if (n_obj == 0) {
    found.push_back(t);
    return found;
  }
  while (true) {
    if (depth == n_obj) {
      found.push_back(t);
      --depth;
      ++choice[depth];
    }
    bool advanced = false;
    while (choice[depth] < options[depth].size()) {
      t.components[depth] = options[depth][choice[depth]];
      bool ok = true;
      for (uint32_t fi = 0; fi < src.arrow_count() && ok; ++fi) {
        ArrowId arrow(fi);
        uint32_t a = src.dom(arrow).value;
        uint32_t b = src.cod(arrow).value;
        if (a > depth || b > depth) continue;
        ArrowId left = f.target->composite(g.on_arrow(arrow), t.components[a]);
        ArrowId right = f.target->composite(t.components[b], f.on_arrow(arrow));
        if (left != right || !left.valid()) ok = false;
      }
      if (ok) {
        advanced = true;
        break;
      }
      ++choice[depth];
    }
    if (advanced) {
      ++depth;
      if (depth < n_obj) choice[depth] = 0;
      continue;
    }
    t.components[depth] = kNoArrow;
    if (depth == 0) break;
    --depth;
    ++choice[depth];
  }
  return found;
}

FunctorCategory functor_category(CatPtr a, CatPtr b, uint64_t cap) {
  uint64_t input_size = static_cast<uint64_t>(a->object_count() + a->arrow_count()) *
                        (b->object_count() + b->arrow_count());
  if (input_size > cap) throw CapExceeded("functor_category: input size exceeds cap");

  FunctorCategory result;
  result.objects = enumerate_functors(a, b, cap);

  FinCategoryBuilder builder;
  std::vector<ObjectId> object_ids;
  for (size_t i = 0; i < result.objects.size(); ++i) {
    object_ids.push_back(builder.add_object("F" + std::to_string(i)));
  }

  // Arrows grouped by (source functor, target functor) pair, then canonical
  // component order within the pair.
  std::vector<std::pair<size_t, size_t>> endpoints;
  for (size_t i = 0; i < result.objects.size(); ++i) {
    for (size_t j = 0; j < result.objects.size(); ++j) {
      auto nats = enumerate_natural_transformations(result.objects[i], result.objects[j], cap);
      for (auto& nat : nats) {
        std::string name = "t" + std::to_string(result.arrows.size());
        builder.add_arrow(std::move(name), object_ids[i], object_ids[j]);
        endpoints.push_back({i, j});
        result.arrows.push_back(std::move(nat));
      }
    }
  }

  // Identities: the identity transformation on each functor.
  for (size_t i = 0; i < result.objects.size(); ++i) {
    NaturalTransformation id_t = identity_transformation(result.objects[i]);
    for (size_t k = 0; k < result.arrows.size(); ++k) {
      if (endpoints[k] == std::make_pair(i, i) && result.arrows[k].components == id_t.components) {
        builder.set_identity(object_ids[i], ArrowId(static_cast<uint32_t>(k)));
        break;
      }
    }
  }

  // Composition: vertical, located by component lookup.
  auto find_arrow = [&](size_t i, size_t j, const std::vector<ArrowId>& components) -> ArrowId {
    for (size_t k = 0; k < result.arrows.size(); ++k) {
      if (endpoints[k] == std::make_pair(i, j) && result.arrows[k].components == components) {
        return ArrowId(static_cast<uint32_t>(k));
      }
    }
    throw InternalError("functor_category: vertical composite is not among the enumerated arrows");
  };
  for (size_t t_idx = 0; t_idx < result.arrows.size(); ++t_idx) {
    for (size_t u_idx = 0; u_idx < result.arrows.size(); ++u_idx) {
      if (endpoints[t_idx].second != endpoints[u_idx].first) continue;
      NaturalTransformation composite = vertical_compose(result.arrows[t_idx], result.arrows[u_idx]);
      ArrowId target = find_arrow(endpoints[t_idx].first, endpoints[u_idx].second, composite.components);
      builder.set_composite(ArrowId(static_cast<uint32_t>(u_idx)), ArrowId(static_cast<uint32_t>(t_idx)),
                            target);
    }
  }
  result.category = builder.build();
  return result;
}

Diagram apply_functor(const Functor& f, const Diagram& diagram) {
  if (diagram.category != f.source) throw PreconditionError("apply_functor: diagram is over another category");
  std::vector<DiagramNode> nodes;
  nodes.reserve(diagram.nodes.size());
  for (const DiagramNode& node : diagram.nodes) {
    nodes.push_back(DiagramNode{node.name, f.on_object(node.object)});
  }
  std::vector<DiagramEdge> edges;
  edges.reserve(diagram.edges.size());
  for (const DiagramEdge& e : diagram.edges) {
    edges.push_back(DiagramEdge{e.src, e.dst, f.on_arrow(e.arrow)});
  }
  return build_diagram(f.target, std::move(nodes), std::move(edges));
}

}  // namespace catforge
