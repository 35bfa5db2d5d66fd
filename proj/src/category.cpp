#include "catforge/category.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace catforge {

namespace {

constexpr uint32_t kUnset = std::numeric_limits<uint32_t>::max();

uint64_t pair_key(ArrowId g, ArrowId f) {
  return (static_cast<uint64_t>(g.value) << 32) | f.value;
}

}  // namespace

const char* law_name(LawKind law) {
  switch (law) {
    case LawKind::IdentityTyping: return "identity-typing";
    case LawKind::CompositionDefined: return "composition-definedness";
    case LawKind::CompositionTyping: return "composition-typing";
    case LawKind::LeftIdentity: return "left-identity";
    case LawKind::RightIdentity: return "right-identity";
    case LawKind::Associativity: return "associativity";
    case LawKind::FunctorTyping: return "functor-typing";
    case LawKind::FunctorIdentity: return "functor-identity";
    case LawKind::FunctorComposition: return "functor-composition";
    case LawKind::Naturality: return "naturality";
  }
  return "unknown";
}

bool FinCategory::is_identity(ArrowId f) const {
  const ArrowRecord& rec = arrows_.at(f.value);
  return rec.dom == rec.cod && identities_.at(rec.dom.value) == f;
}

ArrowId FinCategory::composite(ArrowId g, ArrowId f) const {
  if (g.value >= arrows_.size() || f.value >= arrows_.size()) {
    throw StructuralError("composite: arrow index out of range");
  }
  if (const auto* dense = std::get_if<DenseComp>(&comp_)) {
    uint32_t v = dense->cells[static_cast<size_t>(g.value) * arrows_.size() + f.value];
    return v == kUnset ? kNoArrow : ArrowId(v);
  }
  if (const auto* sparse = std::get_if<SparseComp>(&comp_)) {
    auto it = sparse->cells.find(pair_key(g, f));
    return it == sparse->cells.end() ? kNoArrow : ArrowId(it->second);
  }
  const auto& fn = std::get<FnComp>(comp_);
  if (!composable(g, f)) return kNoArrow;
  return fn.fn(g, f);
}

std::span<const ArrowId> FinCategory::hom(ObjectId a, ObjectId b) const {
  if (a.value >= objects_.size() || b.value >= objects_.size()) {
    throw StructuralError("hom: object index out of range");
  }
  return homs_[static_cast<size_t>(a.value) * objects_.size() + b.value];
}

std::optional<ObjectId> FinCategory::object_by_name(const std::string& name) const {
  for (size_t i = 0; i < objects_.size(); ++i) {
    if (objects_[i] == name) return ObjectId(static_cast<uint32_t>(i));
  }
  return std::nullopt;
}

std::optional<ArrowId> FinCategory::arrow_by_name(const std::string& name) const {
  for (size_t i = 0; i < arrows_.size(); ++i) {
    if (arrows_[i].name == name) return ArrowId(static_cast<uint32_t>(i));
  }
  return std::nullopt;
}

void FinCategory::build_indexes() {
  const size_t n_obj = objects_.size();
  homs_.assign(n_obj * n_obj, {});
  from_.assign(n_obj, {});
  into_.assign(n_obj, {});
  for (const ArrowRecord& rec : arrows_) {
    homs_[static_cast<size_t>(rec.dom.value) * n_obj + rec.cod.value].push_back(rec.id);
    from_[rec.dom.value].push_back(rec.id);
    into_[rec.cod.value].push_back(rec.id);
  }
}

FinCategory FinCategory::rebind_composite(ArrowId g, ArrowId f, ArrowId value) const {
  FinCategory out = *this;
  if (auto* dense = std::get_if<DenseComp>(&out.comp_)) {
    dense->cells[static_cast<size_t>(g.value) * arrows_.size() + f.value] = value.value;
    return out;
  }
  if (auto* sparse = std::get_if<SparseComp>(&out.comp_)) {
    sparse->cells[pair_key(g, f)] = value.value;
    return out;
  }
  throw StructuralError("rebind_composite: category has computed composition");
}

// -- Builder --------------------------------------------------------------

ObjectId FinCategoryBuilder::add_object(std::string name) {
  objects_.push_back(std::move(name));
  identities_.push_back(kNoArrow);
  return ObjectId(static_cast<uint32_t>(objects_.size() - 1));
}

ArrowId FinCategoryBuilder::add_arrow(std::string name, ObjectId dom, ObjectId cod) {
  if (dom.value >= objects_.size() || cod.value >= objects_.size()) {
    throw StructuralError("add_arrow: object index out of range for arrow '" + name + "'");
  }
  ArrowId id(static_cast<uint32_t>(arrows_.size()));
  arrows_.push_back(ArrowRecord{id, dom, cod, std::move(name)});
  return id;
}

ArrowId FinCategoryBuilder::add_identity(ObjectId a) {
  ArrowId id = add_arrow("id_" + objects_.at(a.value), a, a);
  identities_.at(a.value) = id;
  return id;
}

void FinCategoryBuilder::set_identity(ObjectId a, ArrowId f) {
  if (a.value >= objects_.size()) throw StructuralError("set_identity: object out of range");
  if (f.value >= arrows_.size()) throw StructuralError("set_identity: arrow out of range");
  identities_.at(a.value) = f;
}

void FinCategoryBuilder::set_composite(ArrowId g, ArrowId f, ArrowId gf) {
  if (g.value >= arrows_.size() || f.value >= arrows_.size() || gf.value >= arrows_.size()) {
    throw StructuralError("set_composite: arrow index out of range");
  }
  comp_[pair_key(g, f)] = gf.value;
}

bool FinCategoryBuilder::has_composite(ArrowId g, ArrowId f) const {
  return comp_.contains(pair_key(g, f));
}

void FinCategoryBuilder::fill_identity_composites() {
  for (const ArrowRecord& rec : arrows_) {
    ArrowId left = identities_.at(rec.cod.value);
    ArrowId right = identities_.at(rec.dom.value);
    if (left.valid() && !has_composite(left, rec.id)) set_composite(left, rec.id, rec.id);
    if (right.valid() && !has_composite(rec.id, right)) set_composite(rec.id, right, rec.id);
  }
}

void FinCategoryBuilder::check_structure() const {
  for (size_t i = 0; i < identities_.size(); ++i) {
    if (!identities_[i].valid()) {
      throw StructuralError("object '" + objects_[i] + "' has no identity arrow");
    }
    if (identities_[i].value >= arrows_.size()) {
      throw StructuralError("identity of '" + objects_[i] + "' is out of range");
    }
  }
  for (const auto& [key, value] : comp_) {
    ArrowId g(static_cast<uint32_t>(key >> 32));
    ArrowId f(static_cast<uint32_t>(key & 0xffffffffu));
    if (value >= arrows_.size()) throw StructuralError("composite value out of range");
    if (arrows_[f.value].cod != arrows_[g.value].dom) {
      throw StructuralError("composition entry (" + arrows_[g.value].name + ", " + arrows_[f.value].name +
                            ") is bound on a non-composable pair");
    }
  }
}

FinCategory FinCategoryBuilder::finish_core() {
  FinCategory cat;
  cat.objects_ = objects_;
  cat.arrows_ = arrows_;
  cat.identities_ = identities_;
  cat.build_indexes();
  return cat;
}

CatPtr FinCategoryBuilder::build() {
  check_structure();
  FinCategory cat = finish_core();
  const size_t n = arrows_.size();
  // Dense tables up to 4096 arrows (64 MiB worst case); sparse beyond.
  if (n * n <= size_t{4096} * 4096) {
    FinCategory::DenseComp dense;
    dense.cells.assign(n * n, kUnset);
    for (const auto& [key, value] : comp_) {
      uint32_t g = static_cast<uint32_t>(key >> 32);
      uint32_t f = static_cast<uint32_t>(key & 0xffffffffu);
      dense.cells[static_cast<size_t>(g) * n + f] = value;
    }
    cat.comp_ = std::move(dense);
  } else {
    FinCategory::SparseComp sparse;
    sparse.cells = comp_;
    cat.comp_ = std::move(sparse);
  }
  return std::make_shared<const FinCategory>(std::move(cat));
}

CatPtr FinCategoryBuilder::build_with_composition_fn(FinCategory::CompFn fn) {
  for (size_t i = 0; i < identities_.size(); ++i) {
    if (!identities_[i].valid()) {
      throw StructuralError("object '" + objects_[i] + "' has no identity arrow");
    }
  }
  FinCategory cat = finish_core();
  cat.comp_ = FinCategory::FnComp{std::move(fn)};
  return std::make_shared<const FinCategory>(std::move(cat));
}

// -- validate_category -----------------------------------------------------

namespace {

// Shared law scan; omp pragmas are no-ops when `parallel` is false because the
// loops are split into explicitly serial/parallel drivers below.
struct LawScan {
  const FinCategory& cat;
  std::vector<std::vector<LawViolation>> buckets;

  explicit LawScan(const FinCategory& c, int threads) : cat(c), buckets(static_cast<size_t>(threads)) {}

  void record(size_t bucket, LawKind law, std::vector<ArrowId> witness) {
    buckets[bucket].push_back(LawViolation{law, std::move(witness)});
  }

  // Identity typing for one object.
  void scan_identity(size_t bucket, uint32_t obj) {
    ObjectId a(obj);
    ArrowId id = cat.identity(a);
    const ArrowRecord& rec = cat.arrow(id);
    if (rec.dom != a || rec.cod != a) record(bucket, LawKind::IdentityTyping, {id});
  }

  // Definedness/typing of the table row for arrow g, plus identity laws and
  // associativity for triples whose innermost factor ranges over arrows_from.
  void scan_arrow_laws(size_t bucket, uint32_t fi) {
    ArrowId f(fi);
    ArrowId left = cat.composite(cat.identity(cat.cod(f)), f);
    if (left != f) record(bucket, LawKind::LeftIdentity, {f});
    ArrowId right = cat.composite(f, cat.identity(cat.dom(f)));
    if (right != f) record(bucket, LawKind::RightIdentity, {f});
  }

  void scan_pair_row(size_t bucket, uint32_t gi) {
    ArrowId g(gi);
    const uint32_t n = static_cast<uint32_t>(cat.arrow_count());
    for (uint32_t fi = 0; fi < n; ++fi) {
      ArrowId f(fi);
      ArrowId c = cat.composite(g, f);
      if (cat.composable(g, f)) {
        if (!c.valid()) {
          record(bucket, LawKind::CompositionDefined, {g, f});
        } else if (cat.dom(c) != cat.dom(f) || cat.cod(c) != cat.cod(g)) {
          record(bucket, LawKind::CompositionTyping, {g, f, c});
        }
      } else if (c.valid()) {
        record(bucket, LawKind::CompositionDefined, {g, f});
      }
    }
  }

  // Associativity for all triples (h, g, f) with f fixed.
  void scan_triples(size_t bucket, uint32_t fi) {
    ArrowId f(fi);
    for (ArrowId g : cat.arrows_from(cat.cod(f))) {
      ArrowId gf = cat.composite(g, f);
      for (ArrowId h : cat.arrows_from(cat.cod(g))) {
        ArrowId hg = cat.composite(h, g);
        ArrowId lhs = gf.valid() ? cat.composite(h, gf) : kNoArrow;
        ArrowId rhs = hg.valid() ? cat.composite(hg, f) : kNoArrow;
        if (lhs != rhs || !lhs.valid()) record(bucket, LawKind::Associativity, {h, g, f});
      }
    }
  }

  LawReport finish() {
    LawReport report;
    for (auto& bucket : buckets) {
      report.violations.insert(report.violations.end(), bucket.begin(), bucket.end());
    }
    std::sort(report.violations.begin(), report.violations.end());
    report.violations.erase(std::unique(report.violations.begin(), report.violations.end()),
                            report.violations.end());
    return report;
  }
};

}  // namespace

LawReport validate_category_serial(const FinCategory& cat) {
  LawScan scan(cat, 1);
  const uint32_t n_obj = static_cast<uint32_t>(cat.object_count());
  const uint32_t n_arr = static_cast<uint32_t>(cat.arrow_count());
  for (uint32_t a = 0; a < n_obj; ++a) scan.scan_identity(0, a);
  for (uint32_t f = 0; f < n_arr; ++f) {
    scan.scan_arrow_laws(0, f);
    scan.scan_pair_row(0, f);
    scan.scan_triples(0, f);
  }
  return scan.finish();
}

LawReport validate_category_parallel(const FinCategory& cat) {
#ifndef _OPENMP
  return validate_category_serial(cat);
#else
  LawScan scan(cat, omp_get_max_threads());
  const int n_obj = static_cast<int>(cat.object_count());
  const int n_arr = static_cast<int>(cat.arrow_count());
  for (int a = 0; a < n_obj; ++a) scan.scan_identity(0, static_cast<uint32_t>(a));
#pragma omp parallel for schedule(dynamic, 16)
  for (int f = 0; f < n_arr; ++f) {
    const size_t bucket = static_cast<size_t>(omp_get_thread_num());
    scan.scan_arrow_laws(bucket, static_cast<uint32_t>(f));
    scan.scan_pair_row(bucket, static_cast<uint32_t>(f));
    scan.scan_triples(bucket, static_cast<uint32_t>(f));
  }
  return scan.finish();
#endif
}

LawReport validate_category(const FinCategory& cat, ExecMode mode) {
  return mode == ExecMode::parallel ? validate_category_parallel(cat) : validate_category_serial(cat);
}

// -- basic operations -------------------------------------------------------

ArrowId compose(const FinCategory& cat, ArrowId g, ArrowId f) {
  if (!cat.composable(g, f)) {
    throw CompositionMismatch(g, f, "cannot compose '" + cat.arrow(g).name + "' after '" +
                                        cat.arrow(f).name + "': cod(" + cat.arrow(f).name +
                                        ") != dom(" + cat.arrow(g).name + ")");
  }
  ArrowId c = cat.composite(g, f);
  if (!c.valid()) {
    throw StructuralError("composition table has no entry for composable pair (" + cat.arrow(g).name +
                          ", " + cat.arrow(f).name + ")");
  }
  return c;
}

std::vector<ArrowId> hom_set(const FinCategory& cat, ObjectId a, ObjectId b) {
  auto span = cat.hom(a, b);
  return {span.begin(), span.end()};
}

std::optional<ArrowId> is_isomorphism(const FinCategory& cat, ArrowId i) {
  ObjectId a = cat.dom(i);
  ObjectId b = cat.cod(i);
  ArrowId id_a = cat.identity(a);
  ArrowId id_b = cat.identity(b);
  std::optional<ArrowId> inverse;
  for (ArrowId j : cat.hom(b, a)) {
    if (cat.composite(j, i) == id_a && cat.composite(i, j) == id_b) {
      if (inverse.has_value()) {
        throw InternalError("arrow '" + cat.arrow(i).name +
                            "' has two distinct inverses; category does not satisfy the laws");
      }
      inverse = j;
    }
  }
  return inverse;
}

bool is_initial(const FinCategory& cat, ObjectId a) {
  for (uint32_t b = 0; b < cat.object_count(); ++b) {
    if (cat.hom(a, ObjectId(b)).size() != 1) return false;
  }
  return true;
}

bool is_terminal(const FinCategory& cat, ObjectId a) {
  for (uint32_t b = 0; b < cat.object_count(); ++b) {
    if (cat.hom(ObjectId(b), a).size() != 1) return false;
  }
  return true;
}

std::vector<ObjectId> find_initial(const FinCategory& cat) {
  std::vector<ObjectId> out;
  for (uint32_t a = 0; a < cat.object_count(); ++a) {
    if (is_initial(cat, ObjectId(a))) out.push_back(ObjectId(a));
  }
  return out;
}

std::vector<ObjectId> find_terminal(const FinCategory& cat) {
  std::vector<ObjectId> out;
  for (uint32_t a = 0; a < cat.object_count(); ++a) {
    if (is_terminal(cat, ObjectId(a))) out.push_back(ObjectId(a));
  }
  return out;
}

ArrowId unique_iso_between_initials(const FinCategory& cat, ObjectId i, ObjectId i2) {
  if (!is_initial(cat, i)) {
    throw PreconditionError("object '" + cat.object_name(i) + "' is not initial");
  }
  if (!is_initial(cat, i2)) {
    throw PreconditionError("object '" + cat.object_name(i2) + "' is not initial");
  }
  auto arrows = cat.hom(i, i2);
  if (arrows.size() != 1) {
    throw InternalError("initial objects with " + std::to_string(arrows.size()) +
                        " connecting arrows; category does not satisfy the laws");
  }
  ArrowId tau = arrows[0];
  if (!is_isomorphism(cat, tau).has_value()) {
    throw InternalError("unique arrow between initial objects is not invertible");
  }
  return tau;
}

}  // namespace catforge
