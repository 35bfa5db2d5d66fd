#include "catforge/universal.hpp"

#include <algorithm>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace catforge {

namespace {

uint64_t leg_key(ArrowId f, ArrowId g) {
  return (static_cast<uint64_t>(f.value) << 32) | g.value;
}

void check_cone_typing(const FinCategory& cat, const ProductCone& cone, ObjectId a, ObjectId b) {
  if (cone.apex.value >= cat.object_count() || cone.proj1.value >= cat.arrow_count() ||
      cone.proj2.value >= cat.arrow_count()) {
    throw StructuralError("product cone references out-of-range ids");
  }
  if (cat.dom(cone.proj1) != cone.apex || cat.dom(cone.proj2) != cone.apex ||
      cat.cod(cone.proj1) != a || cat.cod(cone.proj2) != b) {
    throw StructuralError("product cone is not typed apex -> (" + cat.object_name(a) + ", " +
                          cat.object_name(b) + ")");
  }
}

// Mediator counts for one test object; returns the first failing leg pair in
// (f, g) order, if any.
std::optional<ProductFailure> product_failure_at(const FinCategory& cat, const ProductCone& cone,
                                                 ObjectId a, ObjectId b, ObjectId x) {
  std::unordered_map<uint64_t, uint32_t> counts;
  auto mediators = cat.hom(x, cone.apex);
  counts.reserve(mediators.size());
  for (ArrowId m : mediators) {
    ArrowId leg1 = cat.composite(cone.proj1, m);
    ArrowId leg2 = cat.composite(cone.proj2, m);
    if (!leg1.valid() || !leg2.valid()) {
      throw StructuralError("composition table is incomplete under cone '" +
                            cat.object_name(cone.apex) + "'");
    }
    ++counts[leg_key(leg1, leg2)];
  }
  for (ArrowId f : cat.hom(x, a)) {
    for (ArrowId g : cat.hom(x, b)) {
      auto it = counts.find(leg_key(f, g));
      uint32_t count = it == counts.end() ? 0 : it->second;
      if (count != 1) {
        ProductFailure failure{x, f, g, count, {}};
        for (ArrowId m : mediators) {
          if (cat.composite(cone.proj1, m) == f && cat.composite(cone.proj2, m) == g) {
            failure.mediators.push_back(m);
            if (failure.mediators.size() == 2) break;
          }
        }
        return failure;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

ProductCheck verify_product_serial(const FinCategory& cat, const ProductCone& cone, ObjectId a,
                                   ObjectId b) {
  check_cone_typing(cat, cone, a, b);
  for (uint32_t x = 0; x < cat.object_count(); ++x) {
    if (auto failure = product_failure_at(cat, cone, a, b, ObjectId(x))) {
      return ProductCheck{false, std::move(failure)};
    }
  }
  return ProductCheck{true, std::nullopt};
}

ProductCheck verify_product_parallel(const FinCategory& cat, const ProductCone& cone, ObjectId a,
                                     ObjectId b) {
#ifndef _OPENMP
  return verify_product_serial(cat, cone, a, b);
#else
  check_cone_typing(cat, cone, a, b);
  const int n = static_cast<int>(cat.object_count());
  std::vector<std::optional<ProductFailure>> failures(static_cast<size_t>(n));
#pragma omp parallel for schedule(dynamic)
  for (int x = 0; x < n; ++x) {
    failures[static_cast<size_t>(x)] = product_failure_at(cat, cone, a, b, ObjectId(static_cast<uint32_t>(x)));
  }
  for (auto& failure : failures) {
    if (failure.has_value()) return ProductCheck{false, std::move(failure)};
  }
  return ProductCheck{true, std::nullopt};
#endif
}

ProductCheck verify_product(const FinCategory& cat, const ProductCone& cone, ObjectId a, ObjectId b,
                            ExecMode mode) {
  return mode == ExecMode::parallel ? verify_product_parallel(cat, cone, a, b)
                                    : verify_product_serial(cat, cone, a, b);
}

namespace {

// Necessary cardinality condition: a real product apex satisfies
// |hom(X,P)| = |hom(X,A)| * |hom(X,B)| for every X.
bool apex_card_filter(const FinCategory& cat, ObjectId p, ObjectId a, ObjectId b) {
  for (uint32_t x = 0; x < cat.object_count(); ++x) {
    ObjectId xo(x);
    if (cat.hom(xo, p).size() != cat.hom(xo, a).size() * cat.hom(xo, b).size()) return false;
  }
  return true;
}

std::vector<ProductCone> product_candidates(const FinCategory& cat, ObjectId a, ObjectId b,
                                            uint64_t cap) {
  std::vector<ProductCone> candidates;
  uint64_t budget = 0;
  for (uint32_t p = 0; p < cat.object_count(); ++p) {
    ObjectId apex(p);
    if (!apex_card_filter(cat, apex, a, b)) continue;
    auto legs1 = cat.hom(apex, a);
    auto legs2 = cat.hom(apex, b);
    budget += static_cast<uint64_t>(legs1.size()) * legs2.size();
    if (budget > cap) {
      throw CapExceeded("product search for (" + cat.object_name(a) + ", " + cat.object_name(b) +
                        ") exceeds the size cap");
    }
    for (ArrowId p1 : legs1) {
      for (ArrowId p2 : legs2) candidates.push_back(ProductCone{apex, p1, p2});
    }
  }
  return candidates;
}

}  // namespace

std::vector<ProductCone> find_products(const FinCategory& cat, ObjectId a, ObjectId b, uint64_t cap,
                                       ExecMode mode) {
  std::vector<ProductCone> candidates = product_candidates(cat, a, b, cap);
  std::vector<ProductCone> found;
  if (mode == ExecMode::parallel) {
#ifdef _OPENMP
    std::vector<char> ok(candidates.size(), 0);
    const int n = static_cast<int>(candidates.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (int i = 0; i < n; ++i) {
      ok[static_cast<size_t>(i)] =
          verify_product_serial(cat, candidates[static_cast<size_t>(i)], a, b).ok ? 1 : 0;
    }
    for (size_t i = 0; i < candidates.size(); ++i) {
      if (ok[i]) found.push_back(candidates[i]);
    }
    return found;
#endif
  }
  for (const ProductCone& cone : candidates) {
    if (verify_product_serial(cat, cone, a, b).ok) found.push_back(cone);
  }
  return found;
}

std::optional<ProductCone> find_canonical_product(const FinCategory& cat, ObjectId a, ObjectId b,
                                                  uint64_t cap, ExecMode mode) {
  std::vector<ProductCone> candidates = product_candidates(cat, a, b, cap);
  if (mode == ExecMode::parallel) {
#ifdef _OPENMP
    std::optional<ProductCone> best;
    const int n = static_cast<int>(candidates.size());
    // Verified candidates come back in index order; first hit wins.
    std::vector<char> ok(candidates.size(), 0);
#pragma omp parallel for schedule(dynamic, 8)
    for (int i = 0; i < n; ++i) {
      ok[static_cast<size_t>(i)] =
          verify_product_serial(cat, candidates[static_cast<size_t>(i)], a, b).ok ? 1 : 0;
    }
    for (size_t i = 0; i < candidates.size(); ++i) {
      if (ok[i]) return candidates[i];
    }
    return best;
#endif
  }
  for (const ProductCone& cone : candidates) {
    if (verify_product_serial(cat, cone, a, b).ok) return cone;
  }
  return std::nullopt;
}

ArrowId mediating_arrow(const FinCategory& cat, const ProductCone& cone, ArrowId f, ArrowId g) {
  if (cat.dom(f) != cat.dom(g)) throw StructuralError("mediating_arrow: legs have different domains");
  if (cat.cod(f) != cat.cod(cone.proj1) || cat.cod(g) != cat.cod(cone.proj2)) {
    throw StructuralError("mediating_arrow: legs do not match the cone's projections");
  }
  ArrowId found = kNoArrow;
  for (ArrowId m : cat.hom(cat.dom(f), cone.apex)) {
    if (cat.composite(cone.proj1, m) == f && cat.composite(cone.proj2, m) == g) {
      if (found.valid()) {
        throw InternalError("two mediating arrows through apex '" + cat.object_name(cone.apex) +
                            "'; cone was not verified");
      }
      found = m;
    }
  }
  if (!found.valid()) {
    throw InternalError("no mediating arrow through apex '" + cat.object_name(cone.apex) +
                        "'; cone was not verified");
  }
  return found;
}

ArrowId product_of_arrow_with_identity(const FinCategory& cat, const ProductCone& cone_a,
                                       const ProductCone& cone_b, ArrowId f) {
  if (cat.dom(f) != cat.cod(cone_a.proj1)) {
    throw StructuralError("product_of_arrow_with_identity: f does not start at the first factor");
  }
  ArrowId leg1 = compose(cat, f, cone_a.proj1);
  return mediating_arrow(cat, cone_b, leg1, cone_a.proj2);
}

// -- exponentials ----------------------------------------------------------

ExponentialCheck verify_exponential(const FinCategory& cat, const ExponentialData& exp, ObjectId a,
                                    ObjectId b, const ProductTable& products) {
  if (cat.cod(exp.product_cone.proj1) != exp.exp_object || cat.cod(exp.product_cone.proj2) != a) {
    throw StructuralError("exponential cone is not a cone over (expObject, A)");
  }
  if (cat.dom(exp.eval) != exp.product_cone.apex || cat.cod(exp.eval) != b) {
    throw StructuralError("eval must run from the cone apex to B");
  }
  if (!verify_product_serial(cat, exp.product_cone, exp.exp_object, a).ok) {
    throw PreconditionError("exponential's product cone does not satisfy the universal property");
  }

  ExponentialCheck check;
  for (uint32_t xi = 0; xi < cat.object_count(); ++xi) {
    ObjectId x(xi);
    const std::optional<ProductCone>& cone_xa = products.at(x, a);
    if (!cone_xa.has_value()) {
      check.skipped_objects.push_back(x);
      continue;
    }
    // curry candidate c: X -> B^A induces eval . (c x id_A) : X x A -> B.
    std::unordered_map<uint32_t, uint32_t> counts;
    for (ArrowId c : cat.hom(x, exp.exp_object)) {
      ArrowId c_times_id = product_of_arrow_with_identity(cat, *cone_xa, exp.product_cone, c);
      ArrowId induced = compose(cat, exp.eval, c_times_id);
      ++counts[induced.value];
    }
    for (ArrowId h : cat.hom(cone_xa->apex, b)) {
      auto it = counts.find(h.value);
      uint32_t count = it == counts.end() ? 0 : it->second;
      if (count != 1) {
        check.failure = ExponentialFailure{x, h, count};
        return check;
      }
    }
  }
  check.ok = true;
  return check;
}

bool ProductTable::total() const {
  for (const auto& cell : cells_) {
    if (!cell.has_value()) return false;
  }
  return true;
}

bool ExponentialTable::total() const {
  for (const auto& cell : cells_) {
    if (!cell.has_value()) return false;
  }
  return true;
}

std::optional<ExponentialData> find_canonical_exponential(const FinCategory& cat, ObjectId a, ObjectId b,
                                                          const ProductTable& products, uint64_t cap) {
  // Necessary condition from the currying bijection: whenever (X,A) has a
  // product, |hom(X,E)| must equal |hom(X x A, B)|.
  uint64_t budget = 0;
  for (uint32_t ei = 0; ei < cat.object_count(); ++ei) {
    ObjectId e(ei);
    const std::optional<ProductCone>& cone_ea = products.at(e, a);
    if (!cone_ea.has_value()) continue;
    bool plausible = true;
    for (uint32_t xi = 0; xi < cat.object_count() && plausible; ++xi) {
      ObjectId x(xi);
      const std::optional<ProductCone>& cone_xa = products.at(x, a);
      if (!cone_xa.has_value()) continue;
      if (cat.hom(x, e).size() != cat.hom(cone_xa->apex, b).size()) plausible = false;
    }
    if (!plausible) continue;
    auto evals = cat.hom(cone_ea->apex, b);
    budget += evals.size();
    if (budget > cap) {
      throw CapExceeded("exponential search for (" + cat.object_name(a) + ", " + cat.object_name(b) +
                        ") exceeds the size cap");
    }
    for (ArrowId eval : evals) {
      ExponentialData data{e, eval, *cone_ea};
      if (verify_exponential(cat, data, a, b, products).ok) return data;
    }
  }
  return std::nullopt;
}

CCCReport check_cartesian_closed(const FinCategory& cat, uint64_t cap, ExecMode mode) {
  CCCReport report;
  report.products = ProductTable(cat.object_count());
  report.exponentials = ExponentialTable(cat.object_count());

  std::vector<ObjectId> terminals = find_terminal(cat);
  if (!terminals.empty()) {
    report.terminal = terminals.front();
  } else {
    report.failures.push_back(MissingStructure{MissingStructure::Kind::terminal, kNoObject, kNoObject});
  }

  const uint32_t n = static_cast<uint32_t>(cat.object_count());
  struct PairResult {
    std::optional<ProductCone> cone;
  };
  std::vector<PairResult> pair_results(static_cast<size_t>(n) * n);

  auto run_pair = [&](uint32_t flat) {
    ObjectId a(flat / n);
    ObjectId b(flat % n);
    pair_results[flat].cone = find_canonical_product(cat, a, b, cap, ExecMode::serial);
  };

  if (mode == ExecMode::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
    for (int flat = 0; flat < static_cast<int>(n) * static_cast<int>(n); ++flat) {
      run_pair(static_cast<uint32_t>(flat));
    }
#else
    for (uint32_t flat = 0; flat < n * n; ++flat) run_pair(flat);
#endif
  } else {
    for (uint32_t flat = 0; flat < n * n; ++flat) run_pair(flat);
  }

  for (uint32_t a = 0; a < n; ++a) {
    for (uint32_t b = 0; b < n; ++b) {
      const auto& cone = pair_results[static_cast<size_t>(a) * n + b].cone;
      if (cone.has_value()) {
        report.products.set(ObjectId(a), ObjectId(b), *cone);
      } else {
        report.failures.push_back(MissingStructure{MissingStructure::Kind::product, ObjectId(a), ObjectId(b)});
      }
    }
  }

  std::vector<std::optional<ExponentialData>> exp_results(static_cast<size_t>(n) * n);
  auto run_exp = [&](uint32_t flat) {
    ObjectId a(flat / n);
    ObjectId b(flat % n);
    exp_results[flat] = find_canonical_exponential(cat, a, b, report.products, cap);
  };
  if (mode == ExecMode::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
    for (int flat = 0; flat < static_cast<int>(n) * static_cast<int>(n); ++flat) {
      run_exp(static_cast<uint32_t>(flat));
    }
#else
    for (uint32_t flat = 0; flat < n * n; ++flat) run_exp(flat);
#endif
  } else {
    for (uint32_t flat = 0; flat < n * n; ++flat) run_exp(flat);
  }

  for (uint32_t a = 0; a < n; ++a) {
    for (uint32_t b = 0; b < n; ++b) {
      auto& data = exp_results[static_cast<size_t>(a) * n + b];
      if (data.has_value()) {
        report.exponentials.set(ObjectId(a), ObjectId(b), *data);
      } else {
        report.failures.push_back(
            MissingStructure{MissingStructure::Kind::exponential, ObjectId(a), ObjectId(b)});
      }
    }
  }
  return report;
}

}  // namespace catforge
