#include "catforge/finset.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace catforge {

namespace {

uint64_t saturating_pow(uint64_t base, uint64_t exp) {
  if (exp == 0) return 1;  // includes 0^0 = 1: one empty function
  uint64_t result = 1;
  for (uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > UINT64_MAX / (base == 0 ? 1 : base)) return UINT64_MAX;
    result *= base;
  }
  return result;
}

struct FnHash {
  size_t operator()(const FinFunction& fn) const noexcept {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&](uint64_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    mix(fn.dom_set);
    mix(fn.cod_set);
    for (uint32_t m : fn.mapping) mix(m);
    return static_cast<size_t>(h);
  }
};

struct FinSetIndex {
  std::unordered_map<FinFunction, uint32_t, FnHash> by_function;
  std::vector<FinFunction> functions;
};

FinFunction compose_functions(const FinFunction& g, const FinFunction& f) {
  FinFunction out;
  out.dom_set = f.dom_set;
  out.cod_set = g.cod_set;
  out.mapping.resize(f.mapping.size());
  for (size_t i = 0; i < f.mapping.size(); ++i) out.mapping[i] = g.mapping[f.mapping[i]];
  return out;
}

}  // namespace

ArrowId FinSetCategory::arrow_of(const FinFunction& fn) const {
  for (size_t i = 0; i < functions.size(); ++i) {
    if (functions[i] == fn) return ArrowId(static_cast<uint32_t>(i));
  }
  throw InternalError("arrow_of: function is not an arrow of this category");
}

FinSetCategory finset_category(std::vector<FinSetObject> sets, uint64_t cap) {
  {
    std::unordered_set<std::string> names;
    for (const FinSetObject& s : sets) {
      if (!names.insert(s.name).second) throw StructuralError("duplicate set name '" + s.name + "'");
      std::unordered_set<std::string> elems(s.elements.begin(), s.elements.end());
      if (elems.size() != s.elements.size()) {
        throw StructuralError("set '" + s.name + "' has duplicate element labels");
      }
    }
  }

  uint64_t total = 0;
  for (const FinSetObject& d : sets) {
    for (const FinSetObject& c : sets) {
      total += saturating_pow(c.size(), d.size());
      if (total > cap) {
        throw CapExceeded("finset_category: " + std::to_string(total) + "+ arrows exceed cap " +
                          std::to_string(cap));
      }
    }
  }

  FinCategoryBuilder builder;
  for (const FinSetObject& s : sets) builder.add_object(s.name);

  auto index = std::make_shared<FinSetIndex>();
  std::vector<ArrowId> identity_arrows(sets.size(), kNoArrow);

  // All total functions, ordered by (dom, cod, mapping).
  for (uint32_t d = 0; d < sets.size(); ++d) {
    for (uint32_t c = 0; c < sets.size(); ++c) {
      const size_t dom_size = sets[d].size();
      const size_t cod_size = sets[c].size();
      if (dom_size > 0 && cod_size == 0) continue;  // no function into the empty set
      FinFunction fn{d, c, std::vector<uint32_t>(dom_size, 0)};
      uint32_t serial = 0;
      while (true) {
        bool is_id = d == c;
        if (is_id) {
          for (size_t i = 0; i < dom_size; ++i) {
            if (fn.mapping[i] != i) {
              is_id = false;
              break;
            }
          }
        }
        std::string name = is_id ? "id_" + sets[d].name
                                 : "f" + std::to_string(d) + "_" + std::to_string(c) + "_" +
                                       std::to_string(serial);
        ArrowId id = builder.add_arrow(std::move(name),
                                       ObjectId(d), ObjectId(c));
        if (is_id) identity_arrows[d] = id;
        index->by_function.emplace(fn, id.value);
        index->functions.push_back(fn);
        ++serial;

        // next mapping, lexicographic
        size_t pos = dom_size;
        while (pos > 0) {
          --pos;
          if (fn.mapping[pos] + 1 < cod_size) {
            ++fn.mapping[pos];
            std::fill(fn.mapping.begin() + static_cast<ptrdiff_t>(pos) + 1, fn.mapping.end(), 0);
            break;
          }
          if (pos == 0) {
            pos = SIZE_MAX;
            break;
          }
        }
        if (dom_size == 0 || pos == SIZE_MAX) break;
      }
    }
  }

  for (uint32_t d = 0; d < sets.size(); ++d) builder.set_identity(ObjectId(d), identity_arrows[d]);

  FinSetCategory fsc;
  fsc.sets = std::move(sets);
  fsc.functions = index->functions;

  const size_t n_arrows = index->functions.size();
  if (n_arrows <= 4096) {
    // Materialize the full composition table.
    for (uint32_t gi = 0; gi < n_arrows; ++gi) {
      const FinFunction& g = index->functions[gi];
      for (uint32_t fi = 0; fi < n_arrows; ++fi) {
        const FinFunction& f = index->functions[fi];
        if (f.cod_set != g.dom_set) continue;
        FinFunction gf = compose_functions(g, f);
        builder.set_composite(ArrowId(gi), ArrowId(fi), ArrowId(index->by_function.at(gf)));
      }
    }
    fsc.category = builder.build();
  } else {
    // Composition evaluated on demand; the pair table would be too large.
    auto idx = index;
    fsc.category = builder.build_with_composition_fn([idx](ArrowId g, ArrowId f) {
      FinFunction gf = compose_functions(idx->functions[g.value], idx->functions[f.value]);
      return ArrowId(idx->by_function.at(gf));
    });
  }
  return fsc;
}

FinSetCategory finset_category_of_sizes(const std::vector<size_t>& sizes, uint64_t cap) {
  std::vector<FinSetObject> sets;
  for (size_t i = 0; i < sizes.size(); ++i) {
    FinSetObject s;
    s.name = "S" + std::to_string(i);
    for (size_t j = 0; j < sizes[i]; ++j) s.elements.push_back(s.name + "." + std::to_string(j));
    sets.push_back(std::move(s));
  }
  return finset_category(std::move(sets), cap);
}

namespace {

bool is_mono(const FinSetCategory& fsc, ArrowId f) {
  const FinCategory& cat = *fsc.category;
  ObjectId a = cat.dom(f);
  for (uint32_t xi = 0; xi < cat.object_count(); ++xi) {
    std::unordered_map<uint32_t, uint32_t> seen;  // composite -> first g
    for (ArrowId g : cat.hom(ObjectId(xi), a)) {
      ArrowId fg = cat.composite(f, g);
      auto [it, inserted] = seen.emplace(fg.value, g.value);
      if (!inserted && it->second != g.value) return false;
    }
  }
  return true;
}

bool is_epi(const FinSetCategory& fsc, ArrowId f) {
  const FinCategory& cat = *fsc.category;
  ObjectId b = cat.cod(f);
  for (uint32_t xi = 0; xi < cat.object_count(); ++xi) {
    std::unordered_map<uint32_t, uint32_t> seen;
    for (ArrowId g : cat.hom(b, ObjectId(xi))) {
      ArrowId gf = cat.composite(g, f);
      auto [it, inserted] = seen.emplace(gf.value, g.value);
      if (!inserted && it->second != g.value) return false;
    }
  }
  return true;
}

}  // namespace

ArrowClassification classify_arrow(const FinSetCategory& fsc, ArrowId f) {
  const FinFunction& fn = fsc.function(f);
  ArrowClassification out;

  out.injective = true;
  std::unordered_set<uint32_t> image;
  for (uint32_t v : fn.mapping) {
    if (!image.insert(v).second) out.injective = false;
  }
  out.surjective = image.size() == fsc.sets[fn.cod_set].size();
  out.bijective = out.injective && out.surjective;

  out.mono = is_mono(fsc, f);
  out.epi = is_epi(fsc, f);
  out.iso = is_isomorphism(*fsc.category, f).has_value();
  return out;
}

std::vector<ArrowClassification> classify_all_arrows_serial(const FinSetCategory& fsc) {
  std::vector<ArrowClassification> out(fsc.category->arrow_count());
  for (uint32_t fi = 0; fi < out.size(); ++fi) out[fi] = classify_arrow(fsc, ArrowId(fi));
  return out;
}

std::vector<ArrowClassification> classify_all_arrows_parallel(const FinSetCategory& fsc) {
#ifndef _OPENMP
  return classify_all_arrows_serial(fsc);
#else
  std::vector<ArrowClassification> out(fsc.category->arrow_count());
  const int n = static_cast<int>(out.size());
#pragma omp parallel for schedule(dynamic, 32)
  for (int fi = 0; fi < n; ++fi) {
    out[static_cast<size_t>(fi)] = classify_arrow(fsc, ArrowId(static_cast<uint32_t>(fi)));
  }
  return out;
#endif
}

std::vector<ArrowClassification> classify_all_arrows(const FinSetCategory& fsc, ExecMode mode) {
  return mode == ExecMode::parallel ? classify_all_arrows_parallel(fsc) : classify_all_arrows_serial(fsc);
}

CorrespondenceReport verify_correspondence_table(const FinSetCategory& fsc, ExecMode mode) {
  CorrespondenceReport report;
  std::vector<ArrowClassification> flags = classify_all_arrows(fsc, mode);
  report.arrows_checked = flags.size();
  for (uint32_t fi = 0; fi < flags.size(); ++fi) {
    const ArrowClassification& c = flags[fi];
    if (c.mono != c.injective || c.epi != c.surjective || c.iso != c.bijective) {
      report.disagreements.push_back(CorrespondenceDisagreement{ArrowId(fi), c});
    }
  }
  return report;
}

SingletonIsoReport singleton_isomorphism_check(const FinSetCategory& fsc) {
  SingletonIsoReport report;
  for (uint32_t i = 0; i < fsc.sets.size(); ++i) {
    if (fsc.sets[i].size() == 1) report.singletons.push_back(ObjectId(i));
  }
  for (size_t i = 0; i < report.singletons.size(); ++i) {
    for (size_t j = i + 1; j < report.singletons.size(); ++j) {
      ObjectId s1 = report.singletons[i];
      ObjectId s2 = report.singletons[j];
      auto arrows = fsc.category->hom(s1, s2);
      bool iso = arrows.size() == 1 && is_isomorphism(*fsc.category, arrows[0]).has_value();
      (iso ? report.isomorphic_pairs : report.failures).push_back({s1, s2});
    }
  }
  for (ObjectId s : report.singletons) {
    if (!is_terminal(*fsc.category, s)) report.non_terminal_singletons.push_back(s);
  }
  return report;
}

std::optional<ProductCone> canonical_product_cone(const FinSetCategory& fsc, ObjectId a, ObjectId b) {
  const size_t size_a = fsc.sets[a.value].size();
  const size_t size_b = fsc.sets[b.value].size();
  const size_t target = size_a * size_b;
  for (uint32_t p = 0; p < fsc.sets.size(); ++p) {
    if (fsc.sets[p].size() != target) continue;
    FinFunction proj1{p, a.value, {}};
    FinFunction proj2{p, b.value, {}};
    proj1.mapping.resize(target);
    proj2.mapping.resize(target);
    for (size_t k = 0; k < target; ++k) {
      proj1.mapping[k] = static_cast<uint32_t>(k / size_b);
      proj2.mapping[k] = static_cast<uint32_t>(k % size_b);
    }
    return ProductCone{ObjectId(p), fsc.arrow_of(proj1), fsc.arrow_of(proj2)};
  }
  return std::nullopt;
}

std::optional<ExponentialData> canonical_exponential(const FinSetCategory& fsc, ObjectId a, ObjectId b) {
  const size_t size_a = fsc.sets[a.value].size();
  const size_t size_b = fsc.sets[b.value].size();
  const uint64_t target = saturating_pow(size_b, size_a);
  for (uint32_t e = 0; e < fsc.sets.size(); ++e) {
    if (fsc.sets[e].size() != target) continue;
    ObjectId exp_object(e);
    std::optional<ProductCone> cone = canonical_product_cone(fsc, exp_object, a);
    if (!cone.has_value()) continue;
    // eval(phi, x) = phi(x), with element phi of E read as base-|B| digits.
    FinFunction eval{cone->apex.value, b.value, {}};
    const size_t apex_size = fsc.sets[cone->apex.value].size();
    eval.mapping.resize(apex_size);
    for (size_t k = 0; k < apex_size; ++k) {
      const size_t phi = k / size_a;
      const size_t x = k % size_a;
      uint64_t digits = phi;
      uint64_t divisor = saturating_pow(size_b, size_a - 1 - x);
      eval.mapping[k] = static_cast<uint32_t>((digits / divisor) % size_b);
    }
    return ExponentialData{exp_object, fsc.arrow_of(eval), *cone};
  }
  return std::nullopt;
}

}  // namespace catforge
