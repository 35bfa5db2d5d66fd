#include "catforge/foundations.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace catforge {

// -- HFSet -------------------------------------------------------------------

HFSet HFSet::of(std::vector<HFSet> children) {
  HFSet out;
  std::sort(children.begin(), children.end());
  children.erase(std::unique(children.begin(), children.end()), children.end());
  out.children_ = std::move(children);
  return out;
}

size_t HFSet::rank() const {
  size_t r = 0;
  for (const HFSet& child : children_) r = std::max(r, child.rank() + 1);
  return r;
}

bool HFSet::contains(const HFSet& x) const {
  return std::binary_search(children_.begin(), children_.end(), x);
}

HFSet HFSet::power_set() const {
  const size_t n = children_.size();
  if (n > 20) throw CapExceeded("power_set: set too large");
  std::vector<HFSet> subsets;
  subsets.reserve(size_t{1} << n);
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    std::vector<HFSet> members;
    for (size_t i = 0; i < n; ++i) {
      if (mask & (uint64_t{1} << i)) members.push_back(children_[i]);
    }
    subsets.push_back(HFSet::of(std::move(members)));
  }
  return HFSet::of(std::move(subsets));
}

HFSet HFSet::pair_of(const HFSet& x, const HFSet& y) { return HFSet::of({x, y}); }

HFSet HFSet::union_of(const std::vector<HFSet>& sets) {
  std::vector<HFSet> members;
  for (const HFSet& s : sets) {
    members.insert(members.end(), s.children().begin(), s.children().end());
  }
  return HFSet::of(std::move(members));
}

namespace {

HFSet parse_hfset(std::string_view text, size_t& pos) {
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
                                 text[pos] == '\r')) {
      ++pos;
    }
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '{') {
    throw StructuralError("hfset: expected '{' at offset " + std::to_string(pos));
  }
  ++pos;
  std::vector<HFSet> children;
  skip_ws();
  if (pos < text.size() && text[pos] == '}') {
    ++pos;
    return HFSet{};
  }
  while (true) {
    children.push_back(parse_hfset(text, pos));
    skip_ws();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < text.size() && text[pos] == '}') {
      ++pos;
      return HFSet::of(std::move(children));
    }
    throw StructuralError("hfset: expected ',' or '}' at offset " + std::to_string(pos));
  }
}

}  // namespace

HFSet HFSet::parse(std::string_view text) {
  size_t pos = 0;
  HFSet out = parse_hfset(text, pos);
  while (pos < text.size()) {
    char c = text[pos];
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') {
      throw StructuralError("hfset: trailing characters at offset " + std::to_string(pos));
    }
    ++pos;
  }
  return out;
}

std::string HFSet::to_string() const {
  std::string out = "{";
  for (size_t i = 0; i < children_.size(); ++i) {
    if (i > 0) out += ",";
    out += children_[i].to_string();
  }
  out += "}";
  return out;
}

std::string AxiomResult::describe() const {
  if (pass) return "pass";
  std::string out = "fail witness";
  for (const HFSet& w : witness) out += " " + w.to_string();
  return out;
}

// -- Universe axioms ----------------------------------------------------------

UniverseReport check_universe_axioms(std::vector<HFSet> u, size_t rank_cap) {
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  for (const HFSet& x : u) {
    if (x.rank() > rank_cap) {
      throw CapExceeded("check_universe_axioms: element of rank " + std::to_string(x.rank()) +
                        " exceeds rank cap " + std::to_string(rank_cap));
    }
  }
  auto member = [&](const HFSet& x) { return std::binary_search(u.begin(), u.end(), x); };

  UniverseReport report;

  for (const HFSet& x : u) {
    for (const HFSet& y : u) {
      if (!member(HFSet::pair_of(x, y))) {
        report.pairing = AxiomResult{false, {x, y}};
        goto pairing_done;
      }
    }
  }
pairing_done:

  for (const HFSet& x : u) {
    for (const HFSet& y : x.children()) {
      if (!member(y)) {
        report.transitivity = AxiomResult{false, {x, y}};
        goto transitivity_done;
      }
    }
  }
transitivity_done:

  for (const HFSet& x : u) {
    if (!member(x.power_set())) {
      report.power_set = AxiomResult{false, {x}};
      break;
    }
  }

  // Indexed union: for every I in U and every function from the elements of I
  // to U, the union of the image must be in U.
  for (const HFSet& index_set : u) {
    const size_t arity = index_set.children().size();
    std::vector<size_t> choice(arity, 0);
    while (true) {
      std::vector<HFSet> family;
      family.reserve(arity);
      for (size_t i = 0; i < arity; ++i) family.push_back(u[choice[i]]);
      HFSet united = HFSet::union_of(family);
      if (!member(united)) {
        std::vector<HFSet> witness{index_set};
        witness.insert(witness.end(), family.begin(), family.end());
        witness.push_back(united);
        report.indexed_union = AxiomResult{false, std::move(witness)};
        goto union_done;
      }
      // next function, odometer over |U|^arity
      size_t pos = arity;
      while (pos > 0) {
        --pos;
        if (choice[pos] + 1 < u.size()) {
          ++choice[pos];
          std::fill(choice.begin() + static_cast<ptrdiff_t>(pos) + 1, choice.end(), 0);
          break;
        }
        if (pos == 0) {
          pos = SIZE_MAX;
          break;
        }
      }
      if (arity == 0 || pos == SIZE_MAX) break;
    }
  }
union_done:

  return report;
}

// -- Lawvere -------------------------------------------------------------------

bool check_point_surjective(const FinCategory& cat, ObjectId terminal, ArrowId phi) {
  if (!is_terminal(cat, terminal)) {
    throw PreconditionError("check_point_surjective: '" + cat.object_name(terminal) +
                            "' is not terminal");
  }
  ObjectId a = cat.dom(phi);
  ObjectId b = cat.cod(phi);
  for (ArrowId q : cat.hom(terminal, b)) {
    bool factors = false;
    for (ArrowId p : cat.hom(terminal, a)) {
      if (cat.composite(phi, p) == q) {
        factors = true;
        break;
      }
    }
    if (!factors) return false;
  }
  return true;
}

namespace {

struct SweepUnit {
  ObjectId a;
  ObjectId b;
  ArrowId phi;
};

FixedPointReport run_lawvere(const FinCategory& cat, const CCCReport& ccc, bool parallel) {
  if (!ccc.terminal.has_value()) {
    throw PreconditionError("lawvere_fixed_point_check: report has no terminal object");
  }
  ObjectId one = *ccc.terminal;

  // Every arrow A -> B^A over the available exponential entries.
  std::vector<SweepUnit> units;
  const uint32_t n = static_cast<uint32_t>(cat.object_count());
  for (uint32_t ai = 0; ai < n; ++ai) {
    for (uint32_t bi = 0; bi < n; ++bi) {
      const auto& exp = ccc.exponentials.at(ObjectId(ai), ObjectId(bi));
      if (!exp.has_value()) continue;
      for (ArrowId phi : cat.hom(ObjectId(ai), exp->exp_object)) {
        units.push_back(SweepUnit{ObjectId(ai), ObjectId(bi), phi});
      }
    }
  }

  std::vector<FixedPointReport> partial(parallel ? static_cast<size_t>(worker_count()) : 1);
  auto process = [&](size_t bucket, const SweepUnit& unit) {
    if (!check_point_surjective(cat, one, unit.phi)) return;
    partial[bucket].point_surjections.push_back(PointSurjection{unit.a, unit.b, unit.phi});
    for (ArrowId g : cat.hom(unit.b, unit.b)) {
      ArrowId fixed = kNoArrow;
      for (ArrowId point : cat.hom(one, unit.b)) {
        if (cat.composite(g, point) == point) {
          fixed = point;
          break;
        }
      }
      if (fixed.valid()) {
        partial[bucket].fixed_point_witnesses.push_back(FixedPointEntry{unit.phi, g, fixed});
      } else {
        partial[bucket].violations.push_back({unit.phi, g});
      }
    }
  };

  if (parallel) {
#ifdef _OPENMP
    const int total = static_cast<int>(units.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (int i = 0; i < total; ++i) {
      process(static_cast<size_t>(omp_get_thread_num()), units[static_cast<size_t>(i)]);
    }
#else
    for (const SweepUnit& unit : units) process(0, unit);
#endif
  } else {
    for (const SweepUnit& unit : units) process(0, unit);
  }

  FixedPointReport report;
  for (FixedPointReport& p : partial) {
    report.point_surjections.insert(report.point_surjections.end(), p.point_surjections.begin(),
                                    p.point_surjections.end());
    report.fixed_point_witnesses.insert(report.fixed_point_witnesses.end(),
                                        p.fixed_point_witnesses.begin(), p.fixed_point_witnesses.end());
    report.violations.insert(report.violations.end(), p.violations.begin(), p.violations.end());
  }
  auto by_phi = [](const auto& x, const auto& y) { return std::tie(x.phi, x.g) < std::tie(y.phi, y.g); };
  std::sort(report.fixed_point_witnesses.begin(), report.fixed_point_witnesses.end(), by_phi);
  std::sort(report.point_surjections.begin(), report.point_surjections.end(),
            [](const PointSurjection& x, const PointSurjection& y) { return x.phi < y.phi; });
  std::sort(report.violations.begin(), report.violations.end());
  return report;
}

}  // namespace

FixedPointReport lawvere_fixed_point_check_serial(const FinCategory& cat, const CCCReport& ccc) {
  return run_lawvere(cat, ccc, false);
}

FixedPointReport lawvere_fixed_point_check_parallel(const FinCategory& cat, const CCCReport& ccc) {
  return run_lawvere(cat, ccc, true);
}

FixedPointReport lawvere_fixed_point_check(const FinCategory& cat, const CCCReport& ccc, ExecMode mode) {
  return mode == ExecMode::parallel ? lawvere_fixed_point_check_parallel(cat, ccc)
                                    : lawvere_fixed_point_check_serial(cat, ccc);
}

CantorRecord cantor_obstruction(const FinSetObject& a, const FinSetObject& b) {
  CantorRecord record;
  record.points_of_a = a.size();
  uint64_t exp_size = 1;
  for (size_t i = 0; i < a.size(); ++i) {
    exp_size *= b.size();
    if (exp_size > (uint64_t{1} << 62)) break;
  }
  record.points_of_exponential = exp_size;
  // Impossible when B^A has more points than A, or when there is no arrow
  // A -> B^A at all (empty exponential, nonempty A).
  record.impossible = exp_size > record.points_of_a || (exp_size == 0 && record.points_of_a > 0);
  return record;
}

}  // namespace catforge
