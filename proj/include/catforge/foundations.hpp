#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "catforge/finset.hpp"
#include "catforge/universal.hpp"

namespace catforge {

/// A hereditarily finite set in canonical form: children sorted and
/// deduplicated, so structural equality is extensional equality.
class HFSet {
 public:
  HFSet() = default;  // the empty set
  static HFSet of(std::vector<HFSet> children);

  const std::vector<HFSet>& children() const { return children_; }
  bool empty() const { return children_.empty(); }
  size_t rank() const;  // rank of {} is 0; rank of x is 1 + max child rank
  bool contains(const HFSet& x) const;

  HFSet power_set() const;
  static HFSet pair_of(const HFSet& x, const HFSet& y);  // {x,y}
  static HFSet union_of(const std::vector<HFSet>& sets);

  /// Nested-braces notation, e.g. "{{},{{}}}". Whitespace allowed.
  static HFSet parse(std::string_view text);
  std::string to_string() const;

  auto operator<=>(const HFSet& other) const { return children_ <=> other.children_; }
  bool operator==(const HFSet& other) const { return children_ == other.children_; }

 private:
  std::vector<HFSet> children_;
};

struct AxiomResult {
  bool pass = true;
  std::vector<HFSet> witness;  // elements demonstrating the failure

  std::string describe() const;
};

/// Closure checks of Def.-style universe axioms over a finite collection.
struct UniverseReport {
  AxiomResult pairing;        // x,y in U  =>  {x,y} in U
  AxiomResult transitivity;   // x in U, y in x  =>  y in U
  AxiomResult power_set;      // x in U  =>  P(x) in U
  AxiomResult indexed_union;  // I in U, family I -> U  =>  union of family in U

  bool all_pass() const {
    return pairing.pass && transitivity.pass && power_set.pass && indexed_union.pass;
  }
};

/// U is deduplicated by extensional equality first. Families for the
/// indexed-union axiom are all functions from the elements of some I in U to
/// U; the scan is exponential in |I| and guarded by `rank_cap` on element
/// ranks (CapExceeded beyond it).
UniverseReport check_universe_axioms(std::vector<HFSet> u, size_t rank_cap = 4);

/// phi is point-surjective when every point q : 1 -> cod(phi) factors as
/// phi . p through some point p : 1 -> dom(phi).
bool check_point_surjective(const FinCategory& cat, ObjectId terminal, ArrowId phi);

struct PointSurjection {
  ObjectId a;
  ObjectId b;
  ArrowId phi;  // a point-surjective arrow A -> B^A
};

struct FixedPointEntry {
  ArrowId phi;
  ArrowId g;           // endomorphism of B
  ArrowId fixed_point; // point b : 1 -> B with g . b = b
};

struct FixedPointReport {
  std::vector<PointSurjection> point_surjections;
  std::vector<FixedPointEntry> fixed_point_witnesses;
  std::vector<std::pair<ArrowId, ArrowId>> violations;  // (phi, g) without a fixed point

  bool ok() const { return violations.empty(); }
};

/// Sweeps every exponential-table entry (A,B): for each point-surjective
/// phi : A -> B^A and every g : B -> B, finds a point of B fixed by g.
/// Violations must be empty; that is the fixed-point theorem. Requires a
/// terminal object in the report (PreconditionError otherwise).
FixedPointReport lawvere_fixed_point_check(const FinCategory& cat, const CCCReport& ccc,
                                           ExecMode mode = default_exec_mode());
FixedPointReport lawvere_fixed_point_check_serial(const FinCategory& cat, const CCCReport& ccc);
FixedPointReport lawvere_fixed_point_check_parallel(const FinCategory& cat, const CCCReport& ccc);

struct CantorRecord {
  uint64_t points_of_a = 0;          // |A|
  uint64_t points_of_exponential = 0;  // |B|^|A|
  bool impossible = false;           // no point-surjection A -> B^A can exist
};

/// Counting form of the diagonal obstruction: a point-surjection A -> B^A
/// needs |B|^|A| <= |A| and at least one arrow A -> B^A.
CantorRecord cantor_obstruction(const FinSetObject& a, const FinSetObject& b);

}  // namespace catforge
