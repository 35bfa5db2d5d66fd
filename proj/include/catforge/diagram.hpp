#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "catforge/category.hpp"

namespace catforge {

struct DiagramNode {
  std::string name;
  ObjectId object;
};

struct DiagramEdge {
  uint32_t src;
  uint32_t dst;
  ArrowId arrow;
};

/// A directed multigraph labeled by objects and arrows of one category. The
/// same object or arrow may label several nodes or edges.
struct Diagram {
  CatPtr category;
  std::vector<DiagramNode> nodes;
  std::vector<DiagramEdge> edges;
};

/// Validates edge typing: each edge's arrow must run from the source node's
/// object to the target node's object. Throws StructuralError naming the
/// offending edge.
Diagram build_diagram(CatPtr category, std::vector<DiagramNode> nodes, std::vector<DiagramEdge> edges);

struct PathComposite {
  std::vector<uint32_t> edges;  // empty = the identity path (src == dst)
  ArrowId composite;
};

// Paths are capped at `max length = edge count` by default so cyclic diagrams
// terminate; identity self-loop edges never change a composite and are
// skipped. Pass strict_acyclic to demand an acyclic diagram instead: a
// directed cycle then raises CycleError.
struct PathOptions {
  std::optional<size_t> max_length;  // nullopt = edge count
  bool strict_acyclic = false;
};

/// Composite arrow of every directed path src -> dst, in canonical order
/// (shorter paths first, then lexicographic on edge indices). The empty path
/// at src == dst contributes the identity arrow.
std::vector<PathComposite> enumerate_path_composites(const Diagram& diagram, uint32_t src, uint32_t dst,
                                                     PathOptions options = {});

struct PathConflict {
  uint32_t src;
  uint32_t dst;
  PathComposite left;
  PathComposite right;
};

struct CommutativityReport {
  std::vector<PathConflict> conflicts;
  bool commutes() const { return conflicts.empty(); }
};

/// A diagram commutes when, for every ordered node pair, all path composites
/// agree. Conflicts carry the two minimal disagreeing paths.
CommutativityReport check_commutes(const Diagram& diagram, PathOptions options = {});

}  // namespace catforge
