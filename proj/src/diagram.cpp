#include "catforge/diagram.hpp"

#include <algorithm>

namespace catforge {

namespace {

bool skip_edge(const Diagram& d, const DiagramEdge& e) {
  // Identity self-loops contribute nothing to any composite.
  return e.src == e.dst && d.category->is_identity(e.arrow);
}

// Detects a directed cycle among non-skipped edges.
bool has_cycle(const Diagram& d) {
  const size_t n = d.nodes.size();
  std::vector<std::vector<uint32_t>> out(n);
  for (size_t i = 0; i < d.edges.size(); ++i) {
    if (!skip_edge(d, d.edges[i])) out[d.edges[i].src].push_back(d.edges[i].dst);
  }
  std::vector<int> state(n, 0);  // 0 unvisited, 1 on stack, 2 done
  std::vector<std::pair<uint32_t, size_t>> stack;
  for (uint32_t start = 0; start < n; ++start) {
    if (state[start] != 0) continue;
    stack.push_back({start, 0});
    state[start] = 1;
    while (!stack.empty()) {
      auto& [node, idx] = stack.back();
      if (idx < out[node].size()) {
        uint32_t next = out[node][idx++];
        if (state[next] == 1) return true;
        if (state[next] == 0) {
          state[next] = 1;
          stack.push_back({next, 0});
        }
      } else {
        state[node] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

}  // namespace

Diagram build_diagram(CatPtr category, std::vector<DiagramNode> nodes, std::vector<DiagramEdge> edges) {
  if (!category) throw StructuralError("build_diagram: null category");
  for (const DiagramNode& node : nodes) {
    if (node.object.value >= category->object_count()) {
      throw StructuralError("node '" + node.name + "' labels an unknown object");
    }
  }
  for (size_t i = 0; i < edges.size(); ++i) {
    const DiagramEdge& e = edges[i];
    if (e.src >= nodes.size() || e.dst >= nodes.size()) {
      throw StructuralError("edge #" + std::to_string(i) + " references an unknown node");
    }
    if (e.arrow.value >= category->arrow_count()) {
      throw StructuralError("edge #" + std::to_string(i) + " labels an unknown arrow");
    }
    const ArrowRecord& rec = category->arrow(e.arrow);
    if (rec.dom != nodes[e.src].object || rec.cod != nodes[e.dst].object) {
      throw StructuralError("edge '" + rec.name + "' from node '" + nodes[e.src].name + "' to '" +
                            nodes[e.dst].name + "' does not match the arrow's dom/cod");
    }
  }
  return Diagram{std::move(category), std::move(nodes), std::move(edges)};
}

std::vector<PathComposite> enumerate_path_composites(const Diagram& diagram, uint32_t src, uint32_t dst,
                                                     PathOptions options) {
  if (src >= diagram.nodes.size() || dst >= diagram.nodes.size()) {
    throw StructuralError("enumerate_path_composites: node out of range");
  }
  if (options.strict_acyclic && has_cycle(diagram)) {
    throw CycleError("diagram contains a directed cycle and no path-length cap was supplied");
  }
  const size_t cap = options.max_length.value_or(diagram.edges.size());

  std::vector<std::vector<uint32_t>> out(diagram.nodes.size());
  for (uint32_t i = 0; i < diagram.edges.size(); ++i) {
    if (!skip_edge(diagram, diagram.edges[i])) out[diagram.edges[i].src].push_back(i);
  }

  std::vector<PathComposite> result;
  if (src == dst) {
    result.push_back(PathComposite{{}, diagram.category->identity(diagram.nodes[src].object)});
  }

  // DFS over edge sequences; composite folded along the way.
  struct Frame {
    uint32_t node;
    size_t next;
    ArrowId composite;
  };
  std::vector<uint32_t> path;
  std::vector<Frame> stack;
  stack.push_back({src, 0, kNoArrow});
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next >= out[top.node].size() || path.size() >= cap) {
      stack.pop_back();
      if (!path.empty()) path.pop_back();
      continue;
    }
    uint32_t edge_idx = out[top.node][top.next++];
    const DiagramEdge& e = diagram.edges[edge_idx];
    ArrowId composite = top.composite.valid() ? compose(*diagram.category, e.arrow, top.composite) : e.arrow;
    path.push_back(edge_idx);
    if (e.dst == dst) result.push_back(PathComposite{path, composite});
    stack.push_back({e.dst, 0, composite});
  }

  std::sort(result.begin(), result.end(), [](const PathComposite& a, const PathComposite& b) {
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    return a.edges < b.edges;
  });
  return result;
}

CommutativityReport check_commutes(const Diagram& diagram, PathOptions options) {
  CommutativityReport report;
  for (uint32_t src = 0; src < diagram.nodes.size(); ++src) {
    for (uint32_t dst = 0; dst < diagram.nodes.size(); ++dst) {
      auto composites = enumerate_path_composites(diagram, src, dst, options);
      if (composites.size() < 2) continue;  // fewer than two paths: trivially path independent
      const PathComposite& first = composites.front();
      for (size_t i = 1; i < composites.size(); ++i) {
        if (composites[i].composite != first.composite) {
          report.conflicts.push_back(PathConflict{src, dst, first, composites[i]});
          break;  // minimal witness per node pair
        }
      }
    }
  }
  return report;
}

}  // namespace catforge
