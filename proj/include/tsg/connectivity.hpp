#pragma once

#include <vector>

#include "tsg/digraph.hpp"

namespace tsg {

// Components are sorted vertex lists, ordered by their minimum vertex.
using Partition = std::vector<std::vector<element_t>>;

Partition strong_components(const Digraph& d);
Partition weak_components(const Digraph& d);

// vertex -> position of its component in `p`.
std::vector<int> component_index(const Partition& p, int vertex_count);

/// Strong and weak partitions of one digraph.
struct ComponentAnalysis {
  Partition strong;
  Partition weak;
  std::vector<int> strong_of;  // vertex -> strong component id
  std::vector<int> weak_of;    // vertex -> weak component id
  std::vector<int> strong_sizes;
  std::vector<int> weak_sizes;
  // Strong component ids grouped into isomorphism classes. Only filled when
  // every strong component is within the isomorphism size guard.
  std::vector<std::vector<int>> iso_classes;
  bool iso_classes_computed = false;

  int component_of(element_t v) const { return strong_of.at(v); }
  bool is_strongly_connected() const noexcept { return strong.size() == 1; }
  bool is_weakly_connected() const noexcept { return weak.size() == 1; }
};

ComponentAnalysis analyze_components(const Digraph& d, bool with_iso_classes = true);

// Largest vertex count accepted by digraphs_isomorphic.
inline constexpr int kMaxIsomorphismVertices = 64;

// Arc-preserving bijection search between two small digraphs (loops count as
// arcs). Throws errc::capability above kMaxIsomorphismVertices.
bool digraphs_isomorphic(const Digraph& a, const Digraph& b);

// Vertices reachable from `from` along directed arcs, including `from`.
std::vector<bool> reachable_from(const Digraph& d, element_t from);

}  // namespace tsg
