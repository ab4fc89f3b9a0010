#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tsg/group.hpp"

namespace tsg {

using Adjacency = std::vector<std::vector<element_t>>;
using ElementPair = std::pair<element_t, element_t>;

// Plain digraph on 0..n-1 with sorted, duplicate-free adjacency lists.
// Connectivity and isomorphism work on this form.
struct Digraph {
  Adjacency out;
  Adjacency in;

  int vertex_count() const noexcept { return static_cast<int>(out.size()); }
  std::size_t arc_count() const noexcept;
  bool has_arc(element_t from, element_t to) const;

  // Builds in-adjacency as the transpose of `out` after sorting it.
  static Digraph from_out(Adjacency out);
  // Induced subdigraph on `vertices`, renumbered in the given order.
  Digraph induced(const std::vector<element_t>& vertices) const;
};

enum class ArcSource { two_sided, pair_set, cayley };
const char* arc_source_name(ArcSource source) noexcept;

/// Digraph whose vertices are the elements of a finite group.
///
/// two_sided: g -> l^-1 g r for l in L, r in R.
/// pair_set:  g -> a^-1 g b for (a, b) in U.
/// cayley:    g -> g s for s in S.
class TwoSidedDigraph {
 public:
  TwoSidedDigraph(FiniteGroup group, ArcSource source, std::string description, Digraph graph);

  const FiniteGroup& group() const noexcept { return group_; }
  ArcSource source() const noexcept { return source_; }
  // e.g. "2S(A4;{e,(243)},{...})"
  const std::string& description() const noexcept { return description_; }
  const Digraph& graph() const noexcept { return graph_; }
  const Adjacency& out_adj() const noexcept { return graph_.out; }
  const Adjacency& in_adj() const noexcept { return graph_.in; }
  std::size_t arc_count() const noexcept { return graph_.arc_count(); }

 private:
  FiniteGroup group_;
  ArcSource source_;
  std::string description_;
  Digraph graph_;
};

struct ValencyProfile {
  std::vector<int> out_valencies;
  std::vector<int> in_valencies;
  std::optional<int> out_constant;
  std::optional<int> in_constant;
  bool regular = false;
};

TwoSidedDigraph build_two_sided(const ElementSubset& left, const ElementSubset& right);
TwoSidedDigraph build_generalized(const FiniteGroup& group, const std::vector<ElementPair>& pairs);
TwoSidedDigraph build_cayley(const ElementSubset& connection_set);

// All pairs (l, r) with l in left and r in right.
std::vector<ElementPair> cartesian_pairs(const ElementSubset& left, const ElementSubset& right);

ValencyProfile valency_profile(const TwoSidedDigraph& d);

// True iff L^-1 g R == L g R^-1 for every g. Throws internal_inconsistency if
// that disagrees with symmetry of the built arc relation.
bool is_undirected(const ElementSubset& left, const ElementSubset& right);

// Multiset L^-1 g R: element -> number of (l, r) pairs producing it.
std::map<element_t, int> arc_multiset(const ElementSubset& left, const ElementSubset& right, element_t g);

// g^-1 (L L^-1) g  intersected with  R R^-1.
ElementSubset valency_obstruction(const ElementSubset& left, const ElementSubset& right, element_t g);

// Deterministic Graphviz output. Arcs present in both directions are emitted
// once with dir=none; loops are kept.
std::string to_dot(const TwoSidedDigraph& d);

std::string subset_text(const ElementSubset& s);

}  // namespace tsg
