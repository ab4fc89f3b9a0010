#include "tsg/digraph.hpp"

#include <algorithm>
#include <sstream>

namespace tsg {

std::size_t Digraph::arc_count() const noexcept {
  std::size_t n = 0;
  for (const auto& row : out) n += row.size();
  return n;
}

bool Digraph::has_arc(element_t from, element_t to) const {
  const auto& row = out.at(from);
  return std::binary_search(row.begin(), row.end(), to);
}

Digraph Digraph::from_out(Adjacency out) {
  Digraph d;
  d.in.assign(out.size(), {});
  for (auto& row : out) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  for (element_t v = 0; v < static_cast<element_t>(out.size()); ++v)
    for (element_t w : out[v]) d.in[w].push_back(v);
  d.out = std::move(out);
  return d;
}

Digraph Digraph::induced(const std::vector<element_t>& vertices) const {
  std::vector<element_t> local(out.size(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<element_t>(i);
  Adjacency sub(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (element_t w : out[vertices[i]])
      if (local[w] >= 0) sub[i].push_back(local[w]);
  return from_out(std::move(sub));
}

const char* arc_source_name(ArcSource source) noexcept {
  switch (source) {
    case ArcSource::two_sided: return "two_sided";
    case ArcSource::pair_set: return "pair_set";
    case ArcSource::cayley: return "cayley";
  }
  return "unknown";
}

TwoSidedDigraph::TwoSidedDigraph(FiniteGroup group, ArcSource source, std::string description, Digraph graph)
    : group_(std::move(group)), source_(source), description_(std::move(description)), graph_(std::move(graph)) {}

std::string subset_text(const ElementSubset& s) {
  std::string out = "{";
  bool first = true;
  for (element_t x : s) {
    if (!first) out += ",";
    out += s.group().label(x);
    first = false;
  }
  return out + "}";
}

namespace {

void require_same_group(const ElementSubset& a, const ElementSubset& b) {
  if (!(a.group() == b.group())) throw error(errc::invalid_parameter, "subsets belong to different groups");
}

}  // namespace

TwoSidedDigraph build_two_sided(const ElementSubset& left, const ElementSubset& right) {
  require_same_group(left, right);
  const FiniteGroup& g = left.group();
  Adjacency out(g.order());
  for (element_t v = 0; v < g.order(); ++v) {
    auto& row = out[v];
    row.reserve(left.size() * right.size());
    for (element_t l : left) {
      const element_t lv = g.mul(g.inv(l), v);
      for (element_t r : right) row.push_back(g.mul(lv, r));
    }
  }
  return TwoSidedDigraph(g, ArcSource::two_sided,
                         "2S(" + g.name() + ";" + subset_text(left) + "," + subset_text(right) + ")",
                         Digraph::from_out(std::move(out)));
}

std::vector<ElementPair> cartesian_pairs(const ElementSubset& left, const ElementSubset& right) {
  std::vector<ElementPair> pairs;
  for (element_t l : left)
    for (element_t r : right) pairs.emplace_back(l, r);
  return pairs;
}

TwoSidedDigraph build_generalized(const FiniteGroup& g, const std::vector<ElementPair>& pairs) {
  if (pairs.empty()) throw error(errc::invalid_parameter, "pair set U must be nonempty");
  for (const auto& [a, b] : pairs)
    if (!g.contains(a) || !g.contains(b)) throw error(errc::invalid_parameter, "pair element outside " + g.name());
  Adjacency out(g.order());
  for (element_t v = 0; v < g.order(); ++v)
    for (const auto& [a, b] : pairs) out[v].push_back(g.mul(g.mul(g.inv(a), v), b));
  std::string desc = "2S(" + g.name() + ";{";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) desc += ",";
    desc += "(" + g.label(pairs[i].first) + "," + g.label(pairs[i].second) + ")";
  }
  return TwoSidedDigraph(g, ArcSource::pair_set, desc + "})", Digraph::from_out(std::move(out)));
}

TwoSidedDigraph build_cayley(const ElementSubset& s) {
  const FiniteGroup& g = s.group();
  Adjacency out(g.order());
  for (element_t v = 0; v < g.order(); ++v)
    for (element_t x : s) out[v].push_back(g.mul(v, x));
  return TwoSidedDigraph(g, ArcSource::cayley, "Cay(" + g.name() + "," + subset_text(s) + ")",
                         Digraph::from_out(std::move(out)));
}

ValencyProfile valency_profile(const TwoSidedDigraph& d) {
  ValencyProfile p;
  for (const auto& row : d.out_adj()) p.out_valencies.push_back(static_cast<int>(row.size()));
  for (const auto& row : d.in_adj()) p.in_valencies.push_back(static_cast<int>(row.size()));
  auto constant = [](const std::vector<int>& v) -> std::optional<int> {
    if (v.empty() || std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) != v.end()) return std::nullopt;
    return v.front();
  };
  p.out_constant = constant(p.out_valencies);
  p.in_constant = constant(p.in_valencies);
  p.regular = p.out_constant && p.in_constant && *p.out_constant == *p.in_constant;
  return p;
}

namespace {

std::vector<element_t> sided_set(const FiniteGroup& g, const ElementSubset& left, element_t v,
                                 const ElementSubset& right, bool invert_left) {
  std::vector<bool> hit(g.order(), false);
  for (element_t l : left) {
    const element_t lv = g.mul(invert_left ? g.inv(l) : l, v);
    for (element_t r : right) hit[g.mul(lv, invert_left ? r : g.inv(r))] = true;
  }
  std::vector<element_t> out;
  for (element_t x = 0; x < g.order(); ++x)
    if (hit[x]) out.push_back(x);
  return out;
}

}  // namespace

bool is_undirected(const ElementSubset& left, const ElementSubset& right) {
  require_same_group(left, right);
  const FiniteGroup& g = left.group();
  bool by_sets = true;
  for (element_t v = 0; v < g.order() && by_sets; ++v)
    by_sets = sided_set(g, left, v, right, true) == sided_set(g, left, v, right, false);

  const TwoSidedDigraph d = build_two_sided(left, right);
  bool symmetric = true;
  for (element_t v = 0; v < g.order() && symmetric; ++v)
    symmetric = d.out_adj()[v] == d.in_adj()[v];
  if (by_sets != symmetric)
    throw error(errc::internal_inconsistency, "undirectedness set test disagrees with arc symmetry");
  return by_sets;
}

std::map<element_t, int> arc_multiset(const ElementSubset& left, const ElementSubset& right, element_t v) {
  require_same_group(left, right);
  const FiniteGroup& g = left.group();
  std::map<element_t, int> counts;
  for (element_t l : left)
    for (element_t r : right) ++counts[g.mul(g.mul(g.inv(l), v), r)];
  return counts;
}

ElementSubset valency_obstruction(const ElementSubset& left, const ElementSubset& right, element_t v) {
  require_same_group(left, right);
  const FiniteGroup& g = left.group();
  std::vector<bool> conj_ll(g.order(), false);
  const element_t vi = g.inv(v);
  for (element_t a : left)
    for (element_t b : left) conj_ll[g.mul(g.mul(vi, g.mul(a, g.inv(b))), v)] = true;
  std::vector<element_t> out;
  for (element_t a : right)
    for (element_t b : right) {
      const element_t x = g.mul(a, g.inv(b));
      if (conj_ll[x]) out.push_back(x);
    }
  return ElementSubset(g, std::move(out));  // always contains e
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const TwoSidedDigraph& d) {
  const FiniteGroup& g = d.group();
  std::ostringstream os;
  os << "digraph \"" << dot_escape(d.description()) << "\" {\n";
  for (element_t v = 0; v < g.order(); ++v) os << "  " << v << " [label=\"" << dot_escape(g.label(v)) << "\"];\n";
  const Digraph& graph = d.graph();
  for (element_t v = 0; v < g.order(); ++v) {
    for (element_t w : graph.out[v]) {
      const bool paired = v != w && graph.has_arc(w, v);
      if (paired && w < v) continue;
      os << "  " << v << " -> " << w;
      if (paired) os << " [dir=none]";
      os << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace tsg
