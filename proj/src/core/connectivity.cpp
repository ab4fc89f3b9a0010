#include "tsg/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <tuple>

namespace tsg {

namespace {

void normalize(Partition& p) {
  for (auto& c : p) std::sort(c.begin(), c.end());
  std::sort(p.begin(), p.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

}  // namespace

// Iterative Tarjan.
Partition strong_components(const Digraph& d) {
  const int n = d.vertex_count();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<element_t> stack;
  std::vector<std::pair<element_t, std::size_t>> call;  // (vertex, next successor slot)
  Partition out;
  int counter = 0;

  for (element_t root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, slot] = call.back();
      const auto& succ = d.out[v];
      if (slot < succ.size()) {
        const element_t w = succ[slot++];
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const element_t done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        std::vector<element_t> comp;
        element_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != done);
        out.push_back(std::move(comp));
      }
    }
  }
  normalize(out);
  return out;
}

Partition weak_components(const Digraph& d) {
  const int n = d.vertex_count();
  DisjointSets sets(n);
  for (element_t v = 0; v < n; ++v)
    for (element_t w : d.out[v]) sets.unite(v, w);
  std::map<int, std::vector<element_t>> groups;
  for (element_t v = 0; v < n; ++v) groups[sets.find(v)].push_back(v);
  Partition out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  normalize(out);
  return out;
}

std::vector<int> component_index(const Partition& p, int vertex_count) {
  std::vector<int> of(vertex_count, -1);
  for (std::size_t c = 0; c < p.size(); ++c)
    for (element_t v : p[c]) of[v] = static_cast<int>(c);
  return of;
}

std::vector<bool> reachable_from(const Digraph& d, element_t from) {
  std::vector<bool> seen(d.vertex_count(), false);
  std::deque<element_t> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    const element_t v = queue.front();
    queue.pop_front();
    for (element_t w : d.out[v]) {
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

ComponentAnalysis analyze_components(const Digraph& d, bool with_iso_classes) {
  ComponentAnalysis a;
  const int n = d.vertex_count();
  a.strong = strong_components(d);
  a.weak = weak_components(d);
  a.strong_of = component_index(a.strong, n);
  a.weak_of = component_index(a.weak, n);
  for (const auto& c : a.strong) a.strong_sizes.push_back(static_cast<int>(c.size()));
  for (const auto& c : a.weak) a.weak_sizes.push_back(static_cast<int>(c.size()));

  const bool small = std::all_of(a.strong.begin(), a.strong.end(),
                                 [](const auto& c) { return static_cast<int>(c.size()) <= kMaxIsomorphismVertices; });
  if (with_iso_classes && small) {
    std::vector<Digraph> induced;
    for (const auto& c : a.strong) induced.push_back(d.induced(c));
    for (int c = 0; c < static_cast<int>(a.strong.size()); ++c) {
      bool placed = false;
      for (auto& cls : a.iso_classes) {
        if (digraphs_isomorphic(induced[cls.front()], induced[c])) {
          cls.push_back(c);
          placed = true;
          break;
        }
      }
      if (!placed) a.iso_classes.push_back({c});
    }
    a.iso_classes_computed = true;
  }
  return a;
}

namespace {

// Colour refinement over the disjoint union of both digraphs; colours are
// comparable across the two graphs.
std::vector<int> refine_colors(const Digraph& a, const Digraph& b) {
  const int na = a.vertex_count();
  const int n = na + b.vertex_count();
  auto out_of = [&](int v) -> const std::vector<element_t>& { return v < na ? a.out[v] : b.out[v - na]; };
  auto in_of = [&](int v) -> const std::vector<element_t>& { return v < na ? a.in[v] : b.in[v - na]; };
  auto global = [&](int v, element_t local) { return v < na ? local : local + na; };

  std::vector<int> color(n);
  {
    std::map<std::tuple<int, int, bool>, int> ids;
    for (int v = 0; v < n; ++v) {
      const element_t local = v < na ? v : v - na;
      const auto& o = out_of(v);
      auto key = std::make_tuple(static_cast<int>(o.size()), static_cast<int>(in_of(v).size()),
                                 std::binary_search(o.begin(), o.end(), local));
      color[v] = ids.emplace(key, static_cast<int>(ids.size())).first->second;
    }
  }
  std::size_t classes = 0;
  while (true) {
    std::map<std::tuple<int, std::vector<int>, std::vector<int>>, int> ids;
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> oc, ic;
      for (element_t w : out_of(v)) oc.push_back(color[global(v, w)]);
      for (element_t w : in_of(v)) ic.push_back(color[global(v, w)]);
      std::sort(oc.begin(), oc.end());
      std::sort(ic.begin(), ic.end());
      next[v] = ids.emplace(std::make_tuple(color[v], std::move(oc), std::move(ic)), static_cast<int>(ids.size()))
                    .first->second;
    }
    color = std::move(next);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return color;
}

struct Matcher {
  int n;
  std::vector<std::vector<bool>> arc_a, arc_b;
  std::vector<int> color_a, color_b;
  std::vector<element_t> order;  // vertices of a in matching order
  std::vector<element_t> map;    // a -> b
  std::vector<bool> used;

  bool consistent(element_t va, element_t vb, std::size_t depth) const {
    if (arc_a[va][va] != arc_b[vb][vb]) return false;
    for (std::size_t i = 0; i < depth; ++i) {
      const element_t ua = order[i], ub = map[ua];
      if (arc_a[va][ua] != arc_b[vb][ub] || arc_a[ua][va] != arc_b[ub][vb]) return false;
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == order.size()) return true;
    const element_t va = order[depth];
    for (element_t vb = 0; vb < n; ++vb) {
      if (used[vb] || color_b[vb] != color_a[va] || !consistent(va, vb, depth)) continue;
      map[va] = vb;
      used[vb] = true;
      if (search(depth + 1)) return true;
      used[vb] = false;
    }
    map[va] = -1;
    return false;
  }
};

std::vector<std::vector<bool>> arc_matrix(const Digraph& d) {
  std::vector<std::vector<bool>> m(d.vertex_count(), std::vector<bool>(d.vertex_count(), false));
  for (element_t v = 0; v < d.vertex_count(); ++v)
    for (element_t w : d.out[v]) m[v][w] = true;
  return m;
}

}  // namespace

bool digraphs_isomorphic(const Digraph& a, const Digraph& b) {
  if (a.vertex_count() > kMaxIsomorphismVertices || b.vertex_count() > kMaxIsomorphismVertices)
    throw error(errc::capability, "digraphs_isomorphic supports at most " +
                                      std::to_string(kMaxIsomorphismVertices) + " vertices");
  if (a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count()) return false;
  const int n = a.vertex_count();
  if (n == 0) return true;

  const std::vector<int> colors = refine_colors(a, b);
  Matcher m;
  m.n = n;
  m.color_a.assign(colors.begin(), colors.begin() + n);
  m.color_b.assign(colors.begin() + n, colors.end());
  {
    auto ha = m.color_a, hb = m.color_b;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return false;
  }
  m.arc_a = arc_matrix(a);
  m.arc_b = arc_matrix(b);

  // Breadth-first order over the underlying graph, seeded at the rarest colour.
  std::map<int, int> frequency;
  for (int c : m.color_a) ++frequency[c];
  std::vector<element_t> seeds(n);
  std::iota(seeds.begin(), seeds.end(), 0);
  std::stable_sort(seeds.begin(), seeds.end(),
                   [&](element_t x, element_t y) { return frequency[m.color_a[x]] < frequency[m.color_a[y]]; });
  std::vector<bool> queued(n, false);
  for (element_t s : seeds) {
    if (queued[s]) continue;
    std::deque<element_t> queue{s};
    queued[s] = true;
    while (!queue.empty()) {
      const element_t v = queue.front();
      queue.pop_front();
      m.order.push_back(v);
      for (const auto* row : {&a.out[v], &a.in[v]})
        for (element_t w : *row)
          if (!queued[w]) {
            queued[w] = true;
            queue.push_back(w);
          }
    }
  }
  m.map.assign(n, -1);
  m.used.assign(n, false);
  return m.search(0);
}

}  // namespace tsg
