#include "tsg/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace tsg {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::invalid_parameter: return "invalid-parameter";
    case errc::parse_error: return "parse-error";
    case errc::unknown_element: return "unknown-element";
    case errc::not_subgroup: return "not-subgroup";
    case errc::not_normal: return "not-normal";
    case errc::invalid_action: return "invalid-action";
    case errc::capability: return "capability";
    case errc::hypothesis_not_met: return "hypothesis-not-met";
    case errc::missing_retraction: return "missing-retraction";
    case errc::internal_inconsistency: return "internal-inconsistency";
    case errc::io_error: return "io-error";
  }
  return "unknown";
}

namespace {

[[noreturn]] void invalid(const std::string& what) { throw error(errc::invalid_parameter, what); }

void check_table_order(long long order) {
  if (order > kMaxTableOrder) {
    throw error(errc::capability, "group order " + std::to_string(order) +
                                      " exceeds the multiplication-table ceiling of " +
                                      std::to_string(kMaxTableOrder));
  }
}

// Elements reachable from `seeds` by right multiplication with `seeds`,
// without assuming associativity.
std::vector<bool> right_normed_span(int order, std::span<const element_t> table,
                                    const std::vector<element_t>& seeds) {
  std::vector<bool> seen(order, false);
  std::deque<element_t> queue;
  for (element_t s : seeds) {
    if (!seen[s]) {
      seen[s] = true;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    element_t x = queue.front();
    queue.pop_front();
    for (element_t s : seeds) {
      element_t y = table[static_cast<std::size_t>(x) * order + s];
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  return seen;
}

bool associative(int order, std::span<const element_t> table) {
  auto at = [&](element_t a, element_t b) { return table[static_cast<std::size_t>(a) * order + b]; };
  if (order <= kExhaustiveCheckOrder) {
    for (element_t i = 0; i < order; ++i)
      for (element_t j = 0; j < order; ++j)
        for (element_t k = 0; k < order; ++k)
          if (at(at(i, j), k) != at(i, at(j, k))) return false;
    return true;
  }
  // Light's test: the elements g with (xy)g == x(yg) for all x, y are closed
  // under the product, so checking a generating set is exact.
  std::vector<element_t> generators;
  std::vector<bool> spanned(order, false);
  for (element_t g = 0; g < order; ++g) {
    if (spanned[g]) continue;
    generators.push_back(g);
    spanned = right_normed_span(order, table, generators);
  }
  for (element_t g : generators)
    for (element_t x = 0; x < order; ++x)
      for (element_t y = 0; y < order; ++y)
        if (at(at(x, y), g) != at(x, at(y, g))) return false;
  return true;
}

std::string power_label(const std::string& base, int exponent) {
  if (exponent == 1) return base;
  return base + "^" + std::to_string(exponent);
}

std::string cycle_label(const std::vector<int>& image) {
  const int n = static_cast<int>(image.size());
  std::vector<bool> done(n, false);
  std::string out;
  for (int start = 0; start < n; ++start) {
    if (done[start] || image[start] == start) continue;
    out += '(';
    for (int x = start; !done[x]; x = image[x]) {
      done[x] = true;
      out += std::to_string(x + 1);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

bool is_even(const std::vector<int>& image) {
  const int n = static_cast<int>(image.size());
  std::vector<bool> done(n, false);
  int transpositions = 0;
  for (int start = 0; start < n; ++start) {
    if (done[start]) continue;
    int length = 0;
    for (int x = start; !done[x]; x = image[x]) {
      done[x] = true;
      ++length;
    }
    transpositions += length - 1;
  }
  return transpositions % 2 == 0;
}

int factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Lexicographic rank of a permutation of 0..n-1.
int permutation_rank(const std::vector<int>& image) {
  const int n = static_cast<int>(image.size());
  int rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (image[j] < image[i]) ++smaller;
    rank += smaller * factorial(n - 1 - i);
  }
  return rank;
}

FiniteGroup make_permutation_group(int n, bool even_only) {
  if (n < 1 || n > 8) invalid("permutation degree must be in 1..8, got " + std::to_string(n));
  long long order = factorial(n);
  if (even_only && n >= 2) order /= 2;
  check_table_order(order);

  std::vector<std::vector<int>> perms;
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  do {
    if (!even_only || is_even(image)) perms.push_back(image);
  } while (std::next_permutation(image.begin(), image.end()));

  std::vector<element_t> index_of_rank(factorial(n), -1);
  for (std::size_t i = 0; i < perms.size(); ++i)
    index_of_rank[permutation_rank(perms[i])] = static_cast<element_t>(i);

  const int m = static_cast<int>(perms.size());
  std::vector<element_t> table(static_cast<std::size_t>(m) * m);
  std::vector<int> composed(n);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      for (int x = 0; x < n; ++x) composed[x] = perms[a][perms[b][x]];
      table[static_cast<std::size_t>(a) * m + b] = index_of_rank[permutation_rank(composed)];
    }
  }
  std::vector<std::string> labels;
  labels.reserve(m);
  for (const auto& p : perms) labels.push_back(cycle_label(p));

  GroupStructure structure;
  structure.kind = even_only ? GroupKind::alternating : GroupKind::symmetric;
  structure.parameter = n;
  structure.permutations = std::move(perms);
  return FiniteGroup((even_only ? "A" : "S") + std::to_string(n), std::move(labels), std::move(table),
                     std::move(structure));
}

}  // namespace

FiniteGroup::FiniteGroup(std::string name, std::vector<std::string> labels, std::vector<element_t> table,
                         GroupStructure structure) {
  const std::size_t n = labels.size();
  if (n == 0) invalid("group must have at least one element");
  check_table_order(static_cast<long long>(n));
  if (table.size() != n * n) invalid("multiplication table must have order^2 entries");
  const int order = static_cast<int>(n);

  {
    std::set<std::string> distinct(labels.begin(), labels.end());
    if (distinct.size() != n) invalid("element labels must be pairwise distinct");
  }
  for (element_t v : table)
    if (v < 0 || v >= order) invalid("multiplication table entry out of range");

  std::vector<int> seen(n, -1);
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      element_t v = table[static_cast<std::size_t>(i) * n + j];
      if (seen[v] == i) invalid("multiplication table row " + std::to_string(i) + " is not a permutation");
      seen[v] = i;
    }
  }
  std::fill(seen.begin(), seen.end(), -1);
  for (int j = 0; j < order; ++j) {
    for (int i = 0; i < order; ++i) {
      element_t v = table[static_cast<std::size_t>(i) * n + j];
      if (seen[v] == j) invalid("multiplication table column " + std::to_string(j) + " is not a permutation");
      seen[v] = j;
    }
  }

  // In a Latin square, x*x == x only for a two-sided identity candidate.
  element_t identity = -1;
  for (int i = 0; i < order && identity < 0; ++i) {
    bool ok = true;
    for (int j = 0; j < order && ok; ++j)
      ok = table[static_cast<std::size_t>(i) * n + j] == j && table[static_cast<std::size_t>(j) * n + i] == j;
    if (ok) identity = i;
  }
  if (identity < 0) invalid("multiplication table has no identity element");

  std::vector<element_t> inverses(n, -1);
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      if (table[static_cast<std::size_t>(i) * n + j] == identity) {
        if (table[static_cast<std::size_t>(j) * n + i] != identity)
          invalid("element " + labels[i] + " has no two-sided inverse");
        inverses[i] = j;
        break;
      }
    }
  }
  if (!associative(order, table)) invalid("multiplication table is not associative");

  auto data = std::make_shared<Data>();
  data->name = std::move(name);
  data->labels = std::move(labels);
  data->table = std::move(table);
  data->inverses = std::move(inverses);
  data->identity = identity;
  data->structure = std::move(structure);
  data_ = std::move(data);
  order_ = order;
}

element_t FiniteGroup::pow(element_t a, long long n) const noexcept {
  const long long ord = element_order(a);
  long long e = n % ord;
  if (e < 0) e += ord;
  element_t result = identity();
  for (long long i = 0; i < e; ++i) result = mul(result, a);
  return result;
}

int FiniteGroup::element_order(element_t a) const noexcept {
  int k = 1;
  for (element_t x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

std::optional<element_t> FiniteGroup::find(std::string_view label) const {
  const auto& labels = data_->labels;
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<element_t>(it - labels.begin());
}

ElementSubset::ElementSubset(FiniteGroup group, std::vector<element_t> members)
    : group_(std::move(group)), members_(std::move(members)) {
  if (members_.empty()) invalid("element subset must be nonempty");
  for (element_t m : members_)
    if (!group_.contains(m)) invalid("element index " + std::to_string(m) + " is not in group " + group_.name());
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool ElementSubset::contains(element_t a) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), a);
}

std::vector<bool> ElementSubset::mask() const {
  std::vector<bool> m(group_.order(), false);
  for (element_t x : members_) m[x] = true;
  return m;
}

ElementSubset ElementSubset::inverse() const {
  std::vector<element_t> inv;
  inv.reserve(members_.size());
  for (element_t x : members_) inv.push_back(group_.inv(x));
  return ElementSubset(group_, std::move(inv));
}

ElementSubset ElementSubset::whole(const FiniteGroup& group) {
  std::vector<element_t> all(group.order());
  std::iota(all.begin(), all.end(), 0);
  return ElementSubset(group, std::move(all));
}

FiniteGroup make_cyclic(int n) {
  if (n < 1) invalid("cyclic group order must be positive, got " + std::to_string(n));
  check_table_order(n);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(i == 0 ? "e" : power_label("g", i));
  std::vector<element_t> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
  GroupStructure structure;
  structure.kind = GroupKind::cyclic;
  structure.parameter = n;
  return FiniteGroup("C" + std::to_string(n), std::move(labels), std::move(table), std::move(structure));
}

FiniteGroup make_dihedral(int n) {
  if (n < 1) invalid("dihedral rotation order must be positive, got " + std::to_string(n));
  check_table_order(2LL * n);
  // Index i < n is s^i; index n + i is t s^i.
  const int order = 2 * n;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(i == 0 ? "e" : power_label("s", i));
  for (int i = 0; i < n; ++i) labels.push_back(i == 0 ? "t" : "t" + power_label("s", i));
  std::vector<element_t> table(static_cast<std::size_t>(order) * order);
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      int a = x / n, i = x % n, b = y / n, j = y % n;
      // (t^a s^i)(t^b s^j) = t^(a+b) s^((-1)^b i + j)
      int rot = ((b ? -i : i) + j) % n;
      if (rot < 0) rot += n;
      table[static_cast<std::size_t>(x) * order + y] = ((a + b) % 2) * n + rot;
    }
  }
  GroupStructure structure;
  structure.kind = GroupKind::dihedral;
  structure.parameter = n;
  return FiniteGroup("D" + std::to_string(n), std::move(labels), std::move(table), std::move(structure));
}

FiniteGroup make_symmetric(int n) { return make_permutation_group(n, false); }
FiniteGroup make_alternating(int n) { return make_permutation_group(n, true); }

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const long long order = static_cast<long long>(g.order()) * h.order();
  check_table_order(order);
  const int m = h.order();
  std::vector<std::string> labels;
  labels.reserve(order);
  for (element_t a = 0; a < g.order(); ++a)
    for (element_t b = 0; b < m; ++b) labels.push_back("(" + g.label(a) + "," + h.label(b) + ")");
  std::vector<element_t> table(static_cast<std::size_t>(order * order));
  for (element_t x = 0; x < order; ++x)
    for (element_t y = 0; y < order; ++y)
      table[static_cast<std::size_t>(x) * order + y] = g.mul(x / m, y / m) * m + h.mul(x % m, y % m);
  GroupStructure structure;
  structure.kind = GroupKind::direct_product;
  structure.first = std::make_shared<const FiniteGroup>(g);
  structure.second = std::make_shared<const FiniteGroup>(h);
  return FiniteGroup(g.name() + "x" + h.name(), std::move(labels), std::move(table), std::move(structure));
}

FiniteGroup semidirect_product(const FiniteGroup& h, const FiniteGroup& k, const Action& action) {
  auto fail = [](const std::string& axiom, const std::string& detail) -> void {
    throw error(errc::invalid_action, "semidirect action violates " + axiom + ": " + detail);
  };
  const int nh = h.order(), nk = k.order();
  if (static_cast<int>(action.size()) != nk)
    fail("shape", "expected one automorphism per element of " + k.name());
  for (element_t a = 0; a < nk; ++a) {
    const auto& phi = action[a];
    if (static_cast<int>(phi.size()) != nh) fail("shape", "image list for " + k.label(a) + " has wrong length");
    std::vector<bool> hit(nh, false);
    for (element_t x : phi) {
      if (x < 0 || x >= nh || hit[x]) fail("bijection", "action of " + k.label(a) + " is not a permutation");
      hit[x] = true;
    }
    for (element_t x = 0; x < nh; ++x)
      for (element_t y = 0; y < nh; ++y)
        if (phi[h.mul(x, y)] != h.mul(phi[x], phi[y]))
          fail("automorphism", "action of " + k.label(a) + " does not preserve the product " + h.label(x) +
                                   "*" + h.label(y));
  }
  for (element_t x = 0; x < nh; ++x)
    if (action[k.identity()][x] != x) fail("identity", "identity of " + k.name() + " must act trivially");
  for (element_t a = 0; a < nk; ++a)
    for (element_t b = 0; b < nk; ++b)
      for (element_t x = 0; x < nh; ++x)
        if (action[k.mul(a, b)][x] != action[a][action[b][x]])
          fail("homomorphism", "action of " + k.label(a) + "*" + k.label(b) + " differs from the composite");

  const long long order = static_cast<long long>(nh) * nk;
  check_table_order(order);
  std::vector<std::string> labels;
  labels.reserve(order);
  for (element_t x = 0; x < nh; ++x)
    for (element_t a = 0; a < nk; ++a) labels.push_back("(" + h.label(x) + "," + k.label(a) + ")");
  std::vector<element_t> table(static_cast<std::size_t>(order * order));
  for (element_t p = 0; p < order; ++p) {
    const element_t h1 = p / nk, k1 = p % nk;
    for (element_t q = 0; q < order; ++q) {
      const element_t h2 = q / nk, k2 = q % nk;
      table[static_cast<std::size_t>(p) * order + q] = h.mul(h1, action[k1][h2]) * nk + k.mul(k1, k2);
    }
  }
  GroupStructure structure;
  structure.kind = GroupKind::semidirect_product;
  structure.first = std::make_shared<const FiniteGroup>(h);
  structure.second = std::make_shared<const FiniteGroup>(k);
  return FiniteGroup(h.name() + ":" + k.name(), std::move(labels), std::move(table), std::move(structure));
}

bool is_subgroup(const ElementSubset& s) {
  const FiniteGroup& g = s.group();
  if (!s.contains(g.identity())) return false;
  auto mask = s.mask();
  for (element_t a : s)
    for (element_t b : s)
      if (!mask[g.mul(a, b)]) return false;
  return true;
}

bool is_normal_subgroup(const ElementSubset& s) {
  if (!is_subgroup(s)) return false;
  return normalizer(s).size() == static_cast<std::size_t>(s.group().order());
}

Quotient quotient(const FiniteGroup& g, const ElementSubset& n) {
  if (!is_subgroup(n)) throw error(errc::not_subgroup, "quotient: subset is not a subgroup of " + g.name());
  if (!is_normal_subgroup(n)) throw error(errc::not_normal, "quotient: subgroup is not normal in " + g.name());

  std::vector<element_t> projection(g.order(), -1);
  std::vector<element_t> reps;
  for (element_t x = 0; x < g.order(); ++x) {
    if (projection[x] >= 0) continue;
    const auto c = static_cast<element_t>(reps.size());
    reps.push_back(x);
    for (element_t m : n) projection[g.mul(x, m)] = c;
  }
  const int order = static_cast<int>(reps.size());
  std::vector<std::string> labels;
  for (element_t r : reps) labels.push_back("[" + g.label(r) + "]");
  std::vector<element_t> table(static_cast<std::size_t>(order) * order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) table[static_cast<std::size_t>(a) * order + b] = projection[g.mul(reps[a], reps[b])];

  GroupStructure structure;
  structure.kind = GroupKind::quotient;
  structure.first = std::make_shared<const FiniteGroup>(g);
  structure.projection = projection;
  FiniteGroup q(g.name() + "/N", std::move(labels), std::move(table), std::move(structure));
  return Quotient{std::move(q), std::move(projection)};
}

ElementSubset closure(const ElementSubset& s) {
  const FiniteGroup& g = s.group();
  auto seen = right_normed_span(g.order(), g.table(), s.members());
  std::vector<element_t> members;
  for (element_t x = 0; x < g.order(); ++x)
    if (seen[x]) members.push_back(x);
  return ElementSubset(g, std::move(members));
}

ElementSubset normalizer(const ElementSubset& s) {
  const FiniteGroup& g = s.group();
  auto mask = s.mask();
  std::vector<element_t> members;
  for (element_t x = 0; x < g.order(); ++x) {
    const element_t xi = g.inv(x);
    bool stable = true;
    for (element_t a : s) {
      if (!mask[g.mul(g.mul(xi, a), x)]) {
        stable = false;
        break;
      }
    }
    if (stable) members.push_back(x);
  }
  return ElementSubset(g, std::move(members));
}

ElementSubset normal_closure(const ElementSubset& s) {
  const FiniteGroup& g = s.group();
  std::vector<element_t> conjugates;
  for (element_t x = 0; x < g.order(); ++x)
    for (element_t a : s) conjugates.push_back(g.mul(g.mul(g.inv(x), a), x));
  return closure(ElementSubset(g, std::move(conjugates)));
}

std::vector<bool> product_set(const ElementSubset& x, const ElementSubset& y) {
  const FiniteGroup& g = x.group();
  std::vector<bool> out(g.order(), false);
  for (element_t a : x)
    for (element_t b : y) out[g.mul(a, b)] = true;
  return out;
}

DoubleCosetDecomposition double_cosets(const ElementSubset& a, const ElementSubset& b) {
  if (!is_subgroup(a) || !is_subgroup(b)) invalid("double_cosets requires subgroups on both sides");
  const FiniteGroup& g = a.group();
  DoubleCosetDecomposition out{a, b, {}, {}, std::vector<int>(g.order(), -1)};
  for (element_t s = 0; s < g.order(); ++s) {
    if (out.coset_of[s] >= 0) continue;
    const int c = static_cast<int>(out.representatives.size());
    std::vector<element_t> members;
    for (element_t x : a) {
      const element_t xs = g.mul(x, s);
      for (element_t y : b) {
        const element_t v = g.mul(xs, y);
        if (out.coset_of[v] < 0) {
          out.coset_of[v] = c;
          members.push_back(v);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.representatives.push_back(s);
    out.cosets.push_back(std::move(members));
  }
  return out;
}

namespace {

std::map<int, int> order_profile(const FiniteGroup& g) {
  std::map<int, int> profile;
  for (element_t x = 0; x < g.order(); ++x) ++profile[g.element_order(x)];
  return profile;
}

struct IsoSearch {
  const FiniteGroup& g;
  const FiniteGroup& h;
  std::vector<element_t> generators;
  std::vector<int> generator_orders;

  // Extends generator images to a full map by breadth-first words; returns
  // false on any inconsistency or non-injectivity.
  bool extend(const std::vector<element_t>& images, std::vector<element_t>& map) const {
    std::fill(map.begin(), map.end(), -1);
    std::vector<bool> used(h.order(), false);
    std::deque<element_t> queue{g.identity()};
    map[g.identity()] = h.identity();
    used[h.identity()] = true;
    while (!queue.empty()) {
      element_t x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < generators.size(); ++i) {
        const element_t y = g.mul(x, generators[i]);
        const element_t fy = h.mul(map[x], images[i]);
        if (map[y] < 0) {
          if (used[fy]) return false;
          map[y] = fy;
          used[fy] = true;
          queue.push_back(y);
        } else if (map[y] != fy) {
          return false;
        }
      }
    }
    for (element_t x = 0; x < g.order(); ++x)
      for (element_t y = 0; y < g.order(); ++y)
        if (map[g.mul(x, y)] != h.mul(map[x], map[y])) return false;
    return true;
  }

  bool search(std::vector<element_t>& images, std::vector<element_t>& map) const {
    const std::size_t depth = images.size();
    if (depth == generators.size()) return extend(images, map);
    for (element_t c = 0; c < h.order(); ++c) {
      if (h.element_order(c) != generator_orders[depth]) continue;
      images.push_back(c);
      if (search(images, map)) return true;
      images.pop_back();
    }
    return false;
  }
};

}  // namespace

bool groups_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() > kExhaustiveCheckOrder || h.order() > kExhaustiveCheckOrder)
    throw error(errc::capability, "groups_isomorphic supports orders up to " +
                                      std::to_string(kExhaustiveCheckOrder));
  if (g.order() != h.order()) return false;
  if (order_profile(g) != order_profile(h)) return false;

  IsoSearch iso{g, h, {}, {}};
  // Greedy generating set, preferring elements of large order.
  std::vector<element_t> by_order(g.order());
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](element_t a, element_t b) { return g.element_order(a) > g.element_order(b); });
  std::vector<bool> spanned(g.order(), false);
  spanned[g.identity()] = true;
  for (element_t x : by_order) {
    if (spanned[x]) continue;
    iso.generators.push_back(x);
    iso.generator_orders.push_back(g.element_order(x));
    spanned = right_normed_span(g.order(), g.table(), iso.generators);
  }
  if (iso.generators.empty()) return true;  // both trivial
  std::vector<element_t> images;
  std::vector<element_t> map(g.order(), -1);
  return iso.search(images, map);
}

std::vector<element_t> retraction(const FiniteGroup& g) {
  const auto& st = g.structure();
  if (st.kind != GroupKind::semidirect_product)
    throw error(errc::missing_retraction, "group " + g.name() + " was not built as a semidirect product");
  const int nk = st.second->order();
  std::vector<element_t> out(g.order());
  for (element_t x = 0; x < g.order(); ++x) out[x] = x % nk;
  return out;
}

ElementSubset retraction_kernel(const FiniteGroup& g) {
  const auto& st = g.structure();
  if (st.kind != GroupKind::semidirect_product)
    throw error(errc::missing_retraction, "group " + g.name() + " was not built as a semidirect product");
  const int nk = st.second->order();
  std::vector<element_t> members;
  for (element_t x = 0; x < st.first->order(); ++x) members.push_back(x * nk + st.second->identity());
  return ElementSubset(g, std::move(members));
}

}  // namespace tsg
