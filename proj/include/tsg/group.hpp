#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tsg/error.hpp"

namespace tsg {

using element_t = std::int32_t;

// Largest group order for which a full multiplication table is built.
inline constexpr int kMaxTableOrder = 5040;
// Above this order, associativity is checked with Light's generator test.
inline constexpr int kExhaustiveCheckOrder = 64;

enum class GroupKind {
  cyclic,
  dihedral,
  symmetric,
  alternating,
  direct_product,
  semidirect_product,
  quotient,
  table,
};

class FiniteGroup;

// How a group was built. Only used for parsing element names and for
// recovering the retraction of a semidirect product; algebra never looks here.
struct GroupStructure {
  GroupKind kind = GroupKind::table;
  int parameter = 0;  // n for C_n, D_n, S_n, A_n
  // Permutation images on {1..n} (0-based) for symmetric/alternating groups.
  std::vector<std::vector<int>> permutations;
  // direct_product: (G, H). semidirect_product: (H, K). quotient: (parent, _).
  std::shared_ptr<const FiniteGroup> first;
  std::shared_ptr<const FiniteGroup> second;
  // quotient only: parent element index -> coset index.
  std::vector<element_t> projection;
};

/// A finite group stored as a complete multiplication table.
///
/// Elements are the indices 0..order()-1. Labels are for display and
/// parsing only. Instances are immutable and cheap to copy.
class FiniteGroup {
 public:
  /// Validates the table (Latin square, identity, inverses, associativity)
  /// and derives the identity and inverse tables. Throws
  /// errc::invalid_parameter on any violation.
  FiniteGroup(std::string name, std::vector<std::string> labels, std::vector<element_t> table,
              GroupStructure structure = {});

  int order() const noexcept { return order_; }
  element_t identity() const noexcept { return data_->identity; }
  element_t mul(element_t a, element_t b) const noexcept {
    return data_->table[static_cast<std::size_t>(a) * order_ + b];
  }
  element_t inv(element_t a) const noexcept { return data_->inverses[a]; }
  // a^n for any integer n.
  element_t pow(element_t a, long long n) const noexcept;
  int element_order(element_t a) const noexcept;

  const std::string& label(element_t a) const { return data_->labels.at(a); }
  const std::vector<std::string>& labels() const noexcept { return data_->labels; }
  std::optional<element_t> find(std::string_view label) const;

  // The spec string this group was built from, e.g. "D3xC3".
  const std::string& name() const noexcept { return data_->name; }
  const GroupStructure& structure() const noexcept { return data_->structure; }
  std::span<const element_t> table() const noexcept { return data_->table; }

  bool contains(element_t a) const noexcept { return a >= 0 && a < order_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) noexcept {
    return a.data_ == b.data_ || (a.order_ == b.order_ && a.data_->table == b.data_->table);
  }

 private:
  struct Data {
    std::string name;
    std::vector<std::string> labels;
    std::vector<element_t> table;
    std::vector<element_t> inverses;
    element_t identity = 0;
    GroupStructure structure;
  };
  std::shared_ptr<const Data> data_;
  int order_ = 0;
};

/// A nonempty set of elements of one group, kept sorted and deduplicated.
class ElementSubset {
 public:
  ElementSubset(FiniteGroup group, std::vector<element_t> members);

  const FiniteGroup& group() const noexcept { return group_; }
  const std::vector<element_t>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(element_t a) const noexcept;
  std::vector<bool> mask() const;

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  // Elementwise inverses.
  ElementSubset inverse() const;
  // Subset containing every element of the group.
  static ElementSubset whole(const FiniteGroup& group);

  friend bool operator==(const ElementSubset& a, const ElementSubset& b) noexcept {
    return a.members_ == b.members_;
  }

 private:
  FiniteGroup group_;
  std::vector<element_t> members_;
};

struct DoubleCosetDecomposition {
  ElementSubset left;
  ElementSubset right;
  std::vector<element_t> representatives;
  std::vector<std::vector<element_t>> cosets;  // sorted, same order as representatives
  std::vector<int> coset_of;                   // element -> coset position

  std::size_t size() const noexcept { return representatives.size(); }
};

struct Quotient {
  FiniteGroup group;
  std::vector<element_t> projection;  // parent element -> coset element
};

FiniteGroup make_cyclic(int n);
// Dihedral group of order 2n (D_6 has order 12).
FiniteGroup make_dihedral(int n);
// Permutations of {1..n} composed right factor first: (p*q)(x) = p(q(x)).
FiniteGroup make_symmetric(int n);
FiniteGroup make_alternating(int n);
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

// action[k] lists the image of every element of h under the automorphism
// attached to element k of the acting group; must satisfy
// action[a*b](x) == action[a](action[b](x)).
using Action = std::vector<std::vector<element_t>>;
FiniteGroup semidirect_product(const FiniteGroup& h, const FiniteGroup& k, const Action& action);

Quotient quotient(const FiniteGroup& g, const ElementSubset& normal_subgroup);

ElementSubset closure(const ElementSubset& s);
ElementSubset normalizer(const ElementSubset& s);
bool is_subgroup(const ElementSubset& s);
bool is_normal_subgroup(const ElementSubset& s);
// Smallest normal subgroup containing s.
ElementSubset normal_closure(const ElementSubset& s);
// Set product {a*b : a in x, b in y} as a membership mask.
std::vector<bool> product_set(const ElementSubset& x, const ElementSubset& y);

DoubleCosetDecomposition double_cosets(const ElementSubset& a, const ElementSubset& b);

// Backtracking search for a table-preserving bijection; both orders <= 64.
bool groups_isomorphic(const FiniteGroup& g, const FiniteGroup& h);

// Retraction onto the acting factor of a semidirect product, as indices of
// the acting group. Throws errc::missing_retraction for other groups.
std::vector<element_t> retraction(const FiniteGroup& g);
// Embedded copy of the normal factor H in H x| K.
ElementSubset retraction_kernel(const FiniteGroup& g);

}  // namespace tsg
