#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tsg/connectivity.hpp"
#include "tsg/digraph.hpp"
#include "tsg/group.hpp"
#include "tsg/report.hpp"

namespace tsg {

/// A two-sided digraph 2S(G;L,R) together with its component analysis.
/// Predicates and oracles read the same instance.
class Instance {
 public:
  Instance(ElementSubset left, ElementSubset right);

  const FiniteGroup& group() const noexcept { return left_.group(); }
  const ElementSubset& left() const noexcept { return left_; }
  const ElementSubset& right() const noexcept { return right_; }
  const TwoSidedDigraph& digraph() const noexcept { return digraph_; }
  const ComponentAnalysis& components() const noexcept { return components_; }

 private:
  ElementSubset left_;
  ElementSubset right_;
  TwoSidedDigraph digraph_;
  ComponentAnalysis components_;
};

// Which partition a theorem checker reads.
enum class Connectivity { weak, strong };
const char* connectivity_name(Connectivity c) noexcept;

// All elements expressible as a word of positive length in `s`, found by
// iterating the length-n word sets until they cycle.
std::vector<bool> word_set(const ElementSubset& s);
// Subgroup generated by s and its inverses.
ElementSubset generated_subgroup(const ElementSubset& s);

// G == W(L^-1) W(R) == W(L) W(R^-1), computed from word sets and from
// generated subgroups; throws internal_inconsistency if the two disagree.
bool factorization_check(const ElementSubset& left, const ElementSubset& right);

struct Word {
  std::vector<element_t> letters;
};

/// Words with e = left * right, where left is a word in L^-1 and right a
/// word in R. The i-witness has lengths (i+1, i); the j-witness (j, j+1).
struct OffsetWitness {
  int i = 0;
  int j = 0;
  Word i_left, i_right;
  Word j_left, j_right;
};

std::optional<OffsetWitness> identity_offset_witness(const ElementSubset& left, const ElementSubset& right);

// "e.e.e | (12)(34).(12)(34)"
std::string render_words(const FiniteGroup& g, const Word& left, const Word& right);
element_t evaluate(const FiniteGroup& g, const Word& w);

// Factorization and both identity offsets.
bool strong_connectivity_predicate(const ElementSubset& left, const ElementSubset& right);
// Predicate against the SCC count of the built digraph.
VerificationReport theorem_strong_connectivity(const Instance& inst);

struct ConnectionLengthReport {
  int k = 0;
  element_t witness_generator = 0;
  std::vector<std::pair<element_t, int>> per_coset;  // representative -> k_s
  int predicted_components = 0;
};

// Global minimum connection length. Requires G == <L><R>; otherwise throws
// hypothesis_not_met (use coset_connection_lengths). Recomputes k from every
// generator of L, L^-1, R and R^-1 on both partitions and throws
// internal_inconsistency if any of them differ.
ConnectionLengthReport min_connection_length(const Instance& inst);

// Component count, equal sizes, distinct components of l^0..l^(k-1), and
// isomorphism of all components when L or R meets its normalizer.
VerificationReport component_count_theorem(const Instance& inst);

struct CosetAnalysis {
  DoubleCosetDecomposition cosets;
  ConnectionLengthReport lengths;
  std::vector<int> k;               // per coset, same order as cosets.representatives
  std::vector<int> component_size;  // per coset: size of each component (equal by theorem)
  VerificationReport report;
};

// Per double coset <L>s<R>: k_s = min{n >= 1 : l^n s ~ s}, checked against
// the number and sizes of components inside the coset, containment of every
// component in its coset, and independence of the representative.
CosetAnalysis coset_connection_lengths(const Instance& inst);

// Sum of k_s over double cosets.
int total_component_prediction(const Instance& inst);

struct BurnsideCount {
  int components = 0;
  std::size_t u_order = 0;  // |U|, U = closure of {(l, r)} in G x G
  long long fixed_point_sum = 0;
  std::vector<ElementPair> u;  // generation order, starting with the seed pairs
};

// Orbit count of U acting by g -> a^-1 g b. Throws internal_inconsistency if
// U fails the subgroup checks or the sum is not divisible by |U|.
BurnsideCount burnside_component_count(const ElementSubset& left, const ElementSubset& right);

// Compares 2S(G x G; diag G, U) with 2S(G; U) under (a, b) -> a^-1 b.
// |G| <= 12, otherwise throws capability.
VerificationReport delta_correspondence_check(const FiniteGroup& g, const std::vector<ElementPair>& pairs);

struct ReductionResult {
  bool connected = false;          // 2S(G;L,R) weakly connected
  bool image_connected = false;    // 2S(K;L^phi,R^phi) weakly connected
  bool kernel_connected = false;   // kernel inside one weak component
  VerificationReport report;
};

// G must be a semidirect product H x| K (missing_retraction otherwise).
ReductionResult retract_reduction_check(const Instance& inst);
// N must be normal in G (invalid_parameter otherwise).
ReductionResult quotient_reduction_check(const Instance& inst, const ElementSubset& normal_subgroup);

}  // namespace tsg
