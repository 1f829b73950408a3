// Elements of Thompson's group V as reduced prefix-code bijections.

#ifndef CANTOR_ELEMENT_HPP_
#define CANTOR_ELEMENT_HPP_

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cantor/address.hpp"

namespace cantor {

// One prefix substitution: points beginning with `domain` are sent to the
// same point with that prefix replaced by `range`.
struct PrefixPair {
  Address domain;
  Address range;

  friend bool operator==(PrefixPair const&, PrefixPair const&) = default;
};

struct TreePair;

/// An element of V, always held in canonical form: a reduced tree pair with
/// its pairs sorted by domain address (shortlex).
///
/// Maps act on the right and compose left to right, so `f * g` means
/// "apply f, then g".  Equality is equality of canonical forms, which
/// decides the word problem.
class VElement {
 public:
  // The identity.
  VElement();

  static VElement identity() { return {}; }

  /// The swap exchanging the cones alpha·C and beta·C.
  /// Throws std::invalid_argument unless alpha ⊥ beta.
  static VElement from_swap(Address const& alpha, Address const& beta);

  /// Validates a (possibly unreduced) pair table and reduces it.  Throws
  /// std::invalid_argument when either side is not a complete antichain.
  static VElement from_pairs(std::vector<PrefixPair> pairs);

  std::vector<PrefixPair> const& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool is_identity() const noexcept;

  // Longest address on either side of the canonical table.
  std::size_t max_depth() const noexcept;

  /// Image of a finite address: range·d when g = domain·d for a pair, and
  /// nothing when g is a proper prefix of some domain address.
  std::optional<Address> act(Address const& g) const;

  friend bool operator==(VElement const&, VElement const&) = default;

 private:
  explicit VElement(std::vector<PrefixPair> canonical_pairs)
      : pairs_(std::move(canonical_pairs)) {}

  friend VElement canonicalize(std::vector<PrefixPair> pairs);

  std::vector<PrefixPair> pairs_;
};

/// Merges sibling pairs (a0,b0),(a1,b1) into (a,b) until none remain.
/// Throws std::invalid_argument on a malformed table.
VElement canonicalize(std::vector<PrefixPair> pairs);

/// f then g.
VElement compose(VElement const& f, VElement const& g);
VElement inverse(VElement const& f);

inline VElement operator*(VElement const& f, VElement const& g) {
  return compose(f, g);
}

inline bool equals(VElement const& f, VElement const& g) { return f == g; }

inline std::optional<Address> act_address(VElement const& f,
                                          Address const& g) {
  return f.act(g);
}

// Integer power; negative exponents use the inverse.
VElement power(VElement const& f, long long n);

/// Smallest k in [1, cap] with f^k = 1.  An empty result means the order
/// exceeds the cap, not that it is infinite.
std::optional<std::size_t> order_of(VElement const& f,
                                    std::size_t cap = 10'000);

/// True when the regions moved by f and g share no basic open set.
bool supports_disjoint(VElement const& f, VElement const& g);

// Addresses whose cones make up the moved region of f.
std::vector<Address> moved_cones(VElement const& f);

/// Text dump: a header `velement v1 n=<pairs>` followed by one
/// `domain -> range` line per pair, in canonical order.
std::string dump(VElement const& f);

/// Reads a dump.  The header is optional and blank lines or `#` comments
/// are skipped; the table is reduced, so unreduced input is accepted.
/// Throws std::invalid_argument on malformed input or a header whose count
/// disagrees with the body.
VElement parse_dump(std::string_view text);

std::ostream& operator<<(std::ostream& os, VElement const& f);

/// Leaf-labelled tree pair.  Leaves of each tree are listed left to right;
/// domain leaf i (0-based) carries the number i + 1, and range_numbers[j]
/// is the number carried by range leaf j.
struct TreePair {
  std::vector<Address> domain_leaves;
  std::vector<Address> range_leaves;
  std::vector<std::size_t> range_numbers;

  std::size_t leaf_count() const noexcept { return domain_leaves.size(); }

  friend bool operator==(TreePair const&, TreePair const&) = default;
};

TreePair to_tree_pair(VElement const& f);

// Domain tree on the left, range tree on the right, leaves numbered.
std::string render_ascii(TreePair const& tp);
// A Graphviz digraph with one cluster per tree.
std::string render_dot(TreePair const& tp);

}  // namespace cantor

#endif  // CANTOR_ELEMENT_HPP_
