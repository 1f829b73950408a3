// Binary addresses: nodes of the infinite rooted binary tree, equivalently
// the basic open sets of Cantor space.

#ifndef CANTOR_ADDRESS_HPP_
#define CANTOR_ADDRESS_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cantor {

enum class Letter : std::uint8_t { Zero = 0, One = 1 };

constexpr Letter complement(Letter x) noexcept {
  return x == Letter::Zero ? Letter::One : Letter::Zero;
}

constexpr char to_char(Letter x) noexcept {
  return x == Letter::Zero ? '0' : '1';
}

// How two addresses sit relative to each other in the tree.
enum class AddressRelation { Equal, PrefixOf, ExtensionOf, Incomparable };

std::ostream& operator<<(std::ostream& os, AddressRelation r);

/// A finite word over {0,1}; the empty word is the root.
///
/// The natural ordering (`operator<`) is shortlex: shorter addresses first,
/// then lexicographic.  `lex_less` gives the left-to-right leaf order of a
/// tree, which is plain lexicographic order.
class Address {
 public:
  Address() = default;
  Address(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Address(std::vector<Letter> letters)
      : letters_(std::move(letters)) {}

  /// Accepts a string over {0,1}; "" and "e" denote the empty address.
  /// Throws std::invalid_argument on any other character.
  static Address parse(std::string_view text);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter back() const { return letters_.back(); }
  std::span<Letter const> letters() const noexcept { return letters_; }

  Address child(Letter x) const;
  // Requires a nonempty address.
  Address parent() const;
  Address prefix(std::size_t n) const;
  // The tail left after removing the first n letters.
  Address suffix_from(std::size_t n) const;

  // True when *this ⪯ other (equality included).
  bool is_prefix_of(Address const& other) const noexcept;
  bool is_proper_prefix_of(Address const& other) const noexcept {
    return size() < other.size() && is_prefix_of(other);
  }

  /// Rendering used throughout the CLI: "e" for the root, otherwise the
  /// letters.
  std::string to_string() const;

  friend bool operator==(Address const&, Address const&) = default;
  friend bool operator<(Address const& a, Address const& b) noexcept;

 private:
  std::vector<Letter> letters_;
};

std::ostream& operator<<(std::ostream& os, Address const& a);

struct LexLess {
  bool operator()(Address const& a, Address const& b) const noexcept;
};

struct AddressHash {
  std::size_t operator()(Address const& a) const noexcept;
};

AddressRelation compare(Address const& a, Address const& b) noexcept;

inline bool incomparable(Address const& a, Address const& b) noexcept {
  return compare(a, b) == AddressRelation::Incomparable;
}

Address concat(Address const& a, Address const& b);

/// Partial action of the swap <alpha beta> on a finite address g.
///
/// Returns beta·d when g = alpha·d, alpha·d when g = beta·d, g itself when g
/// is incomparable with both, and nothing when g is a proper prefix of
/// alpha or beta.  Throws std::invalid_argument unless alpha ⊥ beta.
std::optional<Address> swap_address_action(Address const& g,
                                           Address const& alpha,
                                           Address const& beta);

/// Cap on enumeration depth: CANTOR_SWAPS_MAX_DEPTH when set to a valid
/// non-negative integer, 16 otherwise.
std::size_t default_enumeration_cap();

/// All addresses of length 0..max_len in shortlex order.  Throws
/// std::length_error when max_len exceeds cap.
std::vector<Address> enumerate_addresses(std::size_t max_len,
                                         std::size_t cap);
std::vector<Address> enumerate_addresses(std::size_t max_len);

/// All addresses of length exactly n, in lexicographic order.
std::vector<Address> addresses_of_length(std::size_t n);

/// True iff the members are pairwise incomparable and their cones
/// partition Cantor space (the measures 2^-|a| sum to exactly 1).
bool is_complete_antichain(std::span<Address const> s);

namespace literals {
// "0110"_addr
Address operator""_addr(char const* text, std::size_t len);
}  // namespace literals

}  // namespace cantor

#endif  // CANTOR_ADDRESS_HPP_
