// Word expressions over named generators and swap literals.
//
// Grammar (whitespace-insensitive between tokens):
//
//   expr   := term*                         juxtaposition is product
//   term   := atom ( '^' exponent )*        '^' is left-associative
//   exponent := INT | '(' INT ')'           a power, e.g. x^-1, x^(3)
//             | atom                        a conjugate, x^g = g^-1 x g
//   atom   := NAME | '<' ADDR ADDR '>' | '1'
//           | '(' expr ')' | '[' expr ',' expr ']'
//
// NAME is a letter followed by letters/digits ("a", "pi0"); ADDR is a
// string over {0,1} or "e"; '1' is the identity; [x,y] = x^-1 y^-1 x y.

#ifndef CANTOR_WORDS_HPP_
#define CANTOR_WORDS_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cantor/address.hpp"

namespace cantor {

// Endpoints of a swap literal <first second>; always incomparable.
struct SwapLiteral {
  Address first;
  Address second;

  friend bool operator==(SwapLiteral const&, SwapLiteral const&) = default;
};

/// A generator symbol: either a plain name or a swap literal.  The symbol
/// text of a swap literal is its rendering "<first second>", so two
/// generators are equal iff their symbols are.
class GenName {
 public:
  // Throws std::invalid_argument unless name is a valid NAME token.
  explicit GenName(std::string name);
  // Throws std::invalid_argument unless the addresses are incomparable.
  GenName(Address first, Address second);

  std::string const& symbol() const noexcept { return symbol_; }
  bool is_swap() const noexcept { return swap_.has_value(); }
  SwapLiteral const& swap() const { return swap_.value(); }

  friend bool operator==(GenName const& a, GenName const& b) noexcept {
    return a.symbol_ == b.symbol_;
  }
  friend bool operator<(GenName const& a, GenName const& b) noexcept {
    return a.symbol_ < b.symbol_;
  }

 private:
  std::string symbol_;
  std::optional<SwapLiteral> swap_;
};

GenName swap_gen(std::string_view first, std::string_view second);

class WordExpr {
 public:
  enum class Kind { Empty, Gen, Inverse, Power, Conjugate, Commutator, Product };

  WordExpr() = default;  // Empty

  static WordExpr gen(GenName g);
  static WordExpr gen(std::string_view name) { return gen(GenName(std::string(name))); }
  static WordExpr swap(std::string_view first, std::string_view second);
  static WordExpr inverse(WordExpr x);
  static WordExpr power(WordExpr x, long long n);
  static WordExpr conjugate(WordExpr base, WordExpr by);
  static WordExpr commutator(WordExpr x, WordExpr y);
  static WordExpr product(std::vector<WordExpr> factors);

  Kind kind() const noexcept { return kind_; }
  // Gen only.
  GenName const& generator() const { return generator_.value(); }
  // Power only.
  long long exponent() const noexcept { return exponent_; }
  std::vector<WordExpr> const& children() const noexcept { return children_; }

  friend bool operator==(WordExpr const&, WordExpr const&) = default;

 private:
  Kind kind_ = Kind::Empty;
  std::optional<GenName> generator_;
  long long exponent_ = 0;
  std::vector<WordExpr> children_;
};

inline WordExpr operator*(WordExpr x, WordExpr y) {
  return WordExpr::product({std::move(x), std::move(y)});
}

struct WordLetter {
  GenName gen;
  int sign;  // +1 or -1

  friend bool operator==(WordLetter const&, WordLetter const&) = default;
};

// A word in the free group; not necessarily reduced.
using Word = std::vector<WordLetter>;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string const& what, std::size_t position);
  // 0-based byte offset into the parsed text.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Throws ParseError, carrying the offending offset, on a syntax error or a
/// swap literal whose addresses are comparable.
WordExpr parse(std::string_view text);

/// Expands conjugates (x^g -> g^-1 x g), commutators, powers and inverses,
/// then freely reduces.
Word flatten(WordExpr const& e);

Word inverse(Word const& w);
Word free_reduce(Word const& w);
bool is_freely_reduced(Word const& w);

// "1" for the empty word, otherwise letters separated by spaces with ^-1 on
// inverted letters.
std::string format(Word const& w);
// Structural rendering; parsing it back gives an expression with the same
// flattening.
std::string to_string(WordExpr const& e);

// Every generator symbol mentioned, in first-occurrence order.
std::vector<GenName> generators_of(WordExpr const& e);

}  // namespace cantor

#endif  // CANTOR_WORDS_HPP_
