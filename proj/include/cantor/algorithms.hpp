// Swap decomposition, parity correction and relation-suite verification.

#ifndef CANTOR_ALGORITHMS_HPP_
#define CANTOR_ALGORITHMS_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cantor/element.hpp"
#include "cantor/presentations.hpp"
#include "cantor/words.hpp"

namespace cantor {

using SwapPair = std::pair<Address, Address>;

inline constexpr std::size_t kDecomposeCap = 8;

// The four letters <00 01>, <01 10>, <10 11> and <1 00>.
std::vector<GenName> const& basic_swaps();

/// A word in the four basic swaps evaluating to <alpha beta>.  The swap
/// <00 01> is conjugated by a shortest word w (found breadth-first) with
/// {00.w, 01.w} = {alpha, beta}.  No such w exists when 0 is an endpoint,
/// and those swaps are split into <alpha0 beta0> <alpha1 beta1> instead.
///
/// Throws std::invalid_argument unless alpha ⊥ beta, and std::length_error
/// when either address is longer than cap.
Word decompose_swap(Address const& alpha, Address const& beta,
                    std::size_t cap = kDecomposeCap);

/// Splits the first swap when the list has odd length, so the result has
/// even length and the same product.
std::vector<SwapPair> even_factorization(std::vector<SwapPair> const& w);

// Left-to-right product of the swaps.
VElement product_of_swaps(std::vector<SwapPair> const& w);

// True iff the relator evaluates to the identity.  Throws EvalError.
bool verify_relator(WordExpr const& r, GeneratingSet const& gs);

struct VerificationFailure {
  std::string relator;  // label and relation text
  std::string dump;     // dump of the evaluated relator
};

struct VerificationReport {
  std::string suite;
  std::size_t total = 0;
  std::size_t passed = 0;
  std::vector<VerificationFailure> failures;

  bool ok() const noexcept { return failures.empty(); }
  // "suite <name>: <passed>/<total> passed" followed by failure details.
  std::string to_text() const;
  // "<name>\t<total>\t<passed>"
  std::string to_line() const;
};

/// Checks every relation (and each of its alternate forms) in input order.
VerificationReport run_suite(Presentation const& p);

VerificationReport verify_prop51();
VerificationReport verify_tietze_uv();

}  // namespace cantor

#endif  // CANTOR_ALGORITHMS_HPP_
