// Generating sets, the length-3 swap table and the relation suites of V.

#ifndef CANTOR_PRESENTATIONS_HPP_
#define CANTOR_PRESENTATIONS_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cantor/element.hpp"
#include "cantor/words.hpp"

namespace cantor {

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A named assignment of elements of V to generator symbols.  Swap literals
/// resolve through VElement::from_swap in every set.
class GeneratingSet {
 public:
  GeneratingSet() = default;
  GeneratingSet(std::string name, std::map<GenName, VElement> images);

  std::string const& name() const noexcept { return name_; }
  std::map<GenName, VElement> const& images() const noexcept {
    return images_;
  }
  bool resolves(GenName const& g) const;

  // Throws EvalError for a name the set does not define.
  VElement image(GenName const& g) const;
  VElement image(std::string_view name) const;

  VElement eval(WordExpr const& e) const;
  VElement eval(Word const& w) const;
  // Parses, then evaluates.  Throws ParseError or EvalError.
  VElement eval(std::string_view text) const;

 private:
  std::string name_;
  std::map<GenName, VElement> images_;
};

inline VElement eval(WordExpr const& e, GeneratingSet const& gs) {
  return gs.eval(e);
}

// a = <00 01>, b = <01 10><01 11>, c = <1 00>.
GeneratingSet const& genset_abc();
// u = <00 01><10 110><10 111>, v = b.
GeneratingSet const& genset_uv();
// A, B, C and pi0.
GeneratingSet const& genset_cfp();
// No named generators; swap literals only.
GeneratingSet const& genset_swaps();
// a, b, c, u and v together, for checking conversion formulas.
GeneratingSet const& genset_abcuv();

// "abc", "uv", "cfp" or "swaps".
std::optional<GeneratingSet> genset_by_name(std::string_view name);
std::vector<std::string> genset_names();

enum class CfpKind { C, X, Pi };

/// Word over {A, B, C, pi0} for C_n = A^(-n+1) C B^(n-1),
/// X_n = A^(-n+1) B A^(n-1), pi_1 = pi0^C_2 and pi_n = pi_1^(A^(n-1)).
/// Throws std::invalid_argument for n < 1.
WordExpr cfp_expr(CfpKind kind, int n);
VElement derived_cfp(CfpKind kind, int n);

// ---------------------------------------------------------------------------
// Swap table

struct SwapTableEntry {
  Address first;   // first < second in shortlex order
  Address second;
  std::string group;  // definition family, e.g. "D23"
  WordExpr definition;  // over swap literals and a, b, c
  WordExpr word;        // over a, b, c only
};

/// One {a,b,c}-word per unordered incomparable pair of addresses of length
/// at most 3, built so that each definition only uses earlier entries.
class SwapTable {
 public:
  std::vector<SwapTableEntry> const& entries() const noexcept {
    return entries_;
  }
  std::size_t size() const noexcept { return entries_.size(); }
  // Symmetric lookup; nullptr when absent.
  SwapTableEntry const* find(Address const& alpha, Address const& beta) const;

 private:
  friend SwapTable build_swap_table();
  std::vector<SwapTableEntry> entries_;
  std::map<std::pair<Address, Address>, std::size_t> index_;
};

/// Throws std::logic_error if any entry fails to evaluate to its swap.
SwapTable build_swap_table();
// Built once on first use.
SwapTable const& swap_table();

// ---------------------------------------------------------------------------
// Relations and presentations

/// lhs = rhs, or lhs = 1 when rhs is absent.
struct Relation {
  std::string label;
  WordExpr lhs;
  std::optional<WordExpr> rhs;
  // Other renderings of the same relation; each must hold as well.
  std::vector<Relation> alternates;

  WordExpr relator() const;
  // "lhs = rhs" or "lhs".
  std::string text() const;
};

Relation relation(std::string label, std::string_view lhs);
Relation relation(std::string label, std::string_view lhs, std::string_view rhs);

struct Presentation {
  std::string name;
  std::vector<GenName> generators;
  std::vector<Relation> relations;
  GeneratingSet genset;

  /// Throws std::invalid_argument when a relation uses a generator that is
  /// neither declared nor a swap literal.
  void validate() const;
};

// Eight relations, each in swap form and in {a,b,c}-word form (16 in all).
Presentation presentation_P3();
// The eight shortened {a,b,c} relators.
Presentation presentation_P3_kb();
// Seven relators over {u, v}.
Presentation presentation_2gen();
// CFP1 to CFP14 over {A, B, C, pi0}.
Presentation presentation_cfp();
// Eight swap formulas for A B^-1, X_2, X_3, C_2, C_3, pi_1, pi_2, pi_3.
Presentation presentation_cfp_lemma();
// Every table entry as the equality word = swap literal.
Presentation presentation_swap_table();
// The six identities expressing the abc generators through A, B, C, pi0.
Presentation presentation_prop51();
// Conversion formulas between {a,b,c} and {u,v}.
Presentation presentation_tietze_uv();
// The families of swap identities for lengths up to 3; see level3.cpp.
Presentation presentation_section3();

struct InfiniteCounts {
  std::size_t order = 0;
  std::size_t conjugacy = 0;
  std::size_t split = 0;
};

/// Order, conjugacy and split relations among swaps with addresses of
/// length at most L.  Swaps are unordered pairs.  A conjugacy instance
/// s_gd^-1 s_ab s_gd = s_(a.t, b.t) needs both transports defined and the
/// two pairs distinct; split instances need |alpha|, |beta| <= L - 1.
/// Throws std::invalid_argument unless 1 <= L <= 5.
Presentation truncated_infinite_presentation(int L,
                                             InfiniteCounts* counts = nullptr);

// Suite names accepted by presentation_by_name, in display order.
std::vector<std::string> suite_names();
// "inf-L<k>" for k in 1..5 is accepted in addition to the listed names.
std::optional<Presentation> presentation_by_name(std::string_view name);

}  // namespace cantor

#endif  // CANTOR_PRESENTATIONS_HPP_
