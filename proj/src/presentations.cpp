#include "cantor/presentations.hpp"

#include <algorithm>
#include <array>

namespace cantor {

// ---------------------------------------------------------------------------
// Generating sets

GeneratingSet::GeneratingSet(std::string name,
                             std::map<GenName, VElement> images)
    : name_(std::move(name)), images_(std::move(images)) {}

bool GeneratingSet::resolves(GenName const& g) const {
  return g.is_swap() || images_.count(g) > 0;
}

VElement GeneratingSet::image(GenName const& g) const {
  if (g.is_swap()) {
    return VElement::from_swap(g.swap().first, g.swap().second);
  }
  auto it = images_.find(g);
  if (it == images_.end()) {
    throw EvalError("unknown generator \"" + g.symbol()
                    + "\" in generating set " + name_);
  }
  return it->second;
}

VElement GeneratingSet::image(std::string_view name) const {
  return image(GenName(std::string(name)));
}

VElement GeneratingSet::eval(WordExpr const& e) const {
  using Kind = WordExpr::Kind;
  auto const& kids = e.children();
  switch (e.kind()) {
    case Kind::Empty:
      return VElement::identity();
    case Kind::Gen:
      return image(e.generator());
    case Kind::Inverse:
      return inverse(eval(kids[0]));
    case Kind::Power:
      return power(eval(kids[0]), e.exponent());
    case Kind::Conjugate: {
      VElement const by = eval(kids[1]);
      return inverse(by) * eval(kids[0]) * by;
    }
    case Kind::Commutator: {
      VElement const x = eval(kids[0]);
      VElement const y = eval(kids[1]);
      return inverse(x) * inverse(y) * x * y;
    }
    case Kind::Product: {
      VElement out;
      for (auto const& kid : kids) {
        out = out * eval(kid);
      }
      return out;
    }
  }
  return {};
}

VElement GeneratingSet::eval(Word const& w) const {
  VElement out;
  for (auto const& letter : w) {
    VElement const g = image(letter.gen);
    out = out * (letter.sign < 0 ? inverse(g) : g);
  }
  return out;
}

VElement GeneratingSet::eval(std::string_view text) const {
  return eval(parse(text));
}

namespace {

VElement swaps(std::initializer_list<std::pair<char const*, char const*>> list) {
  VElement out;
  for (auto const& [alpha, beta] : list) {
    out = out * VElement::from_swap(Address::parse(alpha), Address::parse(beta));
  }
  return out;
}

VElement element_a() { return swaps({{"00", "01"}}); }
VElement element_b() { return swaps({{"01", "10"}, {"01", "11"}}); }
VElement element_c() { return swaps({{"1", "00"}}); }
VElement element_u() {
  return swaps({{"00", "01"}, {"10", "110"}, {"10", "111"}});
}

GenName name(char const* s) { return GenName(s); }

}  // namespace

GeneratingSet const& genset_abc() {
  static GeneratingSet const gs(
      "abc", {{name("a"), element_a()},
              {name("b"), element_b()},
              {name("c"), element_c()}});
  return gs;
}

GeneratingSet const& genset_uv() {
  static GeneratingSet const gs(
      "uv", {{name("u"), element_u()}, {name("v"), element_b()}});
  return gs;
}

GeneratingSet const& genset_cfp() {
  static GeneratingSet const gs(
      "cfp",
      {{name("A"), swaps({{"0", "1"}, {"0", "10"}, {"10", "11"}})},
       {name("B"), swaps({{"10", "11"}, {"10", "110"}, {"110", "111"}})},
       {name("C"), swaps({{"10", "11"}, {"0", "10"}})},
       {name("pi0"), swaps({{"0", "10"}})}});
  return gs;
}

GeneratingSet const& genset_swaps() {
  static GeneratingSet const gs("swaps", {});
  return gs;
}

GeneratingSet const& genset_abcuv() {
  static GeneratingSet const gs(
      "abcuv", {{name("a"), element_a()},
                {name("b"), element_b()},
                {name("c"), element_c()},
                {name("u"), element_u()},
                {name("v"), element_b()}});
  return gs;
}

std::vector<std::string> genset_names() { return {"abc", "uv", "cfp", "swaps"}; }

std::optional<GeneratingSet> genset_by_name(std::string_view name) {
  if (name == "abc") return genset_abc();
  if (name == "uv") return genset_uv();
  if (name == "cfp") return genset_cfp();
  if (name == "swaps") return genset_swaps();
  return std::nullopt;
}

namespace {

WordExpr g(char const* s) { return WordExpr::gen(s); }

// x^n, or nothing when n = 0.
void push_power(std::vector<WordExpr>& out, char const* x, int n) {
  if (n == 1) {
    out.push_back(g(x));
  } else if (n != 0) {
    out.push_back(WordExpr::power(g(x), n));
  }
}

}  // namespace

WordExpr cfp_expr(CfpKind kind, int n) {
  if (n < 1) {
    throw std::invalid_argument("derived CFP elements need n >= 1, got "
                                + std::to_string(n));
  }
  std::vector<WordExpr> factors;
  switch (kind) {
    case CfpKind::C:
      push_power(factors, "A", 1 - n);
      factors.push_back(g("C"));
      push_power(factors, "B", n - 1);
      return WordExpr::product(std::move(factors));
    case CfpKind::X:
      push_power(factors, "A", 1 - n);
      factors.push_back(g("B"));
      push_power(factors, "A", n - 1);
      return WordExpr::product(std::move(factors));
    case CfpKind::Pi: {
      WordExpr pi1 = WordExpr::conjugate(g("pi0"), cfp_expr(CfpKind::C, 2));
      if (n == 1) {
        return pi1;
      }
      push_power(factors, "A", n - 1);
      return WordExpr::conjugate(std::move(pi1),
                                 WordExpr::product(std::move(factors)));
    }
  }
  return {};
}

VElement derived_cfp(CfpKind kind, int n) {
  return genset_cfp().eval(cfp_expr(kind, n));
}

// ---------------------------------------------------------------------------
// Swap table

SwapTableEntry const* SwapTable::find(Address const& alpha,
                                      Address const& beta) const {
  auto key = alpha < beta ? std::pair{alpha, beta} : std::pair{beta, alpha};
  auto it = index_.find(key);
  return it == index_.end() ? nullptr : &entries_[it->second];
}

namespace {

Address addr(std::string const& s) { return Address::parse(s); }

std::string bit(int x) { return x ? "1" : "0"; }

WordExpr sw(std::string const& alpha, std::string const& beta) {
  return WordExpr::gen(GenName(addr(alpha), addr(beta)));
}

class TableBuilder {
 public:
  explicit TableBuilder(SwapTable& table,
                        std::map<std::pair<Address, Address>, std::size_t>& index,
                        std::vector<SwapTableEntry>& entries)
      : table_(table), index_(index), entries_(entries) {}

  bool defined(Address const& alpha, Address const& beta) const {
    return table_.find(alpha, beta) != nullptr;
  }

  // Adds <alpha beta> = definition.  Every swap literal in the definition
  // must already be in the table.
  void define(std::string const& group, std::string const& alpha,
              std::string const& beta, WordExpr definition) {
    Address a = addr(alpha);
    Address b = addr(beta);
    if (defined(a, b)) {
      throw std::logic_error("swap table defines <" + alpha + " " + beta
                             + "> twice");
    }
    WordExpr word = substitute(definition);
    VElement const expected = VElement::from_swap(a, b);
    if (genset_abc().eval(word) != expected) {
      throw std::logic_error("swap table entry <" + alpha + " " + beta
                             + "> = " + to_string(definition)
                             + " does not evaluate to the swap");
    }
    if (b < a) {
      std::swap(a, b);
    }
    index_.emplace(std::pair{a, b}, entries_.size());
    entries_.push_back(SwapTableEntry{std::move(a), std::move(b), group,
                                      std::move(definition), std::move(word)});
  }

 private:
  WordExpr substitute(WordExpr const& e) const {
    using Kind = WordExpr::Kind;
    auto const& kids = e.children();
    switch (e.kind()) {
      case Kind::Empty:
        return e;
      case Kind::Gen: {
        if (!e.generator().is_swap()) {
          return e;
        }
        auto const& s = e.generator().swap();
        SwapTableEntry const* entry = table_.find(s.first, s.second);
        if (entry == nullptr) {
          throw std::logic_error("swap table uses " + e.generator().symbol()
                                 + " before defining it");
        }
        return entry->word;
      }
      case Kind::Inverse:
        return WordExpr::inverse(substitute(kids[0]));
      case Kind::Power:
        return WordExpr::power(substitute(kids[0]), e.exponent());
      case Kind::Conjugate:
        return WordExpr::conjugate(substitute(kids[0]), substitute(kids[1]));
      case Kind::Commutator:
        return WordExpr::commutator(substitute(kids[0]), substitute(kids[1]));
      case Kind::Product: {
        std::vector<WordExpr> out;
        for (auto const& kid : kids) {
          out.push_back(substitute(kid));
        }
        return WordExpr::product(std::move(out));
      }
    }
    return e;
  }

  SwapTable& table_;
  std::map<std::pair<Address, Address>, std::size_t>& index_;
  std::vector<SwapTableEntry>& entries_;
};

std::array<std::string, 4> const kX2 = {"00", "01", "10", "11"};

// Product of swaps of X^2 sending 00 -> kappa, 01 -> lambda and the other
// two points, in increasing order, to the remaining two.
WordExpr rho(std::string const& kappa, std::string const& lambda) {
  std::map<std::string, std::string> image;
  image["00"] = kappa;
  image["01"] = lambda;
  std::vector<std::string> rest;
  for (auto const& p : kX2) {
    if (p != kappa && p != lambda) {
      rest.push_back(p);
    }
  }
  image["10"] = rest[0];
  image["11"] = rest[1];

  std::vector<WordExpr> factors;
  std::map<std::string, bool> seen;
  for (auto const& start : kX2) {
    if (seen[start]) {
      continue;
    }
    std::vector<std::string> cycle;
    for (std::string p = start; !seen[p]; p = image[p]) {
      seen[p] = true;
      cycle.push_back(p);
    }
    // (c1 c2 ... ck) = <c1 c2><c1 c3>...<c1 ck> acting on the right.
    for (std::size_t i = 1; i < cycle.size(); ++i) {
      factors.push_back(sw(cycle[0], cycle[i]));
    }
  }
  return WordExpr::product(std::move(factors));
}

}  // namespace

SwapTable build_swap_table() {
  SwapTable table;
  TableBuilder t(table, table.index_, table.entries_);
  auto conj = [](WordExpr x, WordExpr by) {
    return WordExpr::conjugate(std::move(x), std::move(by));
  };

  // Swaps of X^2 as transpositions of S4.
  t.define("D22", "00", "01", parse("a"));
  t.define("D22", "00", "10", parse("a^b"));
  t.define("D22", "00", "11", parse("a^(b^-1)"));
  t.define("D22", "01", "10", parse("a^(b a)"));
  t.define("D22", "01", "11", parse("a^(b^-1 a)"));
  t.define("D22", "10", "11", parse("a^(b a b)"));

  t.define("D11", "0", "1", sw("00", "10") * sw("01", "11"));

  t.define("D12", "1", "00", parse("c"));
  t.define("D12", "1", "01", conj(sw("1", "00"), sw("00", "01")));
  for (int x = 0; x < 2; ++x) {
    t.define("D12", "0", "1" + bit(x), conj(sw("1", "0" + bit(x)), sw("0", "1")));
  }

  for (int x = 0; x < 2; ++x) {
    t.define("D13", "1", "00" + bit(x),
             conj(sw("00", "1" + bit(x)), sw("1", "00")));
  }
  for (int x = 0; x < 2; ++x) {
    t.define("D13", "1", "01" + bit(x),
             conj(sw("1", "00" + bit(x)), sw("00", "01")));
  }
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      std::string const xy = bit(x) + bit(y);
      t.define("D13", "0", "1" + xy, conj(sw("1", "0" + xy), sw("0", "1")));
    }
  }

  for (int x = 0; x < 2; ++x) {
    t.define("D23", "00", "01" + bit(x),
             conj(sw("1", "01" + bit(x)), sw("1", "00")));
  }
  for (int x = 0; x < 2; ++x) {
    t.define("D23", "01", "00" + bit(x),
             conj(sw("00", "01" + bit(x)), sw("00", "01")));
  }
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      std::string const xs = bit(x), xb = bit(1 - x), ys = bit(y);
      t.define("D23", "1" + xs, "1" + xb + ys,
               conj(sw("0" + xs, "0" + xb + ys), sw("0", "1")));
    }
  }
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int z = 0; z < 2; ++z) {
        std::string const xs = bit(x), ys = bit(y), yb = bit(1 - y),
                          zs = bit(z);
        t.define("D23", "1" + xs, "0" + ys + zs,
                 conj(sw("0" + yb, "0" + ys + zs), sw("0" + yb, "1" + xs)));
      }
    }
  }
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int z = 0; z < 2; ++z) {
        std::string const xs = bit(x), yz = bit(y) + bit(z);
        t.define("D23", "0" + xs, "1" + yz,
                 conj(sw("1" + xs, "0" + yz), sw("0", "1")));
      }
    }
  }

  t.define("D33", "000", "001", conj(sw("1", "000"), sw("1", "001")));
  t.define("D33", "000", "010", conj(sw("1", "000"), sw("1", "010")));
  t.define("D33", "000", "011", conj(sw("1", "000"), sw("1", "011")));
  t.define("D33", "001", "011", conj(sw("1", "001"), sw("1", "011")));
  for (auto const& xy : kX2) {
    if (xy != "00") {
      t.define("D33", xy + "0", xy + "1",
               conj(sw("000", "001"), sw("00", xy)));
    }
  }

  static constexpr std::array<std::pair<int, int>, 3> kOther = {
      std::pair{0, 0}, std::pair{0, 1}, std::pair{1, 1}};
  for (auto const& kappa : kX2) {
    for (auto const& lambda : kX2) {
      if (kappa == lambda) {
        continue;
      }
      WordExpr const r = rho(kappa, lambda);
      VElement const r_image = genset_swaps().eval(r);
      if (r_image.act(addr("00")) != addr(kappa)
          || r_image.act(addr("01")) != addr(lambda)) {
        throw std::logic_error("rho(" + kappa + ", " + lambda
                               + ") moves 00 and 01 to the wrong places");
      }
      for (auto const& [x, y] : kOther) {
        std::string const alpha = kappa + bit(x), beta = lambda + bit(y);
        if (t.defined(addr(alpha), addr(beta))) {
          continue;
        }
        t.define("Dother33", alpha, beta,
                 conj(sw("00" + bit(x), "01" + bit(y)), r));
      }
    }
  }
  return table;
}

SwapTable const& swap_table() {
  static SwapTable const table = build_swap_table();
  return table;
}

// ---------------------------------------------------------------------------
// Relations

WordExpr Relation::relator() const {
  if (!rhs) {
    return lhs;
  }
  return lhs * WordExpr::inverse(*rhs);
}

std::string Relation::text() const {
  return rhs ? to_string(lhs) + " = " + to_string(*rhs) : to_string(lhs);
}

Relation relation(std::string label, std::string_view lhs) {
  return Relation{std::move(label), parse(lhs), std::nullopt, {}};
}

Relation relation(std::string label, std::string_view lhs,
                  std::string_view rhs) {
  return Relation{std::move(label), parse(lhs), parse(rhs), {}};
}

namespace {

void check_generators(Presentation const& p, Relation const& r) {
  std::vector<GenName> used = generators_of(r.lhs);
  if (r.rhs) {
    auto more = generators_of(*r.rhs);
    used.insert(used.end(), more.begin(), more.end());
  }
  for (auto const& gen : used) {
    if (gen.is_swap()) {
      continue;
    }
    if (std::find(p.generators.begin(), p.generators.end(), gen)
        == p.generators.end()) {
      throw std::invalid_argument("relation " + r.label + " of " + p.name
                                  + " uses undeclared generator "
                                  + gen.symbol());
    }
  }
  for (auto const& alt : r.alternates) {
    check_generators(p, alt);
  }
}

std::vector<GenName> names(std::initializer_list<char const*> list) {
  std::vector<GenName> out;
  for (char const* s : list) {
    out.emplace_back(s);
  }
  return out;
}

Relation with_alternate(Relation main, Relation alternate) {
  main.alternates.push_back(std::move(alternate));
  return main;
}

}  // namespace

void Presentation::validate() const {
  for (auto const& r : relations) {
    check_generators(*this, r);
  }
}

Presentation presentation_P3() {
  Presentation p{"p3", names({"a", "b", "c"}), {}, genset_abc()};
  auto both = [&](std::string label, Relation words, Relation swap_form) {
    words.label = label;
    swap_form.label = label + " (swaps)";
    p.relations.push_back(with_alternate(std::move(words), std::move(swap_form)));
  };
  both("R1 a^2", relation("", "a^2"), relation("", "<00 01>^2"));
  both("R1 b^3", relation("", "b^3"), relation("", "(<01 10> <01 11>)^3"));
  both("R1 (ab)^4", relation("", "(a b)^4"),
       relation("", "(<00 01> <01 10> <01 11>)^4"));
  both("R2", relation("", "c^(a c)", "a"),
       relation("", "<1 01>^<1 00>", "<00 01>"));
  both("R3", relation("", "c", "a^(b c a c a a^(b a)) a^(b^-1 c a c a a^(b^-1 a))"),
       relation("", "<1 00>", "<10 000> <11 001>"));
  both("R4 first",
       relation("", "[a^(b^-1 c a c), a^(b^-1 c a c a^b a^(b^-1 a))]"),
       relation("", "[<00 010>, <10 111>]"));
  both("R4 second",
       relation("", "[a^(b c a c), a^(b^-1 c a c a^b a^(b^-1 a))]"),
       relation("", "[<00 011>, <10 111>]"));
  both("R5", relation("", "[a^(b c a^(b c a)), a^(b c a c a^b a^(b^-1 a))]"),
       relation("", "[<000 010>, <10 110>]"));
  p.validate();
  return p;
}

Presentation presentation_P3_kb() {
  Presentation p{"p3-kb", names({"a", "b", "c"}), {}, genset_abc()};
  p.relations = {
      relation("KB1", "a^2"),
      relation("KB2", "b^3"),
      relation("KB3", "(a b)^4"),
      relation("KB4", "c^-1 (a c)^2 a"),
      relation("KB5", "(c a b^-1 a b a)^2 c b (c a b a b^-1 a)^2"),
      relation("KB6",
               "a (c b)^2 a (b^-1 c)^2 b c a b c b^-1 c a b^-1 a c b^-1 "
               "(c b)^2 a b^-1"),
      relation("KB7",
               "a b^-1 c b c (a b^-1)^2 c b c b^-1 a (b^-1 c)^2 b a b c "
               "b^-1 c a b^-1"),
      relation("KB8",
               "c a (b^-1 c)^2 b a c a b a c b c (b^-1 c a)^2 b (c b^-1)^2 "
               "(a c b)^2 c b^-1 c a b^-1"),
  };
  p.validate();
  return p;
}

Presentation presentation_2gen() {
  Presentation p{"two-gen", names({"u", "v"}), {}, genset_uv()};
  p.relations = {
      relation("T1", "u^6"),
      relation("T2", "v^3"),
      relation("T3", "(u^3 v)^4"),
      relation("T4",
               "v^-1 u (u^2 v^-1)^2 u^3 v u^-1 v^-1 u^3 v u "
               "(u v u^2 (u v^-1 u^3 v)^3)^2 u v^-1 u^3 v^-1"),
      relation("T5",
               "u v^-1 u^3 v^-1 u^-2 v^-1 u v u^2 v^-1 u^-1 v u^2 v^-1 u v "
               "u^-1 (u^-1 v^-1)^2 u^3 v u^-1"),
      relation("T6",
               "v (u v^-1 u^3 v^-1)^2 u^-1 v^-1 u^3 v^-1 u^-1 v^-1 u^3 v"),
      relation("T7",
               "u v u^3 v u v^-1 u^-2 v^-1 u (u^2 v)^2 (u^2 v^-1)^2 u^3 v "
               "u^-2 v^-1 u^3 v"),
  };
  p.validate();
  return p;
}

Presentation presentation_cfp() {
  Presentation p{"cfp", names({"A", "B", "C", "pi0"}), {}, genset_cfp()};
  auto C = [](int n) { return cfp_expr(CfpKind::C, n); };
  auto X = [](int n) { return cfp_expr(CfpKind::X, n); };
  auto P = [](int n) { return cfp_expr(CfpKind::Pi, n); };
  auto eq = [&](std::string label, WordExpr lhs, std::optional<WordExpr> rhs) {
    p.relations.push_back(Relation{std::move(label), std::move(lhs),
                                   std::move(rhs), {}});
  };
  WordExpr const ab = parse("A B^-1");
  WordExpr const B = g("B");
  WordExpr const A = g("A");
  eq("CFP1", WordExpr::commutator(ab, X(2)), std::nullopt);
  eq("CFP2", WordExpr::commutator(ab, X(3)), std::nullopt);
  eq("CFP3", C(1), B * C(2));
  eq("CFP4", C(2) * X(2), B * C(3));
  eq("CFP5", C(1) * A, WordExpr::power(C(2), 2));
  eq("CFP6", WordExpr::power(C(1), 3), std::nullopt);
  eq("CFP7", WordExpr::power(P(1), 2), std::nullopt);
  eq("CFP8", P(1) * P(3), P(3) * P(1));
  eq("CFP9", WordExpr::power(P(2) * P(1), 3), std::nullopt);
  eq("CFP10", X(3) * P(1), P(1) * X(3));
  eq("CFP11", P(1) * X(2), WordExpr::product({B, P(2), P(1)}));
  eq("CFP12", P(2) * B, B * P(3));
  eq("CFP13", P(1) * C(3), C(3) * P(2));
  eq("CFP14", WordExpr::power(P(1) * C(2), 3), std::nullopt);
  p.validate();
  return p;
}

Presentation presentation_cfp_lemma() {
  Presentation p{"cfp-lemma", names({"A", "B", "C", "pi0"}), {}, genset_cfp()};
  auto eq = [&](std::string label, WordExpr lhs, char const* rhs) {
    p.relations.push_back(Relation{std::move(label), std::move(lhs),
                                   parse(rhs), {}});
  };
  eq("(i) A B^-1", parse("A B^-1"), "<00 01> <01 10> <0 10>");
  eq("(ii) X2", cfp_expr(CfpKind::X, 2),
     "<0 11> <00 01> <00 010> <010 011> <0 11>");
  eq("(iii) X3", cfp_expr(CfpKind::X, 3),
     "<0 111> <00 01> <00 010> <010 011> <0 111>");
  eq("(iv) C2", cfp_expr(CfpKind::C, 2), "<0 10> <0 111> <110 111>");
  eq("(v) C3", cfp_expr(CfpKind::C, 3),
     "<0 110> <10 111> <0 100> <0 101> <10 110> <110 111>");
  eq("(vi) pi1", cfp_expr(CfpKind::Pi, 1), "<10 110>");
  eq("(vii) pi2", cfp_expr(CfpKind::Pi, 2), "<0 11> <00 010> <0 11>");
  eq("(viii) pi3", cfp_expr(CfpKind::Pi, 3), "<0 111> <00 010> <0 111>");
  p.validate();
  return p;
}

Presentation presentation_swap_table() {
  Presentation p{"swap-table", names({"a", "b", "c"}), {}, genset_abc()};
  for (auto const& e : swap_table().entries()) {
    WordExpr literal = WordExpr::gen(GenName(e.first, e.second));
    p.relations.push_back(Relation{e.group + " " + literal.generator().symbol(),
                                   e.word, std::move(literal), {}});
  }
  p.validate();
  return p;
}

Presentation presentation_prop51() {
  Presentation p{"prop51", names({"A", "B", "C", "pi0"}), {}, genset_cfp()};
  p.relations = {
      relation("pi0^(A C)", "pi0^(A C)", "<1 00>"),
      relation("C pi0", "C pi0", "<10 11>"),
      relation("(C pi0)^(A C)", "(C pi0)^(A C)", "<00 01>"),
      relation("pi0^(B^-1 C)", "pi0^(B^-1 C)", "<10 110>"),
      relation("<110 111>", "pi0^(B^-1 C) C pi0 B", "<110 111>"),
      with_alternate(
          relation("<01 10>",
                   "(pi0^(B^-1 C))^((pi0^(B^-1 C) C pi0 B) (C pi0) pi0 (C pi0))",
                   "<01 10>"),
          relation("<01 10> (swaps)",
                   "<10 110>^(<110 111> <10 11> <0 10> <10 11>)", "<01 10>")),
  };
  p.validate();
  return p;
}

Presentation presentation_tietze_uv() {
  Presentation p{"tietze-uv", names({"a", "b", "c", "u", "v"}), {},
                 genset_abcuv()};
  p.relations = {
      relation("a = u^3", "u^3", "a"),
      relation("b = v", "v", "b"),
      relation("c formula", "c",
               "(u^3)^(v u^-2 v u^3 v) (u^3)^(v u^-1 v u^3 v)"),
      relation("u formula", "u", "a (a^b a^(b^-1))^(c a c a^b a^(b^-1 a))"),
      relation("<10 000>", "(u^3)^(v u^-2 v u^3 v)", "<10 000>"),
      relation("<11 001>", "(u^3)^(v u^-1 v u^3 v)", "<11 001>"),
  };
  p.validate();
  return p;
}

Presentation truncated_infinite_presentation(int L, InfiniteCounts* counts) {
  if (L < 1 || L > 5) {
    throw std::invalid_argument("truncation level must be in 1..5, got "
                                + std::to_string(L));
  }
  auto const len = static_cast<std::size_t>(L);
  std::vector<Address> const addresses = enumerate_addresses(len, len);
  std::vector<std::pair<Address, Address>> pairs;
  for (std::size_t i = 0; i < addresses.size(); ++i) {
    for (std::size_t j = i + 1; j < addresses.size(); ++j) {
      if (incomparable(addresses[i], addresses[j])) {
        pairs.emplace_back(addresses[i], addresses[j]);
      }
    }
  }
  auto literal = [](Address a, Address b) {
    if (b < a) {
      std::swap(a, b);
    }
    return WordExpr::gen(GenName(std::move(a), std::move(b)));
  };

  Presentation p{"inf-L" + std::to_string(L), {}, {}, genset_swaps()};
  InfiniteCounts n;
  for (auto const& [alpha, beta] : pairs) {
    WordExpr s = literal(alpha, beta);
    p.relations.push_back(Relation{"order " + s.generator().symbol(),
                                   WordExpr::power(s, 2), std::nullopt, {}});
    ++n.order;
  }
  for (auto const& [alpha, beta] : pairs) {
    for (auto const& [gamma, delta] : pairs) {
      if (alpha == gamma && beta == delta) {
        continue;
      }
      auto a2 = swap_address_action(alpha, gamma, delta);
      auto b2 = swap_address_action(beta, gamma, delta);
      if (!a2 || !b2) {
        continue;
      }
      WordExpr s = literal(alpha, beta);
      WordExpr t = literal(gamma, delta);
      std::string label = "conjugacy " + s.generator().symbol() + "^"
                          + t.generator().symbol();
      p.relations.push_back(Relation{std::move(label),
                                     WordExpr::conjugate(s, t),
                                     literal(*a2, *b2), {}});
      ++n.conjugacy;
    }
  }
  for (auto const& [alpha, beta] : pairs) {
    if (alpha.size() + 1 > len || beta.size() + 1 > len) {
      continue;
    }
    WordExpr s = literal(alpha, beta);
    WordExpr rhs = literal(alpha.child(Letter::Zero), beta.child(Letter::Zero))
                   * literal(alpha.child(Letter::One), beta.child(Letter::One));
    p.relations.push_back(Relation{"split " + s.generator().symbol(), s,
                                   std::move(rhs), {}});
    ++n.split;
  }
  if (counts != nullptr) {
    *counts = n;
  }
  p.validate();
  return p;
}

std::vector<std::string> suite_names() {
  return {"p3",     "p3-kb",      "two-gen", "cfp",       "cfp-lemma", "inf-L2",
          "inf-L3", "swap-table", "prop51",  "tietze-uv", "section3"};
}

std::optional<Presentation> presentation_by_name(std::string_view name) {
  if (name == "p3") return presentation_P3();
  if (name == "p3-kb") return presentation_P3_kb();
  if (name == "two-gen") return presentation_2gen();
  if (name == "cfp") return presentation_cfp();
  if (name == "cfp-lemma") return presentation_cfp_lemma();
  if (name == "swap-table") return presentation_swap_table();
  if (name == "prop51") return presentation_prop51();
  if (name == "tietze-uv") return presentation_tietze_uv();
  if (name == "section3") return presentation_section3();
  if (name.size() == 6 && name.substr(0, 5) == "inf-L" && name[5] >= '1'
      && name[5] <= '5') {
    return truncated_infinite_presentation(name[5] - '0');
  }
  return std::nullopt;
}

}  // namespace cantor
