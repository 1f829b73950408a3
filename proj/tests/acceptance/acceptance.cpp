// Acceptance run: one PASS/FAIL line per criterion, with its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cantor/algorithms.hpp"
#include "cantor/cli.hpp"
#include "support/oracle.hpp"

using namespace cantor;

namespace {

struct Check {
  std::vector<std::string> problems;

  void expect(bool ok, std::string what) {
    if (!ok) problems.push_back(std::move(what));
  }
};

struct CliResult {
  int code;
  std::string out;
};

CliResult cli_run(std::vector<std::string> const& args,
                  std::string const& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str() + err.str()};
}

void expect_suite(Check& c, std::string const& name, std::size_t total) {
  CliResult r = cli_run({"verify", "--lines", name});
  std::string want = name + "\t" + std::to_string(total) + "\t" +
                     std::to_string(total) + "\n";
  c.expect(r.code == cli::kExitOk && r.out == want,
           "verify " + name + " gave \"" + r.out + "\"");
}

VElement sw(char const* a, char const* b) {
  return VElement::from_swap(Address::parse(a), Address::parse(b));
}

void criterion1(Check& c) { expect_suite(c, "p3", 8); }
void criterion2(Check& c) { expect_suite(c, "p3-kb", 8); }

void criterion3(Check& c) {
  expect_suite(c, "two-gen", 7);
  c.expect(order_of(genset_uv().image("u")) == 6u, "order of u");
  c.expect(order_of(genset_uv().image("v")) == 3u, "order of v");
}

void criterion4(Check& c) {
  expect_suite(c, "cfp", 14);
  expect_suite(c, "cfp-lemma", 8);
  GeneratingSet const& g = genset_cfp();
  c.expect(g.eval("A B^-1") == sw("00", "01") * sw("01", "10") * sw("0", "10"),
           "A B^-1");
  c.expect(derived_cfp(CfpKind::Pi, 1) == sw("10", "110"), "pi1");
}

void criterion5(Check& c) {
  expect_suite(c, "swap-table", 71);
  c.expect(oracle::all_swaps(3).size() == 71, "pair count");
  for (auto const& [a, b] : oracle::all_swaps(3)) {
    auto const* e = swap_table().find(a, b);
    c.expect(e && genset_abc().eval(e->word) == VElement::from_swap(a, b),
             "entry <" + a.to_string() + " " + b.to_string() + ">");
  }
}

void criterion6(Check& c) {
  InfiniteCounts n;
  Presentation p = truncated_infinite_presentation(3, &n);
  std::printf("  inf-L3 instances: order %zu, conjugacy %zu, split %zu\n",
              n.order, n.conjugacy, n.split);
  c.expect(n.order == 71 && n.conjugacy == 3496 && n.split == 11,
           "frozen counts");
  expect_suite(c, "inf-L3", p.relations.size());
}

void criterion7(Check& c) { expect_suite(c, "section3", 3876); }

void criterion8(Check& c) {
  expect_suite(c, "prop51", 6);
  expect_suite(c, "tietze-uv", 6);
  c.expect(verify_prop51().ok(), "verify_prop51");
  c.expect(verify_tietze_uv().ok(), "verify_tietze_uv");
}

void criterion9(Check& c) {
  using N = std::vector<std::size_t>;
  TreePair f3 = to_tree_pair(sw("100", "11"));
  c.expect(f3.leaf_count() == 4 && f3.range_numbers == N{1, 4, 3, 2},
           "<100 11> numbering");
  c.expect(to_tree_pair(genset_uv().image("u")).range_numbers ==
               N{2, 1, 5, 3, 4},
           "u numbering");
  c.expect(to_tree_pair(genset_uv().image("v")).range_numbers == N{1, 4, 2, 3},
           "v numbering");
}

// Swap lists for a, b, c and their inverses.
std::vector<oracle::Swap> letter_swaps(int letter, bool inverted) {
  using cantor::literals::operator""_addr;
  std::vector<oracle::Swap> s;
  switch (letter) {
    case 0: s = {{"00"_addr, "01"_addr}}; break;
    case 1: s = {{"01"_addr, "10"_addr}, {"01"_addr, "11"_addr}}; break;
    default: s = {{"1"_addr, "00"_addr}}; break;
  }
  if (inverted) s = std::vector<oracle::Swap>(s.rbegin(), s.rend());
  return s;
}

void criterion10(Check& c) {
  oracle::Rng rng(0x5eed);

  for (int i = 0; i < 500; ++i) {
    VElement f = oracle::product(oracle::random_swaps(rng, 8, 4));
    VElement g = oracle::product(oracle::random_swaps(rng, 8, 4));
    VElement h = oracle::product(oracle::random_swaps(rng, 8, 4));
    c.expect((f * g) * h == f * (g * h), "associativity");
    c.expect(f * VElement::identity() == f && VElement::identity() * f == f,
             "identity");
    c.expect((f * inverse(f)).is_identity(), "inverse");
  }

  // Random abc words; the second word of each pair is the first with a
  // relator inserted half the time, so both outcomes of equals occur.
  static char const* const names[] = {"a", "b", "c"};
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<std::size_t> len(0, 12);
  std::bernoulli_distribution coin;
  std::size_t equal_pairs = 0;
  for (int i = 0; i < 1000; ++i) {
    Word w;
    std::vector<oracle::Swap> swaps;
    for (std::size_t k = len(rng); k > 0; --k) {
      int x = pick(rng);
      bool inv = coin(rng);
      w.push_back({GenName(names[x]), inv ? -1 : 1});
      auto s = letter_swaps(x, inv);
      swaps.insert(swaps.end(), s.begin(), s.end());
    }
    VElement f = genset_abc().eval(w);
    c.expect(oracle::agrees(f, swaps), "oracle agreement " + format(w));

    Word w2 = w;
    std::vector<oracle::Swap> swaps2 = swaps;
    if (coin(rng)) {
      Word rel = flatten(parse("(a b)^4"));
      w2.insert(w2.end(), rel.begin(), rel.end());
      for (int k = 0; k < 4; ++k) {
        for (int x : {0, 1}) {
          auto s = letter_swaps(x, false);
          swaps2.insert(swaps2.end(), s.begin(), s.end());
        }
      }
    } else {
      int x = pick(rng);
      auto s = letter_swaps(x, false);
      swaps2.insert(swaps2.end(), s.begin(), s.end());
      w2.push_back({GenName(names[x]), 1});
    }
    bool same = genset_abc().eval(w2) == f;
    equal_pairs += same ? 1 : 0;
    c.expect(same == oracle::same_map(swaps, swaps2), "equals vs oracle");
  }
  c.expect(equal_pairs > 100 && equal_pairs < 1000, "both equality outcomes");

  for (auto const& [a, b] : oracle::all_swaps(4)) {
    Word w = decompose_swap(a, b);
    std::vector<oracle::Swap> ws;
    for (auto const& l : w) ws.emplace_back(l.gen.swap().first, l.gen.swap().second);
    c.expect(oracle::same_map(ws, {{a, b}}) &&
                 genset_swaps().eval(w) == VElement::from_swap(a, b),
             "decompose <" + a.to_string() + " " + b.to_string() + ">");
  }

  for (int i = 0; i < 500; ++i) {
    auto w = oracle::random_swaps(rng, 9, 4);
    auto e = even_factorization(w);
    c.expect(e.size() % 2 == 0 && e.size() <= w.size() + 1, "parity");
    c.expect(product_of_swaps(e) == product_of_swaps(w) &&
                 oracle::same_map(e, w),
             "product preserved");
  }

  std::size_t disjoint = 0;
  for (int i = 0; i < 500; ++i) {
    auto [a, b] = oracle::random_swap(rng, 4);
    auto [x, y] = oracle::random_swap(rng, 4);
    VElement s = VElement::from_swap(a, b);
    VElement t = VElement::from_swap(x, y);
    if (supports_disjoint(s, t)) {
      ++disjoint;
      c.expect(s * t == t * s, "disjoint supports commute");
    }
  }
  c.expect(disjoint > 0, "some disjoint pairs");
}

void criterion11(Check& c) {
  Presentation p = presentation_P3();
  p.relations.push_back(relation("sabotage", "a"));
  VerificationReport r = run_suite(p);
  c.expect(!r.ok() && r.failures.size() == 1 && r.passed == 8 &&
               r.total == 9,
           "library report");

  Presentation q = presentation_cfp();
  q.relations[8] = relation("CFP9 broken", "(pi0 A)^3");
  c.expect(run_suite(q).failures.size() == 1, "broken CFP9");

  CliResult bad = cli_run({"verify", "--file", "-"}, "(a b)^4\na b\n");
  c.expect(bad.code != 0 && bad.code == cli::kExitFailed, "cli exit code");
  c.expect(bad.out.find("FAIL") != std::string::npos, "cli failure listing");

  CliResult uv = cli_run({"verify", "--file", "-", "--gens", "uv"}, "u^5\n");
  c.expect(uv.code == cli::kExitFailed, "u^5 is not a relator");
}

struct Criterion {
  int number;
  char const* name;
  double limit_seconds;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  std::vector<Criterion> const criteria = {
      {1, "verify p3", 1, criterion1},
      {2, "verify p3-kb", 1, criterion2},
      {3, "verify two-gen, orders of u and v", 1, criterion3},
      {4, "verify cfp and cfp-lemma", 1, criterion4},
      {5, "verify swap-table", 2, criterion5},
      {6, "verify inf-L3 with frozen counts", 10, criterion6},
      {7, "verify section3", 10, criterion7},
      {8, "verify prop51 and tietze-uv", 1, criterion8},
      {9, "tree-pair leaf numbering", 1, criterion9},
      {10, "property suite", 60, criterion10},
      {11, "negative controls", 1, criterion11},
  };

  int failed = 0;
  for (auto const& cr : criteria) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.run(check);
    } catch (std::exception const& e) {
      check.problems.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    if (secs > cr.limit_seconds) {
      check.problems.push_back("took " + std::to_string(secs) + " s");
    }
    bool ok = check.problems.empty();
    failed += ok ? 0 : 1;
    std::printf("%s %2d %-36s %8.3f s (limit %g s)\n", ok ? "PASS" : "FAIL",
                cr.number, cr.name, secs, cr.limit_seconds);
    for (std::size_t i = 0; i < check.problems.size() && i < 5; ++i) {
      std::printf("    %s\n", check.problems[i].c_str());
    }
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
