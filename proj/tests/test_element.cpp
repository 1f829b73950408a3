#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <string>
#include <vector>

#include "cantor/element.hpp"
#include "cantor/presentations.hpp"
#include "support/oracle.hpp"

using namespace cantor;
using namespace cantor::literals;

namespace {

VElement sw(char const* a, char const* b) {
  return VElement::from_swap(Address::parse(a), Address::parse(b));
}

std::vector<PrefixPair> table(
    std::initializer_list<std::pair<char const*, char const*>> rows) {
  std::vector<PrefixPair> out;
  for (auto [d, r] : rows) out.push_back({Address::parse(d), Address::parse(r)});
  return out;
}

std::vector<std::size_t> numbers(VElement const& f) {
  return to_tree_pair(f).range_numbers;
}

}  // namespace

TEST_CASE("from_swap") {
  CHECK(sw("100", "11").pairs() ==
        table({{"0", "0"}, {"11", "100"}, {"100", "11"}, {"101", "101"}}));
  CHECK(sw("0", "1").pairs() == table({{"0", "1"}, {"1", "0"}}));
  CHECK_THROWS_AS(sw("0", "01"), std::invalid_argument);
  CHECK_THROWS_AS(sw("", "1"), std::invalid_argument);
}

TEST_CASE("identity") {
  VElement e = VElement::identity();
  CHECK(e.pairs() == table({{"e", "e"}}));
  CHECK(e.is_identity());
  CHECK(inverse(e) == e);
  CHECK(e * sw("1", "00") == sw("1", "00"));
  CHECK(sw("1", "00") * e == sw("1", "00"));
}

TEST_CASE("compose") {
  CHECK((sw("0", "1") * sw("0", "1")).is_identity());
  CHECK(sw("00", "10") * sw("01", "11") == sw("0", "1"));
  // Frozen: <00 01> then <1 00> sends 00 -> 01, 01 -> 1, 1 -> 00.
  CHECK((sw("00", "01") * sw("1", "00")).pairs() ==
        table({{"1", "00"}, {"00", "01"}, {"01", "1"}}));
}

TEST_CASE("compose matches the pointwise oracle on the frozen example") {
  VElement h = sw("00", "01") * sw("1", "00");
  CHECK(oracle::agrees(h, {{"00"_addr, "01"_addr}, {"1"_addr, "00"_addr}}));
  auto t = oracle::push_swaps({{"00"_addr, "01"_addr}, {"1"_addr, "00"_addr}});
  CHECK(oracle::images_at(t, 3) == oracle::images_at(h, 3));
}

TEST_CASE("inverse") {
  CHECK(inverse(sw("1", "00")) == sw("1", "00"));
  oracle::Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    VElement f = oracle::product(oracle::random_swaps(rng, 6, 4));
    VElement g = oracle::product(oracle::random_swaps(rng, 6, 4));
    CHECK(inverse(f * g) == inverse(g) * inverse(f));
    CHECK((f * inverse(f)).is_identity());
  }
}

TEST_CASE("canonicalize") {
  CHECK(canonicalize(table({{"00", "10"}, {"01", "11"}, {"1", "0"}})).pairs() ==
        table({{"0", "1"}, {"1", "0"}}));
  VElement f = sw("100", "11");
  CHECK(canonicalize(f.pairs()) == f);

  std::vector<PrefixPair> expanded;
  for (auto const& g : addresses_of_length(3)) expanded.push_back({g, g});
  CHECK(expanded.size() == 8);
  CHECK(canonicalize(expanded).is_identity());

  CHECK_THROWS_AS(canonicalize(table({{"0", "0"}, {"1", "0"}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(canonicalize(table({{"0", "0"}, {"10", "1"}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(canonicalize(table({{"0", "0"}, {"1", "11"}})),
                  std::invalid_argument);
}

TEST_CASE("equals") {
  CHECK(equals(sw("0", "1"), sw("00", "10") * sw("01", "11")));
  CHECK_FALSE(equals(sw("00", "01"), sw("00", "10")));
}

TEST_CASE("act_address") {
  VElement c = sw("1", "00");
  CHECK(c.act("00"_addr) == "1"_addr);
  CHECK(c.act("01"_addr) == "01"_addr);
  CHECK(c.act("1101"_addr) == "00101"_addr);
  CHECK_FALSE(c.act(""_addr).has_value());
  CHECK_FALSE(c.act("0"_addr).has_value());
}

TEST_CASE("order_of") {
  CHECK(order_of(VElement::identity()) == 1u);
  CHECK(order_of(sw("0", "1")) == 2u);
  CHECK(order_of(genset_uv().image("u")) == 6u);
  CHECK(order_of(genset_uv().image("v")) == 3u);
  CHECK_FALSE(order_of(genset_uv().image("u"), 5).has_value());
}

TEST_CASE("power") {
  VElement u = genset_uv().image("u");
  CHECK(power(u, 0).is_identity());
  CHECK(power(u, 6).is_identity());
  CHECK(power(u, -1) == inverse(u));
  CHECK(power(u, 7) == u);
  CHECK(power(u, -4) == power(u, 2));
}

TEST_CASE("tree pairs") {
  TreePair tp = to_tree_pair(sw("100", "11"));
  CHECK(tp.domain_leaves ==
        std::vector<Address>{"0"_addr, "100"_addr, "101"_addr, "11"_addr});
  CHECK(tp.range_leaves == tp.domain_leaves);
  CHECK(tp.range_numbers == std::vector<std::size_t>{1, 4, 3, 2});

  TreePair id = to_tree_pair(VElement::identity());
  CHECK(id.leaf_count() == 1);
  CHECK(id.range_numbers == std::vector<std::size_t>{1});

  CHECK(numbers(genset_uv().image("u")) ==
        std::vector<std::size_t>{2, 1, 5, 3, 4});
  CHECK(numbers(genset_uv().image("v")) ==
        std::vector<std::size_t>{1, 4, 2, 3});
}

TEST_CASE("tree pair rendering") {
  TreePair tp = to_tree_pair(sw("100", "11"));
  std::string ascii = render_ascii(tp);
  CHECK(ascii.find("100") != std::string::npos);
  std::string dot = render_dot(tp);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("cluster") != std::string::npos);
}

TEST_CASE("supports_disjoint") {
  CHECK(supports_disjoint(sw("00", "010"), sw("10", "111")));
  CHECK_FALSE(supports_disjoint(sw("0", "10"), sw("00", "01")));
  CHECK(supports_disjoint(VElement::identity(), sw("0", "1")));
  CHECK(moved_cones(VElement::identity()).empty());
}

TEST_CASE("dump round trip") {
  VElement f = genset_uv().image("u");
  std::string text = dump(f);
  CHECK(text.rfind("velement v1 n=5\n", 0) == 0);
  CHECK(parse_dump(text) == f);
  CHECK(parse_dump("# comment\n00 -> 10\n01 -> 11\n\n1 -> 0\n") ==
        sw("0", "1"));
  CHECK_THROWS_AS(parse_dump("velement v1 n=3\n0 -> 1\n1 -> 0\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_dump("0 -> 1\n1 => 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_dump("0 -> 1\n"), std::invalid_argument);
}

TEST_CASE("involution law, lengths up to 4") {
  for (auto const& [a, b] : oracle::all_swaps(4)) {
    VElement t = VElement::from_swap(a, b);
    CHECK((t * t).is_identity());
  }
}

TEST_CASE("conjugation law, lengths up to 3") {
  auto swaps = oracle::all_swaps(3);
  CHECK(swaps.size() == 71);
  std::size_t instances = 0;
  for (auto const& [a, b] : swaps) {
    VElement x = VElement::from_swap(a, b);
    for (auto const& [g, d] : swaps) {
      auto a2 = swap_address_action(a, g, d);
      auto b2 = swap_address_action(b, g, d);
      if (!a2 || !b2) continue;
      VElement t = VElement::from_swap(g, d);
      CHECK(inverse(t) * x * t == VElement::from_swap(*a2, *b2));
      ++instances;
    }
  }
  CHECK(instances > 0);
}

TEST_CASE("split law, lengths up to 3") {
  for (auto const& [a, b] : oracle::all_swaps(3)) {
    VElement lhs = VElement::from_swap(a, b);
    VElement rhs = VElement::from_swap(a.child(Letter::Zero), b.child(Letter::Zero)) *
                   VElement::from_swap(a.child(Letter::One), b.child(Letter::One));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("property: group axioms and oracle agreement") {
  oracle::Rng rng(20240501);
  for (int i = 0; i < 200; ++i) {
    auto ws = oracle::random_swaps(rng, 8, 4);
    VElement f = oracle::product(ws);
    VElement g = oracle::product(oracle::random_swaps(rng, 8, 4));
    VElement h = oracle::product(oracle::random_swaps(rng, 8, 4));
    CHECK((f * g) * h == f * (g * h));
    CHECK(oracle::agrees(f, ws));
  }
}

TEST_CASE("property: action compatibility") {
  oracle::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    VElement f = oracle::product(oracle::random_swaps(rng, 5, 4));
    VElement g = oracle::product(oracle::random_swaps(rng, 5, 4));
    Address gamma = oracle::random_address(rng, 0, 7);
    auto mid = f.act(gamma);
    if (!mid) continue;
    auto right = g.act(*mid);
    if (!right) continue;
    CHECK((f * g).act(gamma) == right);
  }
}

TEST_CASE("property: disjoint supports commute") {
  oracle::Rng rng(99);
  int disjoint = 0;
  for (int i = 0; i < 300; ++i) {
    auto [a, b] = oracle::random_swap(rng, 4);
    auto [c, d] = oracle::random_swap(rng, 4);
    VElement x = VElement::from_swap(a, b);
    VElement y = VElement::from_swap(c, d);
    if (supports_disjoint(x, y)) {
      ++disjoint;
      CHECK(x * y == y * x);
    }
  }
  CHECK(disjoint > 20);
}
