// Test-only oracles and seeded generators.
//
// The pointwise oracle pushes cones through a list of swaps with nothing
// but swap_address_action, splitting a cone whenever the action on it is
// undefined.  It never touches compose or canonicalize.

#ifndef CANTOR_TESTS_ORACLE_HPP_
#define CANTOR_TESTS_ORACLE_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cantor/address.hpp"
#include "cantor/element.hpp"

namespace oracle {

using cantor::Address;
using cantor::Letter;

using Swap = std::pair<Address, Address>;
using Table = std::vector<std::pair<Address, Address>>;  // domain -> image

inline Table push_swaps(std::vector<Swap> const& swaps) {
  Table cur{{Address{}, Address{}}};
  for (auto const& [alpha, beta] : swaps) {
    Table next;
    std::vector<std::pair<Address, Address>> todo(cur.rbegin(), cur.rend());
    while (!todo.empty()) {
      auto [d, r] = todo.back();
      todo.pop_back();
      if (auto img = cantor::swap_address_action(r, alpha, beta)) {
        next.emplace_back(d, *img);
      } else {
        todo.emplace_back(d.child(Letter::One), r.child(Letter::One));
        todo.emplace_back(d.child(Letter::Zero), r.child(Letter::Zero));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

inline std::optional<Address> table_act(Table const& t, Address const& g) {
  for (auto const& [d, r] : t) {
    if (d.is_prefix_of(g)) return cantor::concat(r, g.suffix_from(d.size()));
  }
  return std::nullopt;
}

inline std::size_t table_depth(Table const& t) {
  std::size_t n = 0;
  for (auto const& [d, r] : t) n = std::max({n, d.size(), r.size()});
  return n;
}

// Images of every address of length n.
inline std::vector<Address> images_at(Table const& t, std::size_t n) {
  std::vector<Address> out;
  for (auto const& g : cantor::addresses_of_length(n)) {
    out.push_back(table_act(t, g).value());
  }
  return out;
}

inline std::vector<Address> images_at(cantor::VElement const& f,
                                      std::size_t n) {
  std::vector<Address> out;
  for (auto const& g : cantor::addresses_of_length(n)) {
    out.push_back(f.act(g).value());
  }
  return out;
}

// True when f agrees with the swap product on every address of length n,
// for n at least as deep as both tables.
inline bool agrees(cantor::VElement const& f, std::vector<Swap> const& swaps) {
  Table t = push_swaps(swaps);
  std::size_t n = std::max(table_depth(t), f.max_depth());
  return images_at(f, n) == images_at(t, n);
}

inline bool same_map(std::vector<Swap> const& x, std::vector<Swap> const& y) {
  Table tx = push_swaps(x);
  Table ty = push_swaps(y);
  std::size_t n = std::max(table_depth(tx), table_depth(ty));
  return images_at(tx, n) == images_at(ty, n);
}

// ---------------------------------------------------------------------------
// Generators

using Rng = std::mt19937_64;

inline Address random_address(Rng& rng, std::size_t min_len,
                              std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::bernoulli_distribution bit;
  std::vector<Letter> letters(len(rng));
  for (auto& x : letters) x = bit(rng) ? Letter::One : Letter::Zero;
  return Address(std::move(letters));
}

inline Swap random_swap(Rng& rng, std::size_t max_len) {
  for (;;) {
    Address a = random_address(rng, 1, max_len);
    Address b = random_address(rng, 1, max_len);
    if (cantor::incomparable(a, b)) return {a, b};
  }
}

inline std::vector<Swap> random_swaps(Rng& rng, std::size_t max_count,
                                      std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> count(0, max_count);
  std::vector<Swap> out(count(rng));
  for (auto& s : out) s = random_swap(rng, max_len);
  return out;
}

inline cantor::VElement product(std::vector<Swap> const& swaps) {
  cantor::VElement f;
  for (auto const& [a, b] : swaps) f = f * cantor::VElement::from_swap(a, b);
  return f;
}

// Every unordered incomparable pair with both lengths in [1, max_len].
inline std::vector<Swap> all_swaps(std::size_t max_len) {
  std::vector<Address> pts = cantor::enumerate_addresses(max_len);
  std::vector<Swap> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (cantor::incomparable(pts[i], pts[j])) out.emplace_back(pts[i], pts[j]);
    }
  }
  return out;
}

}  // namespace oracle

#endif  // CANTOR_TESTS_ORACLE_HPP_
