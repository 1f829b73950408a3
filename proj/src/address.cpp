#include "cantor/address.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace cantor {

std::ostream& operator<<(std::ostream& os, AddressRelation r) {
  switch (r) {
    case AddressRelation::Equal:
      return os << "Equal";
    case AddressRelation::PrefixOf:
      return os << "PrefixOf";
    case AddressRelation::ExtensionOf:
      return os << "ExtensionOf";
    case AddressRelation::Incomparable:
      return os << "Incomparable";
  }
  return os;
}

Address Address::parse(std::string_view text) {
  if (text == "e") {
    return {};
  }
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char ch : text) {
    if (ch == '0') {
      letters.push_back(Letter::Zero);
    } else if (ch == '1') {
      letters.push_back(Letter::One);
    } else {
      throw std::invalid_argument("invalid address \"" + std::string(text)
                                  + "\": expected letters 0/1 or \"e\"");
    }
  }
  return Address(std::move(letters));
}

Address Address::child(Letter x) const {
  Address out = *this;
  out.letters_.push_back(x);
  return out;
}

Address Address::parent() const {
  if (empty()) {
    throw std::logic_error("the root address has no parent");
  }
  Address out = *this;
  out.letters_.pop_back();
  return out;
}

Address Address::prefix(std::size_t n) const {
  n = std::min(n, size());
  return Address(std::vector<Letter>(letters_.begin(), letters_.begin() + n));
}

Address Address::suffix_from(std::size_t n) const {
  n = std::min(n, size());
  return Address(std::vector<Letter>(letters_.begin() + n, letters_.end()));
}

bool Address::is_prefix_of(Address const& other) const noexcept {
  return size() <= other.size()
         && std::equal(letters_.begin(), letters_.end(),
                       other.letters_.begin());
}

std::string Address::to_string() const {
  if (empty()) {
    return "e";
  }
  std::string out;
  out.reserve(size());
  for (Letter x : letters_) {
    out.push_back(to_char(x));
  }
  return out;
}

bool operator<(Address const& a, Address const& b) noexcept {
  if (a.size() != b.size()) {
    return a.size() < b.size();
  }
  return a.letters_ < b.letters_;
}

std::ostream& operator<<(std::ostream& os, Address const& a) {
  return os << a.to_string();
}

bool LexLess::operator()(Address const& a, Address const& b) const noexcept {
  auto const la = a.letters();
  auto const lb = b.letters();
  return std::lexicographical_compare(la.begin(), la.end(), lb.begin(),
                                      lb.end());
}

std::size_t AddressHash::operator()(Address const& a) const noexcept {
  // FNV-1a over the letters, mixed with the length.
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Letter x : a.letters()) {
    h = (h ^ (static_cast<std::size_t>(x) + 1)) * 0x100000001b3ULL;
  }
  return h ^ (a.size() * 0x9e3779b97f4a7c15ULL);
}

AddressRelation compare(Address const& a, Address const& b) noexcept {
  if (a == b) {
    return AddressRelation::Equal;
  }
  if (a.is_prefix_of(b)) {
    return AddressRelation::PrefixOf;
  }
  if (b.is_prefix_of(a)) {
    return AddressRelation::ExtensionOf;
  }
  return AddressRelation::Incomparable;
}

Address concat(Address const& a, Address const& b) {
  std::vector<Letter> letters(a.letters().begin(), a.letters().end());
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return Address(std::move(letters));
}

std::optional<Address> swap_address_action(Address const& g,
                                           Address const& alpha,
                                           Address const& beta) {
  if (!incomparable(alpha, beta)) {
    throw std::invalid_argument("invalid swap <" + alpha.to_string() + " "
                                + beta.to_string()
                                + ">: addresses must be incomparable");
  }
  if (alpha.is_prefix_of(g)) {
    return concat(beta, g.suffix_from(alpha.size()));
  }
  if (beta.is_prefix_of(g)) {
    return concat(alpha, g.suffix_from(beta.size()));
  }
  if (incomparable(g, alpha) && incomparable(g, beta)) {
    return g;
  }
  return std::nullopt;
}

std::size_t default_enumeration_cap() {
  constexpr std::size_t fallback = 16;
  char const* env = std::getenv("CANTOR_SWAPS_MAX_DEPTH");
  if (env == nullptr || *env == '\0') {
    return fallback;
  }
  char* end = nullptr;
  long const value = std::strtol(env, &end, 10);
  if (*end != '\0' || value < 0) {
    return fallback;
  }
  return static_cast<std::size_t>(value);
}

std::vector<Address> enumerate_addresses(std::size_t max_len,
                                         std::size_t cap) {
  if (max_len > cap) {
    throw std::length_error("address enumeration depth "
                            + std::to_string(max_len) + " exceeds cap "
                            + std::to_string(cap));
  }
  std::vector<Address> out;
  out.reserve((std::size_t{2} << max_len) - 1);
  for (std::size_t n = 0; n <= max_len; ++n) {
    auto level = addresses_of_length(n);
    out.insert(out.end(), std::make_move_iterator(level.begin()),
               std::make_move_iterator(level.end()));
  }
  return out;
}

std::vector<Address> enumerate_addresses(std::size_t max_len) {
  return enumerate_addresses(max_len, default_enumeration_cap());
}

std::vector<Address> addresses_of_length(std::size_t n) {
  std::vector<Address> out;
  std::size_t const count = std::size_t{1} << n;
  out.reserve(count);
  for (std::size_t code = 0; code < count; ++code) {
    std::vector<Letter> letters(n);
    for (std::size_t i = 0; i < n; ++i) {
      bool const bit = (code >> (n - 1 - i)) & 1U;
      letters[i] = bit ? Letter::One : Letter::Zero;
    }
    out.emplace_back(std::move(letters));
  }
  return out;
}

bool is_complete_antichain(std::span<Address const> s) {
  if (s.empty()) {
    return false;
  }
  // In lexicographic order a prefix sorts directly before its extensions, so
  // checking neighbours decides pairwise incomparability.
  std::vector<Address> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end(), LexLess{});
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    if (sorted[i].is_prefix_of(sorted[i + 1])) {
      return false;
    }
  }
  // Exact binary sum of 2^-|a|: digit k holds the coefficient of 2^-k.
  std::size_t depth = 0;
  for (auto const& a : s) {
    depth = std::max(depth, a.size());
  }
  std::vector<unsigned> digits(depth + 1, 0);
  for (auto const& a : s) {
    std::size_t k = a.size();
    ++digits[k];
    while (k > 0 && digits[k] == 2) {
      digits[k] = 0;
      ++digits[--k];
    }
    if (digits[0] > 1) {
      return false;
    }
  }
  return digits[0] == 1
         && std::all_of(digits.begin() + 1, digits.end(),
                        [](unsigned d) { return d == 0; });
}

namespace literals {
Address operator""_addr(char const* text, std::size_t len) {
  return Address::parse(std::string_view(text, len));
}
}  // namespace literals

}  // namespace cantor
