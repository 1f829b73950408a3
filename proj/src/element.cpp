#include "cantor/element.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cantor {

namespace {

using LexMap = std::map<Address, Address, LexLess>;

void validate_table(std::vector<PrefixPair> const& pairs) {
  std::vector<Address> domains;
  std::vector<Address> ranges;
  domains.reserve(pairs.size());
  ranges.reserve(pairs.size());
  for (auto const& p : pairs) {
    domains.push_back(p.domain);
    ranges.push_back(p.range);
  }
  if (!is_complete_antichain(domains)) {
    throw std::invalid_argument(
        "malformed pair table: domain addresses are not a complete antichain");
  }
  if (!is_complete_antichain(ranges)) {
    throw std::invalid_argument(
        "malformed pair table: range addresses are not a complete antichain");
  }
}

// Refines the complete antichain {root} until every target is a leaf.
std::vector<Address> leaves_containing(std::vector<Address> const& targets) {
  std::set<Address> leaves{Address{}};
  for (auto const& t : targets) {
    for (;;) {
      auto it = std::find_if(leaves.begin(), leaves.end(),
                             [&](Address const& a) { return a.is_prefix_of(t); });
      if (it == leaves.end() || *it == t) {
        break;
      }
      Address const node = *it;
      leaves.erase(it);
      leaves.insert(node.child(Letter::Zero));
      leaves.insert(node.child(Letter::One));
    }
  }
  return {leaves.begin(), leaves.end()};
}

void sort_canonical(std::vector<PrefixPair>& pairs) {
  std::sort(pairs.begin(), pairs.end(),
            [](PrefixPair const& a, PrefixPair const& b) {
              return a.domain < b.domain;
            });
}

}  // namespace

VElement::VElement() : pairs_{PrefixPair{Address{}, Address{}}} {}

VElement VElement::from_swap(Address const& alpha, Address const& beta) {
  if (!incomparable(alpha, beta)) {
    throw std::invalid_argument("invalid swap <" + alpha.to_string() + " "
                                + beta.to_string()
                                + ">: addresses must be incomparable");
  }
  std::vector<PrefixPair> pairs;
  for (auto const& leaf : leaves_containing({alpha, beta})) {
    if (leaf == alpha) {
      pairs.push_back({alpha, beta});
    } else if (leaf == beta) {
      pairs.push_back({beta, alpha});
    } else {
      pairs.push_back({leaf, leaf});
    }
  }
  return canonicalize(std::move(pairs));
}

VElement VElement::from_pairs(std::vector<PrefixPair> pairs) {
  return canonicalize(std::move(pairs));
}

bool VElement::is_identity() const noexcept {
  return pairs_.size() == 1 && pairs_.front().domain.empty()
         && pairs_.front().range.empty();
}

std::size_t VElement::max_depth() const noexcept {
  std::size_t depth = 0;
  for (auto const& p : pairs_) {
    depth = std::max({depth, p.domain.size(), p.range.size()});
  }
  return depth;
}

std::optional<Address> VElement::act(Address const& g) const {
  for (auto const& p : pairs_) {
    if (p.domain.is_prefix_of(g)) {
      return concat(p.range, g.suffix_from(p.domain.size()));
    }
  }
  return std::nullopt;
}

VElement canonicalize(std::vector<PrefixPair> pairs) {
  validate_table(pairs);
  LexMap table;
  for (auto& p : pairs) {
    table.emplace(std::move(p.domain), std::move(p.range));
  }

  bool merged = true;
  while (merged) {
    merged = false;
    for (auto it = table.begin(); it != table.end();) {
      Address const& d0 = it->first;
      Address const& r0 = it->second;
      if (d0.empty() || d0.back() != Letter::Zero || r0.empty()
          || r0.back() != Letter::Zero) {
        ++it;
        continue;
      }
      auto sib = table.find(d0.parent().child(Letter::One));
      if (sib == table.end() || sib->second != r0.parent().child(Letter::One)) {
        ++it;
        continue;
      }
      Address parent_domain = d0.parent();
      Address parent_range = r0.parent();
      table.erase(sib);
      it = table.erase(it);
      it = table.emplace_hint(it, std::move(parent_domain),
                              std::move(parent_range));
      merged = true;
    }
  }

  std::vector<PrefixPair> out;
  out.reserve(table.size());
  for (auto& [d, r] : table) {
    out.push_back({d, r});
  }
  sort_canonical(out);
  return VElement(std::move(out));
}

VElement compose(VElement const& f, VElement const& g) {
  LexMap g_table;
  for (auto const& p : g.pairs()) {
    g_table.emplace(p.domain, p.range);
  }

  std::vector<PrefixPair> out;
  out.reserve(f.size() + g.size());
  for (auto const& [d, r] : f.pairs()) {
    // Either some g-domain is a prefix of r, or r is a proper prefix of a
    // complete antichain of g-domains below it.
    bool matched = false;
    for (std::size_t n = 0; n <= r.size() && !matched; ++n) {
      auto hit = g_table.find(r.prefix(n));
      if (hit != g_table.end()) {
        out.push_back({d, concat(hit->second, r.suffix_from(n))});
        matched = true;
      }
    }
    if (matched) {
      continue;
    }
    for (auto it = g_table.lower_bound(r);
         it != g_table.end() && r.is_prefix_of(it->first); ++it) {
      out.push_back({concat(d, it->first.suffix_from(r.size())), it->second});
    }
  }
  return canonicalize(std::move(out));
}

VElement inverse(VElement const& f) {
  std::vector<PrefixPair> out;
  out.reserve(f.size());
  for (auto const& p : f.pairs()) {
    out.push_back({p.range, p.domain});
  }
  return canonicalize(std::move(out));
}

VElement power(VElement const& f, long long n) {
  VElement base = n < 0 ? inverse(f) : f;
  unsigned long long e = n < 0 ? 0ULL - static_cast<unsigned long long>(n)
                               : static_cast<unsigned long long>(n);
  VElement result;
  while (e > 0) {
    if (e & 1U) {
      result = result * base;
    }
    e >>= 1U;
    if (e > 0) {
      base = base * base;
    }
  }
  return result;
}

std::optional<std::size_t> order_of(VElement const& f, std::size_t cap) {
  if (cap == 0) {
    throw std::invalid_argument("order_of: cap must be at least 1");
  }
  VElement acc = f;
  for (std::size_t k = 1; k <= cap; ++k) {
    if (acc.is_identity()) {
      return k;
    }
    acc = acc * f;
  }
  return std::nullopt;
}

std::vector<Address> moved_cones(VElement const& f) {
  std::vector<Address> cones;
  for (auto const& p : f.pairs()) {
    if (p.domain != p.range) {
      cones.push_back(p.domain);
      cones.push_back(p.range);
    }
  }
  return cones;
}

bool supports_disjoint(VElement const& f, VElement const& g) {
  auto const mf = moved_cones(f);
  auto const mg = moved_cones(g);
  for (auto const& a : mf) {
    for (auto const& b : mg) {
      if (!incomparable(a, b)) {
        return false;
      }
    }
  }
  return true;
}

std::string dump(VElement const& f) {
  std::ostringstream os;
  os << "velement v1 n=" << f.size() << '\n';
  for (auto const& p : f.pairs()) {
    os << p.domain << " -> " << p.range << '\n';
  }
  return os.str();
}

VElement parse_dump(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::size_t> declared;
  std::vector<PrefixPair> pairs;
  std::size_t line_no = 0;
  auto fail = [&](std::string const& why) {
    throw std::invalid_argument("element dump line " + std::to_string(line_no)
                                + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) {
      continue;
    }
    if (first == "velement") {
      std::string version;
      std::string count;
      if (!pairs.empty() || declared || !(fields >> version >> count)
          || version != "v1" || count.rfind("n=", 0) != 0) {
        fail("bad header");
      }
      try {
        declared = std::stoul(count.substr(2));
      } catch (std::exception const&) {
        fail("bad pair count");
      }
      continue;
    }
    std::string arrow;
    std::string second;
    std::string extra;
    if (!(fields >> arrow >> second) || arrow != "->" || (fields >> extra)) {
      fail("expected `domain -> range`");
    }
    try {
      pairs.push_back({Address::parse(first), Address::parse(second)});
    } catch (std::invalid_argument const& e) {
      fail(e.what());
    }
  }
  if (declared && *declared != pairs.size()) {
    throw std::invalid_argument("element dump declares n="
                                + std::to_string(*declared) + " but lists "
                                + std::to_string(pairs.size()) + " pairs");
  }
  if (pairs.empty()) {
    throw std::invalid_argument("element dump lists no pairs");
  }
  return canonicalize(std::move(pairs));
}

std::ostream& operator<<(std::ostream& os, VElement const& f) {
  os << '{';
  bool first = true;
  for (auto const& p : f.pairs()) {
    os << (first ? "" : ", ") << '(' << p.domain << ',' << p.range << ')';
    first = false;
  }
  return os << '}';
}

TreePair to_tree_pair(VElement const& f) {
  std::vector<PrefixPair> by_domain = f.pairs();
  std::sort(by_domain.begin(), by_domain.end(),
            [](PrefixPair const& a, PrefixPair const& b) {
              return LexLess{}(a.domain, b.domain);
            });
  TreePair tp;
  std::map<Address, std::size_t, LexLess> number_of_range;
  for (std::size_t i = 0; i < by_domain.size(); ++i) {
    tp.domain_leaves.push_back(by_domain[i].domain);
    number_of_range.emplace(by_domain[i].range, i + 1);
  }
  for (auto const& [leaf, number] : number_of_range) {
    tp.range_leaves.push_back(leaf);
    tp.range_numbers.push_back(number);
  }
  return tp;
}

namespace {

// One tree as indented lines, leaves annotated with their numbers.
std::vector<std::string> tree_lines(std::vector<Address> const& leaves,
                                    std::vector<std::size_t> const& numbers) {
  std::map<Address, std::size_t, LexLess> label;
  std::set<Address, LexLess> internal;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    label.emplace(leaves[i], numbers[i]);
    for (std::size_t n = 0; n < leaves[i].size(); ++n) {
      internal.insert(leaves[i].prefix(n));
    }
  }

  std::vector<std::string> lines;
  auto describe = [&](Address const& node) {
    std::string text = node.empty() ? "*" : node.to_string();
    if (auto it = label.find(node); it != label.end()) {
      text += " (" + std::to_string(it->second) + ")";
    }
    return text;
  };
  auto walk = [&](auto&& self, Address const& node,
                  std::string const& indent) -> void {
    if (!internal.contains(node)) {
      return;
    }
    for (Letter x : {Letter::Zero, Letter::One}) {
      bool const last = x == Letter::One;
      Address const kid = node.child(x);
      lines.push_back(indent + (last ? "`-" : "+-") + describe(kid));
      self(self, kid, indent + (last ? "  " : "| "));
    }
  };
  lines.push_back(describe(Address{}));
  walk(walk, Address{}, "");
  return lines;
}

std::string dot_id(char side, Address const& a) {
  return std::string(1, side) + "_" + a.to_string();
}

void dot_tree(std::ostream& os, char side, std::string const& title,
              std::vector<Address> const& leaves,
              std::vector<std::size_t> const& numbers) {
  std::set<Address> internal;
  for (auto const& leaf : leaves) {
    for (std::size_t n = 0; n < leaf.size(); ++n) {
      internal.insert(leaf.prefix(n));
    }
  }
  os << "  subgraph cluster_" << title << " {\n";
  os << "    label=\"" << title << "\";\n";
  for (auto const& node : internal) {
    os << "    " << dot_id(side, node) << " [shape=point];\n";
  }
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    os << "    " << dot_id(side, leaves[i]) << " [shape=plaintext, label=\""
       << numbers[i] << "\"];\n";
  }
  for (auto const& node : internal) {
    for (Letter x : {Letter::Zero, Letter::One}) {
      os << "    " << dot_id(side, node) << " -> "
         << dot_id(side, node.child(x)) << ";\n";
    }
  }
  os << "  }\n";
}

}  // namespace

std::string render_ascii(TreePair const& tp) {
  std::vector<std::size_t> domain_numbers(tp.leaf_count());
  for (std::size_t i = 0; i < domain_numbers.size(); ++i) {
    domain_numbers[i] = i + 1;
  }
  auto const left = tree_lines(tp.domain_leaves, domain_numbers);
  auto const right = tree_lines(tp.range_leaves, tp.range_numbers);

  std::size_t width = 0;
  for (auto const& l : left) {
    width = std::max(width, l.size());
  }
  std::ostringstream os;
  std::size_t const rows = std::max(left.size(), right.size());
  for (std::size_t i = 0; i < rows; ++i) {
    std::string l = i < left.size() ? left[i] : "";
    l.resize(width, ' ');
    std::string const r = i < right.size() ? right[i] : "";
    std::string line = l + (i == 0 ? "  -->  " : "       ") + r;
    while (!line.empty() && line.back() == ' ') {
      line.pop_back();
    }
    os << line << '\n';
  }
  return os.str();
}

std::string render_dot(TreePair const& tp) {
  std::vector<std::size_t> domain_numbers(tp.leaf_count());
  for (std::size_t i = 0; i < domain_numbers.size(); ++i) {
    domain_numbers[i] = i + 1;
  }
  std::ostringstream os;
  os << "digraph treepair {\n";
  os << "  node [fontname=\"Helvetica\"];\n";
  dot_tree(os, 'd', "domain", tp.domain_leaves, domain_numbers);
  dot_tree(os, 'r', "range", tp.range_leaves, tp.range_numbers);
  os << "}\n";
  return os.str();
}

}  // namespace cantor
