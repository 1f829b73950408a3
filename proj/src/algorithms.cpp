#include "cantor/algorithms.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cantor {

std::vector<GenName> const& basic_swaps() {
  static std::vector<GenName> const gens = {
      swap_gen("00", "01"), swap_gen("01", "10"), swap_gen("10", "11"),
      swap_gen("1", "00")};
  return gens;
}

namespace {

// Shortest w over the basic swaps with {00.w, 01.w} = {alpha, beta}, never
// passing through an address longer than bound.
std::optional<std::vector<std::size_t>> conjugator(Address const& alpha,
                                                   Address const& beta,
                                                   std::size_t bound) {
  using State = std::pair<Address, Address>;
  struct Step {
    State from;
    std::size_t letter;
  };
  auto const& gens = basic_swaps();
  State const start{Address::parse("00"), Address::parse("01")};
  std::map<State, std::optional<Step>> seen{{start, std::nullopt}};
  std::deque<State> queue{start};

  auto done = [&](State const& s) {
    return (s.first == alpha && s.second == beta)
           || (s.first == beta && s.second == alpha);
  };
  while (!queue.empty()) {
    State const s = queue.front();
    queue.pop_front();
    if (done(s)) {
      std::vector<std::size_t> path;
      for (State cur = s; seen.at(cur);) {
        Step const& step = *seen.at(cur);
        path.push_back(step.letter);
        cur = step.from;
      }
      return std::vector<std::size_t>(path.rbegin(), path.rend());
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      auto const& t = gens[i].swap();
      auto p = swap_address_action(s.first, t.first, t.second);
      auto q = swap_address_action(s.second, t.first, t.second);
      if (!p || !q || p->size() > bound || q->size() > bound) {
        continue;
      }
      State next{std::move(*p), std::move(*q)};
      if (seen.emplace(next, Step{s, i}).second) {
        queue.push_back(std::move(next));
      }
    }
  }
  return std::nullopt;
}

void append(Word& out, Word const& w) { out.insert(out.end(), w.begin(), w.end()); }

}  // namespace

namespace {

Word split_and_decompose(Address const& alpha, Address const& beta);

Word decompose_unchecked(Address const& alpha, Address const& beta) {
  auto const& gens = basic_swaps();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto const& t = gens[i].swap();
    if ((t.first == alpha && t.second == beta)
        || (t.first == beta && t.second == alpha)) {
      return {{gens[i], +1}};
    }
  }
  // No basic swap moves any address onto 0, so a swap involving 0 (and
  // <0 1> in particular) has no conjugator.
  if (alpha.size() > 1 && beta.size() > 1) {
    std::size_t const base = std::max(alpha.size(), beta.size());
    for (std::size_t bound = base + 1; bound <= base + 3; ++bound) {
      if (auto w = conjugator(alpha, beta, bound)) {
        Word out;
        for (auto it = w->rbegin(); it != w->rend(); ++it) {
          out.push_back({gens[*it], +1});
        }
        out.push_back({gens[0], +1});
        for (std::size_t i : *w) {
          out.push_back({gens[i], +1});
        }
        return out;
      }
    }
  }
  return split_and_decompose(alpha, beta);
}

// <alpha beta> = <alpha0 beta0> <alpha1 beta1>.
Word split_and_decompose(Address const& alpha, Address const& beta) {
  if (alpha.size() > 1 && beta.size() > 1) {
    throw std::logic_error("no conjugator found for <" + alpha.to_string()
                           + " " + beta.to_string() + ">");
  }
  Word out = decompose_unchecked(alpha.child(Letter::Zero),
                                 beta.child(Letter::Zero));
  append(out, decompose_unchecked(alpha.child(Letter::One),
                                  beta.child(Letter::One)));
  return out;
}

}  // namespace

Word decompose_swap(Address const& alpha, Address const& beta,
                    std::size_t cap) {
  if (!incomparable(alpha, beta)) {
    throw std::invalid_argument("cannot decompose <" + alpha.to_string() + " "
                                + beta.to_string()
                                + ">: addresses must be incomparable");
  }
  if (alpha.size() > cap || beta.size() > cap) {
    throw std::length_error("cannot decompose <" + alpha.to_string() + " "
                            + beta.to_string() + ">: address length exceeds "
                            + std::to_string(cap));
  }
  return decompose_unchecked(alpha, beta);
}

std::vector<SwapPair> even_factorization(std::vector<SwapPair> const& w) {
  for (auto const& [alpha, beta] : w) {
    if (!incomparable(alpha, beta)) {
      throw std::invalid_argument("invalid swap <" + alpha.to_string() + " "
                                  + beta.to_string() + ">");
    }
  }
  if (w.size() % 2 == 0) {
    return w;
  }
  auto const& [alpha, beta] = w.front();
  std::vector<SwapPair> out;
  out.reserve(w.size() + 1);
  out.emplace_back(alpha.child(Letter::Zero), beta.child(Letter::Zero));
  out.emplace_back(alpha.child(Letter::One), beta.child(Letter::One));
  out.insert(out.end(), w.begin() + 1, w.end());
  return out;
}

VElement product_of_swaps(std::vector<SwapPair> const& w) {
  VElement out;
  for (auto const& [alpha, beta] : w) {
    out = out * VElement::from_swap(alpha, beta);
  }
  return out;
}

bool verify_relator(WordExpr const& r, GeneratingSet const& gs) {
  return gs.eval(r).is_identity();
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "suite " << suite << ": " << passed << "/" << total << " passed\n";
  for (auto const& f : failures) {
    os << "FAIL " << f.relator << "\n";
    std::istringstream lines(f.dump);
    for (std::string line; std::getline(lines, line);) {
      os << "    " << line << "\n";
    }
  }
  return os.str();
}

std::string VerificationReport::to_line() const {
  return suite + "\t" + std::to_string(total) + "\t" + std::to_string(passed);
}

VerificationReport run_suite(Presentation const& p) {
  VerificationReport report;
  report.suite = p.name;
  for (auto const& relation : p.relations) {
    ++report.total;
    std::optional<VerificationFailure> failure;
    auto check = [&](Relation const& r) {
      VElement const value = p.genset.eval(r.relator());
      if (!value.is_identity() && !failure) {
        failure = VerificationFailure{r.label + ": " + r.text(), dump(value)};
      }
    };
    check(relation);
    for (auto const& alt : relation.alternates) {
      check(alt);
    }
    if (failure) {
      report.failures.push_back(std::move(*failure));
    } else {
      ++report.passed;
    }
  }
  return report;
}

VerificationReport verify_prop51() { return run_suite(presentation_prop51()); }

VerificationReport verify_tietze_uv() {
  return run_suite(presentation_tietze_uv());
}

}  // namespace cantor
