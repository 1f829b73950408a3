// Enumerated families of conjugacy, commutation and split identities among
// swaps with addresses of length at most 3.  Families are labelled by the
// length classes of the swaps involved: S12 is <x yz>, S23 is <xy zts>,
// S2 is <0 1> or a swap of X^2, k01 is <k0 k1> for k in X^2, and so on.
// Letters x, y, z, t range over X; kappa, lambda, mu, nu are distinct
// points of X^2; alpha, beta, gamma, delta are distinct points of X^3.

#include <algorithm>
#include <string>
#include <vector>

#include "cantor/presentations.hpp"

namespace cantor {

namespace {

using S = std::string;

S b(int x) { return x ? "1" : "0"; }
S nb(int x) { return x ? "0" : "1"; }

WordExpr sw(S const& alpha, S const& beta) {
  return WordExpr::gen(GenName(Address::parse(alpha), Address::parse(beta)));
}

std::vector<S> const kX2 = {"00", "01", "10", "11"};

std::vector<S> const& x3() {
  static std::vector<S> const out = [] {
    std::vector<S> v;
    for (auto const& a : addresses_of_length(3)) {
      v.push_back(a.to_string());
    }
    return v;
  }();
  return out;
}

// <0 1> and the six swaps of X^2.
std::vector<std::pair<S, S>> sigma2() {
  std::vector<std::pair<S, S>> out = {{"0", "1"}};
  for (std::size_t i = 0; i < kX2.size(); ++i) {
    for (std::size_t j = i + 1; j < kX2.size(); ++j) {
      out.emplace_back(kX2[i], kX2[j]);
    }
  }
  return out;
}

bool has_prefix(S const& s, S const& p) { return s.rfind(p, 0) == 0; }

bool perp(S const& a, S const& c) { return !has_prefix(a, c) && !has_prefix(c, a); }

class Families {
 public:
  std::vector<Relation> relations;

  void conj(S const& family, WordExpr base, WordExpr by, WordExpr rhs) {
    add(family, WordExpr::conjugate(std::move(base), std::move(by)),
        std::move(rhs));
  }

  void commute(S const& family, WordExpr x, WordExpr y) {
    WordExpr e = WordExpr::commutator(std::move(x), std::move(y));
    relations.push_back(Relation{family + " " + to_string(e), std::move(e),
                                 std::nullopt, {}});
  }

  void add(S const& family, WordExpr lhs, WordExpr rhs) {
    S label = family + " " + to_string(lhs) + " = " + to_string(rhs);
    relations.push_back(
        Relation{std::move(label), std::move(lhs), std::move(rhs), {}});
  }

  // sigma^tau = <alpha.tau beta.tau> when both transports are defined.
  void transport(S const& family, S const& alpha, S const& beta, S const& g,
                 S const& d) {
    Address const ga = Address::parse(g), da = Address::parse(d);
    auto a2 = swap_address_action(Address::parse(alpha), ga, da);
    auto b2 = swap_address_action(Address::parse(beta), ga, da);
    if (!a2 || !b2) {
      return;
    }
    conj(family, sw(alpha, beta), sw(g, d),
         WordExpr::gen(GenName(*a2, *b2)));
  }
};

template <typename F>
void for_distinct(std::vector<S> const& pts, int k, F&& f) {
  std::vector<S> chosen;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(chosen.size()) == k) {
      f(chosen);
      return;
    }
    for (auto const& p : pts) {
      if (std::find(chosen.begin(), chosen.end(), p) == chosen.end()) {
        chosen.push_back(p);
        self(self);
        chosen.pop_back();
      }
    }
  };
  rec(rec);
}

}  // namespace

Presentation presentation_section3() {
  Families f;

  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      S const X = b(x), Xb = nb(x), Y = b(y), Yb = nb(y);
      f.conj("S12^S11", sw(X, Xb + Y), sw("0", "1"), sw(Xb, X + Y));
      f.conj("S12^S22", sw(X, Xb + Y), sw(Xb + Y, Xb + Yb), sw(X, Xb + Yb));
      f.conj("S12^S12=S22", sw(X, Xb + Y), sw(X, Xb + Yb), sw(Xb + Y, Xb + Yb));
    }
  }

  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int z = 0; z < 2; ++z) {
        S const X = b(x), Xb = nb(x), Y = b(y), Yb = nb(y), Z = b(z);
        f.conj("S13^S11", sw(X, Xb + Y + Z), sw("0", "1"), sw(Xb, X + Y + Z));
        f.conj("S13^S22", sw(X, Xb + Y + Z), sw(Xb + Y, Xb + Yb),
               sw(X, Xb + Yb + Z));
        f.conj("S13^S12=S22", sw(X, Xb + Y + Z), sw(X, Xb + Y),
               sw(X + Z, Xb + Y));
      }
    }
  }

  auto const s2 = sigma2();
  for_distinct(kX2, 2, [&](std::vector<S> const& k) {
    for (int x = 0; x < 2; ++x) {
      for (auto const& [g, d] : s2) {
        f.transport("S23^S2", k[0], k[1] + b(x), g, d);
      }
    }
  });

  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      S const X = b(x), Xb = nb(x), Y = b(y);
      f.add("S12 split", sw(X, Xb + Y),
            sw(X + "0", Xb + Y + "0") * sw(X + "1", Xb + Y + "1"));
    }
  }

  for_distinct(kX2, 3, [&](std::vector<S> const& k) {
    for (int x = 0; x < 2; ++x) {
      f.conj("S23^S23=S22", sw(k[0], k[1] + b(x)), sw(k[2], k[1] + b(x)),
             sw(k[0], k[2]));
    }
  });

  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int z = 0; z < 2; ++z) {
        S const X = b(x), Xb = nb(x), Y = b(y), Z = b(z), Zb = nb(z);
        f.conj("S22^S12=S23", sw(X + Y, Xb + Z), sw(X, Xb + Zb),
               sw(Xb + Z, Xb + Zb + Y));
        for (int t = 0; t < 2; ++t) {
          S const T = b(t);
          f.conj("S23^S12=S23", sw(X + Y, Xb + Z + T), sw(X, Xb + Z),
                 sw(X + T, Xb + Z + Y));
        }
      }
    }
  }

  for_distinct(kX2, 2, [&](std::vector<S> const& k) {
    S const& kappa = k[0];
    S const& lambda = k[1];
    for (int x = 0; x < 2; ++x) {
      f.conj("S23^S23=k01", sw(kappa, lambda + b(x)), sw(kappa, lambda + nb(x)),
             sw(lambda + "0", lambda + "1"));
      f.conj("S23^k01=S23", sw(kappa, lambda + b(x)),
             sw(lambda + "0", lambda + "1"), sw(kappa, lambda + nb(x)));
    }
  });

  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      S const X = b(x), Xb = nb(x), Y = b(y), Yb = nb(y);
      f.commute("[S12,k01]", sw(X, Xb + Y),
                sw(Xb + Yb + "0", Xb + Yb + "1"));
    }
  }

  for_distinct(kX2, 3, [&](std::vector<S> const& k) {
    f.commute("[S23-k0,S23-k1]", sw(k[0], k[1] + "0"), sw(k[2], k[1] + "1"));
  });
  for_distinct(kX2, 4, [&](std::vector<S> const& k) {
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) {
        f.commute("[S23,S23]", sw(k[0], k[1] + b(x)), sw(k[2], k[3] + b(y)));
      }
    }
  });

  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int z = 0; z < 2; ++z) {
        S const X = b(x), Xb = nb(x), Y = b(y), Yb = nb(y), Z = b(z),
                Zb = nb(z);
        f.commute("[S13,S23]", sw(X, Xb + Y + Z), sw(Xb + Yb, Xb + Y + Zb));
        f.conj("S12^S13=S23", sw(X, Xb + Y), sw(X, Xb + Yb + Z),
               sw(Xb + Y, Xb + Yb + Z));
        f.conj("S12^S23=S13", sw(X, Xb + Y), sw(Xb + Y, Xb + Yb + Z),
               sw(X, Xb + Yb + Z));
        f.conj("S13^S12=S23", sw(X, Xb + Y + Z), sw(X, Xb + Yb),
               sw(Xb + Yb, Xb + Y + Z));
      }
    }
  }

  for_distinct(kX2, 2, [&](std::vector<S> const& k) {
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) {
        for (auto const& [g, d] : s2) {
          f.transport("S33^S2", k[0] + b(x), k[1] + b(y), g, d);
        }
      }
    }
    // The two halves of kappa C and lambda C are exchanged in parallel.
    f.add("S22 split", sw(k[0], k[1]),
          sw(k[0] + "0", k[1] + "0") * sw(k[0] + "1", k[1] + "1"));
  });

  for (auto const& kappa : kX2) {
    for_distinct(x3(), 2, [&](std::vector<S> const& a) {
      if (!perp(kappa, a[0]) || !perp(kappa, a[1])) {
        return;
      }
      f.conj("S23^S23=S33", sw(kappa, a[0]), sw(kappa, a[1]), sw(a[0], a[1]));
      f.conj("S23^S33=S23", sw(kappa, a[0]), sw(a[0], a[1]), sw(kappa, a[1]));
    });
  }

  for_distinct(kX2, 3, [&](std::vector<S> const& k) {
    for (int x = 0; x < 2; ++x) {
      f.commute("[S23,k01]", sw(k[0], k[1] + b(x)), sw(k[2] + "0", k[2] + "1"));
      for (int y = 0; y < 2; ++y) {
        f.commute("[k01,S33]", sw(k[0] + "0", k[0] + "1"),
                  sw(k[1] + b(x), k[2] + b(y)));
      }
    }
  });

  for_distinct(kX2, 2, [&](std::vector<S> const& k) {
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) {
        f.conj("S33^k01", sw(k[0] + b(x), k[1] + b(y)),
               sw(k[0] + "0", k[0] + "1"), sw(k[0] + nb(x), k[1] + b(y)));
      }
    }
  });

  for (auto const& kappa : kX2) {
    for_distinct(x3(), 3, [&](std::vector<S> const& a) {
      if (perp(kappa, a[0]) && perp(kappa, a[1]) && perp(kappa, a[2])) {
        f.commute("[S23,S33]", sw(kappa, a[0]), sw(a[1], a[2]));
      }
    });
  }

  for_distinct(x3(), 3, [&](std::vector<S> const& a) {
    f.conj("S33^S33", sw(a[0], a[1]), sw(a[0], a[2]), sw(a[1], a[2]));
  });
  for_distinct(x3(), 4, [&](std::vector<S> const& a) {
    f.commute("[S33,S33]", sw(a[0], a[1]), sw(a[2], a[3]));
  });

  for (int x = 0; x < 2; ++x) {
    S const X = b(x), Xb = nb(x);
    for (int y = 0; y < 2; ++y) {
      S const Y = b(y);
      f.conj("k01^S12=S22", sw(Xb + Y + "0", Xb + Y + "1"), sw(X, Xb + Y),
             sw(X + "0", X + "1"));
    }
    std::vector<S> outside;
    for (auto const& a : x3()) {
      if (!has_prefix(a, X)) {
        outside.push_back(a);
      }
    }
    for_distinct(outside, 3, [&](std::vector<S> const& a) {
      f.commute("[S13,S33]", sw(X, a[0]), sw(a[1], a[2]));
    });
    for_distinct(outside, 2, [&](std::vector<S> const& a) {
      f.conj("S13^S33=S13", sw(X, a[0]), sw(a[0], a[1]), sw(X, a[1]));
      f.conj("S33^S13=S13", sw(a[0], a[1]), sw(X, a[0]), sw(X, a[1]));
    });
    for (int y = 0; y < 2; ++y) {
      for (int z = 0; z < 2; ++z) {
        for (int t = 0; t < 2; ++t) {
          S const Y = b(y), Yb = nb(y), Z = b(z), T = b(t);
          f.conj("S33^S12=S23", sw(Xb + Y + Z, Xb + Yb + T), sw(X, Xb + Y),
                 sw(X + Z, Xb + Yb + T));
        }
      }
    }
  }

  Presentation p{"section3", {}, std::move(f.relations), genset_swaps()};
  p.validate();
  return p;
}

}  // namespace cantor
