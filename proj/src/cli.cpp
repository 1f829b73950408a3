#include "cantor/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include "cantor/algorithms.hpp"
#include "cantor/element.hpp"
#include "cantor/presentations.hpp"
#include "cantor/words.hpp"

namespace cantor::cli {

namespace {

// Raised for bad input that should end the run with kExitUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(std::string s) {
  auto const first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    return {};
  }
  auto const last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string read_file(std::string const& path, std::istream& in) {
  if (path == "-") {
    return read_all(in);
  }
  std::ifstream file(path);
  if (!file) {
    throw UsageError("cannot open " + path);
  }
  return read_all(file);
}

// An expression argument, or the whole of stdin for "-".
std::string expression(std::string const& arg, std::istream& in) {
  return arg == "-" ? trim(read_all(in)) : arg;
}

GeneratingSet genset(std::string const& name) {
  auto gs = genset_by_name(name);
  if (!gs) {
    throw UsageError("unknown generating set \"" + name
                     + "\" (expected abc, uv, cfp or swaps)");
  }
  return *gs;
}

WordExpr parse_expression(std::string const& text, std::ostream& err) {
  try {
    return parse(text);
  } catch (ParseError const& e) {
    err << e.what() << "\n  " << text << "\n  "
        << std::string(e.position(), ' ') << "^\n";
    throw UsageError("");
  }
}

VElement evaluate(std::string const& text, std::string const& gens,
                  std::ostream& err) {
  WordExpr const e = parse_expression(text, err);
  try {
    return genset(gens).eval(e);
  } catch (EvalError const& e2) {
    throw UsageError(e2.what());
  }
}

// ---------------------------------------------------------------------------
// convert

using Substitution = std::function<std::optional<WordExpr>(GenName const&)>;

WordExpr substitute(WordExpr const& e, Substitution const& f) {
  using Kind = WordExpr::Kind;
  auto const& kids = e.children();
  switch (e.kind()) {
    case Kind::Empty:
      return e;
    case Kind::Gen: {
      auto r = f(e.generator());
      return r ? *r : e;
    }
    case Kind::Inverse:
      return WordExpr::inverse(substitute(kids[0], f));
    case Kind::Power:
      return WordExpr::power(substitute(kids[0], f), e.exponent());
    case Kind::Conjugate:
      return WordExpr::conjugate(substitute(kids[0], f), substitute(kids[1], f));
    case Kind::Commutator:
      return WordExpr::commutator(substitute(kids[0], f),
                                  substitute(kids[1], f));
    case Kind::Product: {
      std::vector<WordExpr> out;
      for (auto const& kid : kids) {
        out.push_back(substitute(kid, f));
      }
      return WordExpr::product(std::move(out));
    }
  }
  return e;
}

WordExpr word_to_expr(Word const& w) {
  std::vector<WordExpr> out;
  for (auto const& letter : w) {
    WordExpr g = WordExpr::gen(letter.gen);
    out.push_back(letter.sign < 0 ? WordExpr::inverse(std::move(g)) : std::move(g));
  }
  return WordExpr::product(std::move(out));
}

// Swap-product forms of the named generators.
std::map<std::string, std::string> const& swap_forms() {
  static std::map<std::string, std::string> const forms = {
      {"a", "<00 01>"},
      {"b", "<01 10> <01 11>"},
      {"c", "<1 00>"},
      {"u", "<00 01> <10 110> <10 111>"},
      {"v", "<01 10> <01 11>"},
      {"A", "<0 1> <0 10> <10 11>"},
      {"B", "<10 11> <10 110> <110 111>"},
      {"C", "<10 11> <0 10>"},
      {"pi0", "<0 10>"},
  };
  return forms;
}

std::map<std::string, std::string> const& uv_forms() {
  static std::map<std::string, std::string> const forms = {
      {"a", "u^3"},
      {"b", "v"},
      {"c", "(u^3)^(v u^-2 v u^3 v) (u^3)^(v u^-1 v u^3 v)"},
  };
  return forms;
}

std::map<std::string, std::string> const& abc_forms() {
  static std::map<std::string, std::string> const forms = {
      {"u", "a (a^b a^(b^-1))^(c a c a^b a^(b^-1 a))"},
      {"v", "b"},
  };
  return forms;
}

Substitution named(std::map<std::string, std::string> const& forms) {
  return [&forms](GenName const& g) -> std::optional<WordExpr> {
    if (g.is_swap()) {
      return std::nullopt;
    }
    auto it = forms.find(g.symbol());
    if (it == forms.end()) {
      throw UsageError("cannot convert generator " + g.symbol());
    }
    return parse(it->second);
  };
}

WordExpr swap_to_abc(SwapLiteral const& s) {
  if (auto const* entry = swap_table().find(s.first, s.second)) {
    return entry->word;
  }
  // Longer swaps go through the four basic swaps, all of which are tabled.
  Word const basic = decompose_swap(s.first, s.second);
  std::vector<WordExpr> out;
  for (auto const& letter : basic) {
    auto const& t = letter.gen.swap();
    out.push_back(swap_table().find(t.first, t.second)->word);
  }
  return WordExpr::product(std::move(out));
}

WordExpr convert(WordExpr const& e, std::string const& from,
                 std::string const& to) {
  if (from == to) {
    return e;
  }
  if (from == "abc" && to == "uv") {
    return substitute(e, named(uv_forms()));
  }
  if (from == "uv" && to == "abc") {
    return substitute(e, named(abc_forms()));
  }
  WordExpr const swaps = from == "swaps" ? e : substitute(e, named(swap_forms()));
  auto only_swaps = [](GenName const& g) {
    if (!g.is_swap()) {
      throw UsageError("generator " + g.symbol()
                       + " is not defined in the swaps set");
    }
  };
  if (to == "swaps") {
    return swaps;
  }
  if (to == "gen4") {
    return substitute(swaps, [&](GenName const& g) -> std::optional<WordExpr> {
      only_swaps(g);
      return word_to_expr(decompose_swap(g.swap().first, g.swap().second));
    });
  }
  if (to == "abc" || to == "uv") {
    WordExpr abc =
        substitute(swaps, [&](GenName const& g) -> std::optional<WordExpr> {
          only_swaps(g);
          return swap_to_abc(g.swap());
        });
    return to == "abc" ? abc : substitute(abc, named(uv_forms()));
  }
  throw UsageError("unknown conversion target \"" + to
                   + "\" (expected abc, uv, swaps or gen4)");
}

GeneratingSet const& conversion_set(std::string const& name) {
  if (name == "gen4" || name == "swaps") {
    return genset_swaps();
  }
  if (name == "abc") return genset_abc();
  if (name == "uv") return genset_uv();
  if (name == "cfp") return genset_cfp();
  throw UsageError("unknown generating set \"" + name + "\"");
}

// ---------------------------------------------------------------------------
// verify

Presentation presentation_from_file(std::string const& path,
                                    std::string const& gens, std::istream& in,
                                    std::ostream& err) {
  GeneratingSet gs = genset(gens);
  Presentation p{path, {}, {}, gs};
  for (auto const& [g, image] : gs.images()) {
    p.generators.push_back(g);
  }
  std::istringstream lines(read_file(path, in));
  std::size_t number = 0;
  for (std::string line; std::getline(lines, line);) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    std::string const label = path + ":" + std::to_string(number);
    auto const eq = line.find('=');
    if (eq == std::string::npos) {
      p.relations.push_back(
          Relation{label, parse_expression(line, err), std::nullopt, {}});
    } else {
      p.relations.push_back(
          Relation{label, parse_expression(trim(line.substr(0, eq)), err),
                   parse_expression(trim(line.substr(eq + 1)), err), {}});
    }
  }
  try {
    p.validate();
  } catch (std::invalid_argument const& e) {
    throw UsageError(e.what());
  }
  return p;
}

struct VerifyOptions {
  std::string suite;
  std::string file;
  std::string gens = "abc";
  bool lines = false;
};

int verify(VerifyOptions const& opt, std::size_t max_depth, bool quiet,
           std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<Presentation> suites;
  if (!opt.file.empty()) {
    suites.push_back(presentation_from_file(opt.file, opt.gens, in, err));
  } else {
    if (opt.suite.empty()) {
      throw UsageError("verify needs a suite name or --file");
    }
    std::vector<std::string> names =
        opt.suite == "all" ? suite_names() : std::vector{opt.suite};
    for (auto const& name : names) {
      auto p = presentation_by_name(name);
      if (!p) {
        throw UsageError("unknown suite \"" + name
                         + "\"; run suite-list for the names");
      }
      if (name.rfind("inf-L", 0) == 0
          && static_cast<std::size_t>(name[5] - '0') > max_depth) {
        throw UsageError(name + " exceeds the enumeration cap "
                         + std::to_string(max_depth));
      }
      suites.push_back(std::move(*p));
    }
  }
  std::size_t failed_suites = 0;
  for (auto const& p : suites) {
    VerificationReport const report = run_suite(p);
    if (!report.ok()) {
      ++failed_suites;
    }
    if (opt.lines) {
      out << report.to_line() << "\n";
    } else if (quiet) {
      out << "suite " << report.suite << ": " << report.passed << "/"
          << report.total << " passed\n";
    } else {
      out << report.to_text();
    }
  }
  if (suites.size() > 1 && !opt.lines) {
    out << "all: " << suites.size() - failed_suites << "/" << suites.size()
        << " suites passed\n";
  }
  return failed_suites == 0 ? kExitOk : kExitFailed;
}

}  // namespace

int run(std::vector<std::string> const& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computation in Thompson's group V with swaps",
               "cantor-swaps"};
  app.require_subcommand(1);
  std::size_t max_depth = default_enumeration_cap();
  bool quiet = false;
  app.add_option("--max-depth", max_depth,
                 "Cap on enumerated address length (env CANTOR_SWAPS_MAX_DEPTH)");
  app.add_flag("--quiet,-q", quiet, "Print summaries only");

  std::string gens = "abc";
  auto add_gens = [&](CLI::App* sub) {
    sub->add_option("--gens,-g", gens, "Generating set: abc, uv, cfp or swaps")
        ->capture_default_str();
  };

  std::string expr;
  std::string expr2;
  std::string address;
  std::string render_format = "ascii";
  std::string from;
  std::string to;
  std::string alpha;
  std::string beta;
  std::size_t cap = kDecomposeCap;
  bool flat = false;
  std::string list_word;
  VerifyOptions vopt;

  auto* eval = app.add_subcommand("eval", "Print the canonical element of an expression");
  eval->add_option("expr", expr, "Expression, or - for stdin")->required();
  add_gens(eval);

  auto* eq = app.add_subcommand("eq", "Test two expressions for equality");
  eq->add_option("lhs", expr, "First expression")->required();
  eq->add_option("rhs", expr2, "Second expression")->required();
  add_gens(eq);

  auto* canon = app.add_subcommand("canon", "Reduce an element dump");
  canon->add_option("file", expr, "Dump file, or - for stdin")->required();

  auto* act = app.add_subcommand("act", "Image of an address");
  act->add_option("expr", expr, "Expression")->required();
  act->add_option("address", address, "Address over {0,1}, or e")->required();
  add_gens(act);

  auto* decompose = app.add_subcommand(
      "decompose", "Write a swap over <00 01>, <01 10>, <10 11> and <1 00>");
  decompose->add_option("alpha", alpha)->required();
  decompose->add_option("beta", beta)->required();
  decompose->add_option("--cap", cap, "Maximum address length")
      ->capture_default_str();

  auto* conv = app.add_subcommand("convert", "Rewrite an expression in another generating set");
  conv->add_option("expr", expr, "Expression, or - for stdin")->required();
  conv->add_option("--from", from, "abc, uv, cfp or swaps")->required();
  conv->add_option("--to", to, "abc, uv, swaps or gen4")->required();
  conv->add_flag("--flatten", flat, "Print the freely reduced word");

  auto* treepair = app.add_subcommand("treepair", "Render the reduced tree pair");
  treepair->add_option("expr", expr, "Expression, or - for stdin")->required();
  treepair->add_option("--format", render_format, "ascii or dot")
      ->check(CLI::IsMember({"ascii", "dot"}))
      ->capture_default_str();
  add_gens(treepair);

  auto* verify_cmd = app.add_subcommand("verify", "Check a relation suite");
  verify_cmd->add_option("suite", vopt.suite, "Suite name or all");
  verify_cmd->add_option("--file", vopt.file,
                         "Relations file: one expression or lhs = rhs per line");
  verify_cmd->add_option("--gens,-g", vopt.gens, "Generating set for --file")
      ->capture_default_str();
  verify_cmd->add_flag("--lines", vopt.lines,
                       "Print suite<TAB>total<TAB>passed lines");

  auto* suite_list = app.add_subcommand("suite-list", "List suite names");
  auto* suite = app.add_subcommand("suite", "Suite commands");
  suite->add_option("action", list_word, "list")
      ->required()
      ->check(CLI::IsMember({"list"}));

  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*eval) {
      out << dump(evaluate(expression(expr, in), gens, err));
    } else if (*eq) {
      bool const same = evaluate(expression(expr, in), gens, err)
                        == evaluate(expression(expr2, in), gens, err);
      if (!quiet) {
        out << (same ? "equal" : "not equal") << "\n";
      }
      return same ? kExitOk : kExitFailed;
    } else if (*canon) {
      try {
        out << dump(parse_dump(read_file(expr, in)));
      } catch (std::invalid_argument const& e) {
        throw UsageError(e.what());
      }
    } else if (*act) {
      VElement const f = evaluate(expression(expr, in), gens, err);
      Address a;
      try {
        a = Address::parse(address);
      } catch (std::invalid_argument const& e) {
        throw UsageError(e.what());
      }
      auto image = f.act(a);
      out << (image ? image->to_string() : "undefined") << "\n";
    } else if (*decompose) {
      Word w;
      try {
        w = decompose_swap(Address::parse(alpha), Address::parse(beta), cap);
      } catch (std::invalid_argument const& e) {
        throw UsageError(e.what());
      } catch (std::length_error const& e) {
        throw UsageError(e.what());
      }
      out << cantor::format(w) << "\n";
    } else if (*conv) {
      WordExpr const source = parse_expression(expression(expr, in), err);
      WordExpr result;
      try {
        result = convert(source, from, to);
      } catch (std::length_error const& e) {
        throw UsageError(e.what());
      }
      VElement const before = conversion_set(from).eval(source);
      VElement const after = conversion_set(to).eval(result);
      if (before != after) {
        err << "conversion changed the element\n";
        return kExitFailed;
      }
      out << (flat ? cantor::format(flatten(result)) : to_string(result)) << "\n";
    } else if (*treepair) {
      TreePair const tp = to_tree_pair(evaluate(expression(expr, in), gens, err));
      out << (render_format == "dot" ? render_dot(tp) : render_ascii(tp));
    } else if (*verify_cmd) {
      return verify(vopt, max_depth, quiet, in, out, err);
    } else if (*suite_list || *suite) {
      for (auto const& name : suite_names()) {
        out << name << "\n";
      }
    }
  } catch (UsageError const& e) {
    if (*e.what() != '\0') {
      err << "error: " << e.what() << "\n";
    }
    return kExitUsage;
  } catch (EvalError const& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (std::exception const& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitOk;
}

}  // namespace cantor::cli
