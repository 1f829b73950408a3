#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "cantor/cli.hpp"
#include "cantor/presentations.hpp"

using namespace cantor;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, std::string const& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string dump_of(char const* a, char const* b) {
  return dump(VElement::from_swap(Address::parse(a), Address::parse(b)));
}

std::string const kIdentity = dump(VElement::identity());

}  // namespace

TEST_CASE("eval") {
  auto r = run({"eval", "--gens", "abc", "c^(a c)"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == dump_of("00", "01"));
  CHECK(run({"eval", "--gens", "uv", "u^6"}).out == kIdentity);
  CHECK(run({"eval", "--gens", "swaps", "<0 1> <0 1>"}).out == kIdentity);
  CHECK(run({"eval", "-g", "cfp", "pi0"}).out == dump_of("0", "10"));
  CHECK(run({"eval", "-"}, "a b a^-1").code == cli::kExitOk);
}

TEST_CASE("usage and parse errors exit 2") {
  auto bad = run({"eval", "a ("});
  CHECK(bad.code == cli::kExitUsage);
  CHECK(bad.err.find('^') != std::string::npos);
  CHECK(run({"eval", "--gens", "xyz", "a"}).code == cli::kExitUsage);
  CHECK(run({"eval", "u"}).code == cli::kExitUsage);
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"verify", "nope"}).code == cli::kExitUsage);
  CHECK(run({"verify"}).code == cli::kExitUsage);
  CHECK(run({"decompose", "0", "01"}).code == cli::kExitUsage);
}

TEST_CASE("eq") {
  CHECK(run({"eq", "c^(a c)", "a"}).code == cli::kExitOk);
  CHECK(run({"eq", "a", "b"}).code == cli::kExitFailed);
  CHECK(run({"eq", "--gens", "uv", "u^3", "u^-3"}).code == cli::kExitOk);
}

TEST_CASE("canon and act") {
  auto r = run({"canon", "-"}, "00 -> 10\n01 -> 11\n1 -> 0\n");
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == dump_of("0", "1"));
  auto a = run({"act", "c", "1101"});
  CHECK(a.code == cli::kExitOk);
  CHECK(a.out.find("00101") != std::string::npos);
}

TEST_CASE("decompose") {
  auto r = run({"decompose", "000", "11"});
  REQUIRE(r.code == cli::kExitOk);
  std::string word = r.out.substr(0, r.out.find('\n'));
  CHECK(genset_swaps().eval(word) ==
        VElement::from_swap(Address::parse("000"), Address::parse("11")));
  CHECK(run({"decompose", "--cap", "2", "000", "11"}).code == cli::kExitUsage);
}

TEST_CASE("convert") {
  auto r = run({"convert", "--from", "swaps", "--to", "abc", "<1 01>"});
  REQUIRE(r.code == cli::kExitOk);
  std::string word = r.out.substr(0, r.out.find('\n'));
  CHECK(genset_abc().eval(word) == genset_swaps().eval("<1 01>"));

  auto u = run({"convert", "--from", "uv", "--to", "abc", "u v"});
  REQUIRE(u.code == cli::kExitOk);
  CHECK(genset_abc().eval(u.out.substr(0, u.out.find('\n'))) ==
        genset_uv().eval("u v"));

  auto c = run({"convert", "--from", "abc", "--to", "uv", "c"});
  REQUIRE(c.code == cli::kExitOk);
  CHECK(genset_uv().eval(c.out.substr(0, c.out.find('\n'))) ==
        genset_abc().image("c"));
}

TEST_CASE("treepair") {
  auto r = run({"treepair", "--gens", "swaps", "<100 11>", "--format", "ascii"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == render_ascii(to_tree_pair(
                     VElement::from_swap(Address::parse("100"),
                                         Address::parse("11")))));
  auto d = run({"treepair", "--gens", "uv", "u", "--format", "dot"});
  CHECK(d.code == cli::kExitOk);
  CHECK(d.out.rfind("digraph", 0) == 0);
  CHECK(run({"treepair", "1"}).out.find("(1)") != std::string::npos);
  CHECK(run({"treepair", "--format", "svg", "a"}).code == cli::kExitUsage);
}

TEST_CASE("verify") {
  auto p3 = run({"verify", "p3"});
  CHECK(p3.code == cli::kExitOk);
  CHECK(p3.out.find("8/8 passed") != std::string::npos);
  CHECK(run({"verify", "two-gen"}).out.find("7/7 passed") != std::string::npos);
  CHECK(run({"verify", "cfp"}).out.find("14/14 passed") != std::string::npos);
  auto lines = run({"verify", "--lines", "p3-kb"});
  CHECK(lines.out == "p3-kb\t8\t8\n");
  CHECK(run({"verify", "inf-L3", "--max-depth", "2"}).code == cli::kExitUsage);
}

TEST_CASE("verify reports sabotaged relators") {
  auto r = run({"verify", "--file", "-"}, "(a b)^4\na\nc^(a c) = a\n");
  CHECK(r.code == cli::kExitFailed);
  CHECK(r.out.find("2/3 passed") != std::string::npos);
  CHECK(r.out.find("FAIL") != std::string::npos);
  auto ok = run({"verify", "--file", "-", "--gens", "uv"}, "u^6\nv^3\n");
  CHECK(ok.code == cli::kExitOk);
}

TEST_CASE("suite-list") {
  auto r = run({"suite-list"});
  CHECK(r.code == cli::kExitOk);
  for (auto const& name : suite_names()) {
    CHECK(r.out.find(name) != std::string::npos);
  }
  CHECK(run({"suite", "list"}).out == r.out);
}

TEST_CASE("output is deterministic") {
  CHECK(run({"verify", "all", "--quiet"}).out ==
        run({"verify", "all", "--quiet"}).out);
}
