#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "nanoword_cli/commands.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = nanoword::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(NANOWORD_TEST_DATA) + "/" + name; }

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("invariants report for the lifted words") {
  auto r = run({"invariants", data("lifted_aa.txt")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "lk: (a)\n"));
  CHECK(contains(r.out, "clv: (1,1)\n"));
  CHECK(contains(r.out, "conditions: satisfied\n"));

  auto e = run({"invariants", data("lifted_empty.txt")});
  CHECK(e.code == 0);
  CHECK(contains(e.out, "lk: (1)\n"));
  CHECK(contains(e.out, "clv: (0,0)\n"));
}

TEST_CASE("tsv output") {
  auto r = run({"--format", "tsv", "invariants", data("lifted_aa.txt")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "lk\t([1])\n"));
  CHECK(contains(r.out, "clv\t(1,1)\n"));
}

TEST_CASE("input errors exit with 2") {
  auto r = run({"invariants", data("bad_tau.txt")});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "line 2"));
  CHECK(run({"invariants", data("missing.txt")}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"--builtin", "knots", "enumerate"}).code == 2);
  CHECK(run({"equiv", data("aa.txt"), data("curves_abab.txt")}).code == 2);
}

TEST_CASE("validate and canon") {
  auto v = run({"validate", data("curves_phrase.txt")});
  CHECK(v.code == 0);
  CHECK(v.out == "valid: k=2 n=3\n");
  auto c = run({"canon", data("curves_phrase.txt")});
  CHECK(c.out == "1 2 | 3 2 1 3 ; a b a\n");
}

TEST_CASE("equiv verdicts") {
  auto trivial = run({"equiv", data("aa.txt"), data("empty.txt")});
  CHECK(trivial.code == 0);
  CHECK(contains(trivial.out, "verdict: Equivalent\nsteps: 1\n"));

  auto abab = run({"equiv", data("abab_one.txt"), data("empty.txt")});
  // empty.txt has the default S, which equals abab_one's S over {a}.
  CHECK(abab.code == 0);
  CHECK(contains(abab.out, "verdict: Equivalent"));

  auto separated =
      run({"--max-states", "2000", "equiv", data("lifted_aa.txt"), data("lifted_empty.txt")});
  CHECK(separated.code == 0);
  CHECK(contains(separated.out, "verdict: NotEquivalent\n"));
  CHECK(contains(separated.out, "separated-by: lk clv\n"));
}

TEST_CASE("equiv reports Unknown with exit 4") {
  auto r = run({"--max-states", "5", "equiv", data("abab_one.txt"), data("empty.txt")});
  CHECK(r.code == 4);
  CHECK(contains(r.out, "verdict: Unknown"));
}

TEST_CASE("lift and project") {
  auto l = run({"lift", data("curves_phrase.txt")});
  CHECK(l.code == 0);
  CHECK(contains(l.out, "k: 2\n"));
  CHECK(contains(l.out, "phrase: A B C B A C\n"));
  auto p = run({"project", data("lifted_aa.txt")});
  CHECK(p.code == 0);
  CHECK(contains(p.out, "phrase: A | A\n"));
}

TEST_CASE("enumerate") {
  auto r = run({"--builtin", "diagonal", "--n", "2", "enumerate"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 1 2 2 ; a a\n1 2 1 2 ; a a\n1 2 2 1 ; a a\ncount: 3\n");
}

TEST_CASE("classify") {
  auto zero = run({"--builtin", "curves", "--n", "0", "classify"});
  CHECK(zero.code == 0);
  CHECK(contains(zero.out, "classes: 1\n"));

  auto one = run({"--builtin", "curves", "--n", "1", "classify"});
  CHECK(one.code == 0);
  CHECK(contains(one.out, "classes: 1\n"));

  auto two = run({"--builtin", "curves", "--n", "2", "--max-states", "20000", "classify"});
  auto again = run({"--builtin", "curves", "--n", "2", "--max-states", "20000", "--threads", "3",
                    "classify"});
  CHECK(two.code == 0);
  CHECK(two.out == again.out);
}
