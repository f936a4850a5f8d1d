#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "dbrack/cli.hpp"
#include "helpers.hpp"

using namespace dbrack;
using namespace dbrack::cli;
using namespace dbrack::testing;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string data(const char* name) { return std::string(DBRACK_DATA) + "/" + name; }

std::pair<int, int> error_at(const std::string& text) {
  try {
    parse_session(text);
  } catch (const ParseError& e) {
    return {e.line, e.col};
  }
  return {0, 0};
}

struct Proc {
  std::string out;
  int code;
};

Proc shell(const std::string& cmd) {
  Proc p{"", -1};
  FILE* f = popen((cmd + " 2>&1").c_str(), "r");
  if (!f) return p;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) p.out.append(buf, n);
  int st = pclose(f);
  p.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return p;
}

RunResult run_file(const char* name, Format f = Format::Plain) {
  return run_text(slurp(data(name)), {f, DBRACK_DATA});
}

const char* kHeader = "algebra { gens: x, y }\n";

}  // namespace

TEST_CASE("bracket declarations") {
  SessionSpec s = parse_session(std::string(kHeader) + "bracket { <x,y> = 1 (x) 1 }\n");
  REQUIRE(s.algebra);
  CHECK_FALSE(s.has_bimodule);
  DoubleBracket db = s.double_bracket();
  const Algebra& A = *s.algebra;
  CHECK(db.on_gens(0, 1) == T2(A, "1 (x) 1"));
  CHECK(db.on_gens(1, 0) == T2(A, "-1 (x) 1"));
  CHECK(db.on_gens(0, 0).is_zero());
  CHECK(db.bimodule().kind() == BimodKind::Outer);
  CHECK(db.bimodule().untwisted());

  s = parse_session(std::string(kHeader) + "bracket { <x,x> = x (x) 1 - 1 (x) x }");
  CHECK(s.bracket.at(0).value == T2(A, "x (x) 1 - 1 (x) x"));

  // diagonal entries must satisfy d = -d°
  CHECK_THROWS_AS(parse_session(std::string(kHeader) + "bracket { <x,x> = x (x) 1 }"), ParseError);
  CHECK(error_at(std::string(kHeader) + "bracket {\n  <x,x> = x (x) 1\n}") == std::pair{3, 3});
  // consistent explicit <y,x> is fine, a conflicting one is not
  CHECK_NOTHROW(parse_session(std::string(kHeader) + "bracket { <x,y> = x (x) y ; <y,x> = -y (x) x }"));
  CHECK(error_at(std::string(kHeader) + "bracket { <x,y> = x (x) y ; <y,x> = y (x) x }") ==
        std::pair{2, 29});
  CHECK(error_at(std::string(kHeader) + "bracket { <x,y> = 1 (x) 1 ; <x,y> = 1 (x) 1 }") ==
        std::pair{2, 29});
  // undeclared generators, in the pair or in the expression
  CHECK(error_at(std::string(kHeader) + "bracket { <x,z> = 1 (x) 1 }") == std::pair{2, 14});
  CHECK(error_at(std::string(kHeader) + "bracket { <x,y> = z (x) 1 }").first == 2);
  CHECK(error_at("bracket { <x,y> = 1 (x) 1 }") == std::pair{1, 1});
  // malformed pair or tensor
  CHECK(error_at(std::string(kHeader) + "bracket { <x> = 1 (x) 1 }").first == 2);
  CHECK(error_at(std::string(kHeader) + "bracket { <x,y> = 1 (x) (x) 1 }") == std::pair{2, 25});
  CHECK(error_at(std::string(kHeader) + "bracket { <x,y> = x\n").first == 2);
}

TEST_CASE("algebra and bimodule blocks") {
  SessionSpec s = parse_session(
      "algebra { gens: a, b, c }\n"
      "bimodule { kind: left ; alpha: a -> b, b -> a ; beta: a -> b, b -> a }\n"
      "bracket { <a,c> = 2/3*a (x) c^2 }\n");
  CHECK(s.algebra->rank() == 3);
  CHECK(s.kind == BimodKind::Left);
  Bimodule m = s.bimodule();
  CHECK(m.alpha() == AlgEndo({gen(1), gen(0), gen(2)}));
  CHECK(m.equal_twists());
  CHECK(s.double_bracket().on_gens(2, 0) == T2(*s.algebra, "-2/3*c^2 (x) a"));

  CHECK(error_at("algebra { gens: x, x }") == std::pair{1, 20});
  CHECK(error_at("algebra { gens: x, 2y }") == std::pair{1, 20});
  CHECK(error_at("algebra { gens: x }\nbimodule { kind: sideways }") == std::pair{2, 18});
  CHECK(error_at("algebra { gens: x }\nbimodule { kind: outer ; alpha: y -> x }") == std::pair{2, 33});
  CHECK(error_at("algebra { gens: x }\nbimodule { kind: outer ; alpha: x -> x, x -> 1 }").first == 2);
  CHECK(error_at("algebra { gens: x }\nalgebra { gens: y }").first == 2);
  CHECK(error_at("algebra { gens: x\n").first == 1);
  CHECK(error_at("algebra { size: 3 }") == std::pair{1, 11});
  // unequal twists are accepted by the parser; commands that need alpha = beta report errors
  CHECK_NOTHROW(parse_session("algebra { gens: x, y }\nbimodule { kind: inner ; alpha: x -> y, y -> x }"));
}

TEST_CASE("commands") {
  SessionSpec s = parse_session(std::string(kHeader) +
                                "check poisson --degree 3\n"
                                "check weak-poisson --sigma 12 --sigma-prime (13)\n"
                                "jacobiator x \"x + y\" y^2   # comment\n"
                                "rep tensor 2 --convention vdb x y\n"
                                "ybe entry-jacobi --standard 3\n"
                                "gradient classify --family linear --zeta 1,0,-1/2,3\n");
  REQUIRE(s.commands.size() == 6);
  CHECK(s.commands[0] == Command{"check poisson", {}, {{"degree", "3"}}, 0});
  CHECK(s.commands[1].options.at("sigma-prime") == "(13)");
  CHECK(s.commands[2].args == std::vector<std::string>{"x", "x + y", "y^2"});
  CHECK(s.commands[2].line == 4);
  CHECK(s.commands[3].args == std::vector<std::string>{"2", "x", "y"});

  auto err = [](const std::string& cmd) { return error_at(std::string(kHeader) + cmd); };
  CHECK(err("check everything") == std::pair{2, 1});
  CHECK(err("frobnicate") == std::pair{2, 1});
  CHECK(err("check poisson --degree zero") == std::pair{2, 24});
  CHECK(err("check poisson --depth 3") == std::pair{2, 1});
  CHECK(err("check weak-poisson --sigma 123 --sigma-prime 12") == std::pair{2, 28});
  CHECK(err("check weak-poisson --sigma 12") == std::pair{2, 1});
  CHECK(err("jacobiator x y") == std::pair{2, 1});
  CHECK(err("jacobiator x y z").first == 2);
  CHECK(err("rep induce 0") == std::pair{2, 12});
  CHECK(err("rep tensor 2 --convention both x y") == std::pair{2, 27});
  CHECK(err("gradient classify --family cubic --degree 2") == std::pair{2, 28});
  CHECK(err("gradient classify --family monomial --degree 2 --gen 4") == std::pair{2, 54});
  CHECK(err("gradient classify --family linear --zeta 1,2,x1,0") == std::pair{2, 46});
  CHECK(err("gradient classify --poly x1 --family sum-power") == std::pair{2, 1});
  CHECK(err("ybe entry-jacobi") == std::pair{2, 1});
  CHECK(err("check poisson --degree") == std::pair{2, 15});
  CHECK(err("jacobiator \"x y") == std::pair{2, 12});
  CHECK(error_at("check poisson") == std::pair{1, 1});
  // sessions without an algebra may still run ybe and gradient commands
  CHECK_NOTHROW(parse_session("ybe standard 2\ngradient fnc x1*x2+x2*x1\n"));
}

TEST_CASE("round trip through canonical text") {
  std::vector<std::string> sources = {
      slurp(data("vdb.dbr")),
      slurp(data("twisted.dbr")),
      slurp(data("right_const.dbr")),
      slurp(data("ybe.dbr")),
      "algebra { gens: a, b, c }\n"
      "bimodule { kind: inner ; beta: c -> 2*a*b - 1 }\n"
      "bracket { <a,b> = a (x) b - 1/2 (x) 1 ; <c,a> = c^2 (x) 1\n  <b,b> = b (x) a - a (x) b }\n"
      "jacobiator \"a + b\" c \"1/2*a*b\"\n"
      "gradient classify --poly \"x1*x2 + x2*x1\" --bound 3\n",
  };
  for (const auto& src : sources) {
    SessionSpec s = parse_session(src);
    std::string text = to_text(s);
    SessionSpec back = parse_session(text);
    CHECK(back == s);
    CHECK(to_text(back) == text);
  }
}

TEST_CASE("run reports") {
  RunResult vdb = run_file("vdb.dbr");
  CHECK(vdb.exit_code == 0);
  CHECK(vdb.output.find("== check poisson\nstatus: Poisson\n") != std::string::npos);

  RunResult tw = run_file("twisted.dbr");
  CHECK(tw.exit_code == 1);
  CHECK(tw.output.find("witness: (x,y,y)\n") != std::string::npos);
  CHECK(tw.output.find("defect: y (x) 1 (x) 1 - 1 (x) y (x) 1\n") != std::string::npos);

  RunResult kv = run_file("twisted.dbr", Format::Kv);
  CHECK(kv.output ==
        "command=check poisson\nstatus=NotPoisson\nprocedure=degree sweep\ndegree-bound=4\n"
        "triples-checked=2\nwitness=(x,y,y)\ndefect=y (x) 1 (x) 1 - 1 (x) y (x) 1\n");

  RunResult rc = run_file("right_const.dbr");
  CHECK(rc.exit_code == 1);
  CHECK(rc.output.find("value: -2 (x) 1 (x) 1\n") != std::string::npos);
  CHECK(rc.output.find("status: WeakPoisson((12),(12))\n") != std::string::npos);
  CHECK(rc.output.find("witness: (x,x,y^2)\n") != std::string::npos);

  RunResult bad = run_file("malformed.dbr");
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.rfind("error: 2:", 0) == 0);

  RunResult y = run_file("ybe.dbr");
  CHECK(y.exit_code == 1);
  CHECK(y.output.find("== ybe check e12e12.rmat\nstatus: Solution\n") != std::string::npos);

  // runtime errors: a missing file, a twisted bracket on representation spaces
  RunResult missing = run_text("ybe check nowhere.rmat\n", {Format::Plain, DBRACK_DATA});
  CHECK(missing.exit_code == 2);
  CHECK(missing.output.find("status: error") != std::string::npos);
  std::string twisted = slurp(data("twisted.dbr"));
  CHECK(run_text(twisted + "rep jacobi 2\n").exit_code == 2);

  // an error anywhere dominates a counterexample
  CHECK(run_text(twisted + "ybe check nowhere.rmat\n").exit_code == 2);
  CHECK(run_text("").exit_code == 0);
  CHECK(run_text("").output.empty());
}

TEST_CASE("gradient and ybe commands") {
  RunResult r = run_text("gradient classify --family sum-power --degree 3\n");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("casimir: yes") != std::string::npos);
  r = run_text("gradient classify --poly \"x1*x2 + x2*x1\"\n");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("witness: (x2,x3,x3)\n") != std::string::npos);
  CHECK(r.output.find("defect: -x2 (x) 1 (x) 1 + 1 (x) x2 (x) 1\n") != std::string::npos);
  r = run_text("gradient classify --poly x1*x2\n");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("status: NotFullyNonCommutative") != std::string::npos);
  CHECK(run_text("gradient fnc \"x1*x2*x3 + x1*x3*x2 + x2*x1*x3 + x2*x3*x1 + x3*x1*x2 + x3*x2*x1\"\n")
            .exit_code == 0);
  CHECK(run_text("gradient classify --family linear --zeta 1,2,3,4\n").exit_code == 0);
  CHECK(run_text("gradient classify --family monomial --gen 3 --degree 4\n").exit_code == 0);

  r = run_text("ybe standard 2\n", {Format::Kv, ""});
  CHECK(r.output == "command=ybe standard 2\nstatus=ok\ntensor=dim 2\ntensor=1 1 1 1 1/2\n"
                    "tensor=1 2 2 1 1\ntensor=2 2 2 2 1/2\n");
  r = run_text("ybe entry-jacobi --standard 2\n");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("status: NotJacobi") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
  for (const char* f : {"vdb.dbr", "twisted.dbr", "right_const.dbr", "ybe.dbr"}) {
    RunResult a = run_file(f, Format::Kv), b = run_file(f, Format::Kv);
    CHECK(a.output == b.output);
    CHECK(a.exit_code == b.exit_code);
  }
}

TEST_CASE("executable") {
  const std::string bin = DBRACK_BIN;
  Proc p = shell(bin + " run " + data("vdb.dbr"));
  CHECK(p.code == 0);
  CHECK(p.out == run_file("vdb.dbr").output);
  p = shell(bin + " run " + data("twisted.dbr") + " --format kv");
  CHECK(p.code == 1);
  CHECK(p.out.find("witness=(x,y,y)") != std::string::npos);
  p = shell(bin + " run " + data("malformed.dbr"));
  CHECK(p.code == 2);
  CHECK(p.out.rfind("error:", 0) == 0);
  p = shell(bin + " run - < " + data("right_const.dbr"));
  CHECK(p.code == 1);
  p = shell(bin + " run " + data("ybe.dbr"));
  CHECK(p.code == 1);
  p = shell(bin + " ybe check " + data("e12e12.rmat"));
  CHECK(p.code == 0);
  CHECK(p.out.find("status: Solution") != std::string::npos);
  p = shell(bin + " gradient classify --family sum-power --degree 2");
  CHECK(p.code == 0);
  p = shell(bin + " gradient classify --poly \"x1*x2 + x2*x1\"");
  CHECK(p.code == 1);
  p = shell(bin + " run /nonexistent/file.dbr");
  CHECK(p.code == 2);
  p = shell(bin + " --format yaml run " + data("vdb.dbr"));
  CHECK(p.code != 0);
}
