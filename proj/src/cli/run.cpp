#include <filesystem>
#include <fstream>
#include <sstream>

#include "dbrack/cli.hpp"
#include "dbrack/gradient.hpp"
#include "dbrack/repspace.hpp"
#include "dbrack/text.hpp"
#include "dbrack/ybe.hpp"

namespace dbrack::cli {

namespace {

enum class Outcome { Pass, Counterexample, Error };

struct Field {
  std::string key;
  std::vector<std::string> lines;  // one line for scalar values
};

struct Report {
  std::string command;
  std::string status;
  Outcome outcome = Outcome::Pass;
  std::vector<Field> fields;

  void add(std::string key, std::string value) { fields.push_back({std::move(key), {std::move(value)}}); }
  void add_lines(std::string key, std::vector<std::string> lines) {
    fields.push_back({std::move(key), std::move(lines)});
  }
};

std::string render(const Report& r, Format f) {
  std::string out;
  if (f == Format::Plain) {
    out += "== " + r.command + "\n";
    out += "status: " + r.status + "\n";
    for (const auto& fl : r.fields) {
      if (fl.lines.size() == 1) {
        out += fl.key + ": " + fl.lines[0] + "\n";
        continue;
      }
      out += fl.key + ":" + (fl.lines.empty() ? " (none)" : "") + "\n";
      for (const auto& l : fl.lines) out += "    " + l + "\n";
    }
  } else {
    out += "command=" + r.command + "\n";
    out += "status=" + r.status + "\n";
    for (const auto& fl : r.fields)
      for (const auto& l : fl.lines) out += fl.key + "=" + l + "\n";
  }
  return out;
}

std::string command_text(const Command& c) {
  std::string s = c.name;
  for (const auto& a : c.args) s += " " + a;
  for (const auto& [k, v] : c.options) s += " --" + k + " " + v;
  return s;
}

std::string triple(const Algebra& alg, const std::array<Word, 3>& w) {
  return "(" + format_word(alg, w[0]) + "," + format_word(alg, w[1]) + "," + format_word(alg, w[2]) +
         ")";
}

int int_option(const Command& c, const std::string& key, int fallback) {
  auto it = c.options.find(key);
  return it == c.options.end() ? fallback : std::stoi(it->second);
}

NCPoly poly_arg(const Algebra& alg, const std::string& text) { return parse_poly(alg, text); }

void verdict_fields(Report& r, const Algebra& alg, const JacVerdict& v) {
  r.status = status_name(v);
  r.outcome = v.passed() ? Outcome::Pass : Outcome::Counterexample;
  r.add("procedure", v.generator_check ? "generator triples" : "degree sweep");
  r.add("degree-bound", std::to_string(v.degree_bound));
  r.add("triples-checked", std::to_string(v.triples_checked));
  if (v.witness) {
    r.add("witness", triple(alg, *v.witness));
    r.add("defect", to_string(alg, v.defect));
  }
}

void run_check(const SessionSpec& s, const Command& c, Report& r) {
  const Algebra& alg = *s.algebra;
  if (c.name == "check antisym") {
    auto rep = check_antisymmetry(s.double_bracket(), int_option(c, "degree", kDefaultDegreeBound));
    r.status = rep.holds ? "Antisymmetric" : "NotAntisymmetric";
    r.outcome = rep.holds ? Outcome::Pass : Outcome::Counterexample;
    r.add("degree-bound", std::to_string(rep.degree_bound));
    r.add("pairs-checked", std::to_string(rep.pairs_checked));
    if (rep.witness) {
      r.add("witness", "(" + format_word(alg, rep.witness->first) + "," +
                           format_word(alg, rep.witness->second) + ")");
      r.add("bracket", to_string(alg, rep.ab));
      r.add("reversed", to_string(alg, rep.ba));
    }
  } else if (c.name == "check swap-commuting") {
    Bimodule m = s.bimodule();
    auto rep = check_swap_commuting(alg, m, int_option(c, "degree", 3));
    r.status = rep.holds ? "SwapCommuting" : "NotSwapCommuting";
    r.outcome = rep.holds ? Outcome::Pass : Outcome::Counterexample;
    r.add("kind", kind_name(m.kind()));
    r.add("degree-bound", std::to_string(rep.degree_bound));
    r.add("tuples-checked", std::to_string(rep.tuples_checked));
    r.add("random-trials", std::to_string(rep.random_trials));
    if (rep.witness) {
      const auto& w = *rep.witness;
      r.add("witness", "a1=" + to_string(alg, w.a1) + " a2=" + to_string(alg, w.a2) +
                           " b1=" + to_string(alg, w.b1) + " b2=" + to_string(alg, w.b2) +
                           " d=" + to_string(alg, w.d));
      r.add("lhs", to_string(alg, w.lhs));
      r.add("rhs", to_string(alg, w.rhs));
    }
  } else if (c.name == "check poisson") {
    verdict_fields(r, alg, is_poisson(s.double_bracket(), int_option(c, "degree", kDefaultDegreeBound)));
  } else {
    Perm3 sg = Perm3::parse(c.options.at("sigma")), sp = Perm3::parse(c.options.at("sigma-prime"));
    verdict_fields(r, alg,
                   is_weak_poisson(s.double_bracket(), sg, sp,
                                   int_option(c, "degree", kDefaultDegreeBound)));
  }
}

std::vector<std::string> matrix_lines(const MatTensorPoly& m, const Algebra& alg, unsigned n) {
  std::vector<std::string> out;
  for (const auto& [k, p] : m) {
    if (p.is_zero()) continue;
    out.push_back("E" + std::to_string(k[0] + 1) + std::to_string(k[1] + 1) + " (x) E" +
                  std::to_string(k[2] + 1) + std::to_string(k[3] + 1) + ": " + to_string(alg, n, p));
  }
  return out;
}

void run_rep(const SessionSpec& s, const Command& c, Report& r) {
  const Algebra& alg = *s.algebra;
  unsigned n = static_cast<unsigned>(std::stoul(c.args[0]));
  PoissonStructure ps = induce(s.double_bracket(), n);
  r.add("dim", std::to_string(n));
  r.status = "ok";
  if (c.name == "rep induce") {
    std::vector<std::string> lines;
    for (VarId v = 0; v < ps.num_vars(); ++v)
      for (VarId w = v + 1; w < ps.num_vars(); ++w)
        if (!ps.on_vars(v, w).is_zero())
          lines.push_back("{" + var_name(alg, n, v) + "," + var_name(alg, n, w) +
                          "} = " + to_string(alg, n, ps.on_vars(v, w)));
    r.add("variables", std::to_string(ps.num_vars()));
    r.add_lines("brackets", std::move(lines));
  } else if (c.name == "rep jacobi") {
    auto rep = check_rep_jacobi(ps);
    r.status = rep.holds ? "Jacobi" : "NotJacobi";
    r.outcome = rep.holds ? Outcome::Pass : Outcome::Counterexample;
    r.add("tuples-checked", std::to_string(rep.tuples_checked));
    r.add("max-defect", rep.holds ? "0" : to_string(alg, n, rep.defect));
    if (rep.witness)
      r.add("witness", "(" + var_name(alg, n, (*rep.witness)[0]) + "," +
                           var_name(alg, n, (*rep.witness)[1]) + "," +
                           var_name(alg, n, (*rep.witness)[2]) + ")");
  } else if (c.name == "rep trace-bracket") {
    NCPoly a = poly_arg(alg, c.args[1]), b = poly_arg(alg, c.args[2]);
    r.add("value", to_string(alg, n, trace_bracket(ps, a, b)));
  } else {
    auto it = c.options.find("convention");
    MatConvention conv =
        it == c.options.end() || it->second == "vdb" ? MatConvention::VdB : MatConvention::Tensor;
    NCPoly a = poly_arg(alg, c.args[1]), b = poly_arg(alg, c.args[2]);
    r.add("convention", conv == MatConvention::VdB ? "vdb" : "tensor");
    r.add_lines("entries", matrix_lines(matrix_tensor_bracket(ps, conv, a, b), alg, n));
  }
}

std::vector<std::string> listing(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string l;
  while (std::getline(in, l)) out.push_back(l);
  return out;
}

MatTensor2 read_tensor_file(const std::string& name, const RunOptions& opts) {
  std::filesystem::path p(name);
  if (p.is_relative() && !opts.base_dir.empty()) p = std::filesystem::path(opts.base_dir) / p;
  std::ifstream in(p);
  if (!in) throw ArgumentError("cannot open '" + p.string() + "'");
  try {
    return read_mat_tensor(in);
  } catch (const ParseError& e) {
    throw ArgumentError(p.string() + ":" + e.what());
  }
}

void run_ybe(const Command& c, const RunOptions& opts, Report& r) {
  if (c.name == "ybe standard") {
    MatTensor2 t = standard_r(static_cast<unsigned>(std::stoul(c.args[0])));
    r.status = "ok";
    r.add_lines("tensor", listing(to_string(t)));
    return;
  }
  MatTensor2 t = c.options.count("standard")
                     ? standard_r(static_cast<unsigned>(std::stoul(c.options.at("standard"))))
                     : read_tensor_file(c.args.at(0), opts);
  r.add("dim", std::to_string(t.N));
  if (c.name == "ybe check") {
    MatTensor3 d = cybe_defect(t);
    r.status = d.is_zero() ? "Solution" : "NotSolution";
    r.outcome = d.is_zero() ? Outcome::Pass : Outcome::Counterexample;
    r.add("defect-entries", std::to_string(d.entries.size()));
    if (!d.is_zero()) {
      auto lines = listing(to_string(d));
      lines.erase(lines.begin());  // dim header
      r.add_lines("defect", std::move(lines));
    }
    return;
  }
  auto rep = check_entry_jacobi(entry_bracket(t));
  r.status = rep.holds ? "Jacobi" : "NotJacobi";
  r.outcome = rep.holds ? Outcome::Pass : Outcome::Counterexample;
  r.add("antisymmetric", rep.antisymmetric ? "yes" : "no");
  r.add("triples-checked", std::to_string(rep.triples_checked));
  if (rep.witness) {
    std::string w = "(";
    for (int i = 0; i < 3; ++i)
      w += (i ? ",v" : "v") + std::to_string((*rep.witness)[i].first + 1) +
           std::to_string((*rep.witness)[i].second + 1);
    r.add("witness", w + ")");
    r.add("defect", to_string(Algebra({"v"}), t.N, rep.defect));
  }
}

Family family_of(const Command& c) {
  const Algebra g = gradient_algebra();
  if (c.options.count("poly")) return CustomFamily{parse_poly(g, c.options.at("poly"))};
  const std::string& f = c.options.at("family");
  if (f == "linear") {
    LinearFamily lf;
    std::istringstream zs(c.options.at("zeta"));
    std::string part;
    for (int i = 0; i < 4 && std::getline(zs, part, ','); ++i)
      lf.zeta[i] = *as_constant(parse_poly(g, part));
    return lf;
  }
  unsigned d = static_cast<unsigned>(std::stoul(c.options.at("degree")));
  if (f == "sum-power") return SumPowerFamily{d};
  return MonomialFamily{static_cast<Gen>(std::stoul(c.options.at("gen")) - 1), d};
}

void run_gradient(const Command& c, Report& r) {
  const Algebra g = gradient_algebra();
  if (c.name == "gradient fnc") {
    NCPoly f = parse_poly(g, c.args[0]);
    bool fnc = is_fully_noncommutative(g, f);
    r.status = fnc ? "FullyNonCommutative" : "NotFullyNonCommutative";
    r.outcome = fnc ? Outcome::Pass : Outcome::Counterexample;
    r.add("f", to_string(g, f));
    r.add("swap-criterion", derivations_swap_symmetric(g, f) ? "yes" : "no");
    return;
  }
  Family fam = family_of(c);
  NCPoly f = family_polynomial(fam);
  r.add("family", family_name(fam));
  r.add("f", to_string(g, f));
  if (!is_fully_noncommutative(g, f)) {
    r.status = "NotFullyNonCommutative";
    r.outcome = Outcome::Counterexample;
    return;
  }
  Classification cl = classify(fam, int_option(c, "bound", kDefaultDegreeBound));
  Report tmp;
  verdict_fields(tmp, g, cl.verdict);
  r.status = tmp.status;
  r.outcome = tmp.outcome;
  for (auto& fl : tmp.fields) r.fields.push_back(std::move(fl));
  r.add("casimir", cl.casimir ? "yes" : "no");
}

Report run_one(const SessionSpec& s, const Command& c, const RunOptions& opts) {
  Report r;
  r.command = command_text(c);
  try {
    if (c.name == "jacobiator") {
      const Algebra& alg = *s.algebra;
      Tensor3 j = jacobiator(s.double_bracket(), poly_arg(alg, c.args[0]), poly_arg(alg, c.args[1]),
                             poly_arg(alg, c.args[2]));
      r.status = "ok";
      r.add("value", to_string(alg, j));
    } else if (c.name.rfind("check ", 0) == 0) {
      run_check(s, c, r);
    } else if (c.name.rfind("rep ", 0) == 0) {
      run_rep(s, c, r);
    } else if (c.name.rfind("ybe ", 0) == 0) {
      run_ybe(c, opts, r);
    } else {
      run_gradient(c, r);
    }
  } catch (const Error& e) {
    r = Report{r.command, "error", Outcome::Error, {}};
    r.add("message", e.what());
  }
  return r;
}

}  // namespace

RunResult run(const SessionSpec& s, const RunOptions& opts) {
  RunResult res;
  bool first = true;
  for (const auto& c : s.commands) {
    Report r = run_one(s, c, opts);
    if (!first) res.output += "\n";
    first = false;
    res.output += render(r, opts.format);
    if (r.outcome == Outcome::Error) res.exit_code = 2;
    else if (r.outcome == Outcome::Counterexample && res.exit_code == 0) res.exit_code = 1;
  }
  return res;
}

RunResult run_text(const std::string& text, const RunOptions& opts) {
  SessionSpec s;
  try {
    s = parse_session(text);
  } catch (const ParseError& e) {
    return {std::string("error: ") + e.what() + "\n", 2};
  }
  return run(s, opts);
}

}  // namespace dbrack::cli
