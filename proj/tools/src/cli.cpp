#include "wmpcli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "wmp/maya.hpp"
#include "wmp/vertex.hpp"
#include "wmp/wreath.hpp"

namespace wmpcli {

namespace {

using json = nlohmann::ordered_json;
using namespace wmp;

struct Options {
  int l = 1;
  std::string lambda;
  std::string check;
  int degree = 2;
  int m = -1;
  std::string core;
  std::string basis = "p";
  std::string format = "json";
  std::string route = "both";
  std::string w_value;
  std::string z_values;
  bool geometric = false;
  std::string manifest;
  int jobs = 1;
};

// Final output substitutions: the quantum parameter binding (--w or --z,
// product bound to w) first, then the geometric relation t1 -> h^2/t2.
struct Finalizer {
  bool bind_w = false;
  FieldElem w;
  bool geometric = false;

  FieldElem operator()(const FieldElem& v) const {
    FieldElem r = reduced(v); // cancel first so substitution stays small
    if (bind_w) r = r.subst({{Var::w, w}});
    if (geometric)
      r = r.subst({{Var::t1, FieldElem::var_pow(Var::h, 2) / FieldElem::variable(Var::t2)}});
    return r;
  }
};

Finalizer make_finalizer(const Options& opt) {
  Finalizer fin;
  fin.geometric = opt.geometric;
  if (!opt.w_value.empty()) {
    fin.bind_w = true;
    fin.w = field_parse(opt.w_value);
  } else if (!opt.z_values.empty()) {
    fin.bind_w = true;
    FieldElem prod = FieldElem::one();
    std::stringstream ss(opt.z_values);
    std::string piece;
    while (std::getline(ss, piece, ',')) prod *= field_parse(piece);
    fin.w = prod;
  }
  return fin;
}

std::string tuple_to_string(const std::vector<Partition>& tuple) {
  std::string s = "(";
  for (size_t i = 0; i < tuple.size(); ++i) {
    if (i) s += ";";
    s += tuple[i].to_string();
  }
  return s + ")";
}

json multisym_to_json(const MultiSym& f, const Finalizer& fin) {
  json terms = json::array();
  for (const auto& [mono, c] : f.terms()) {
    json jmono = json::array();
    for (const Gen& g : mono)
      jmono.push_back({g.alphabet == Alphabet::X ? "x" : "y", g.color, g.degree});
    terms.push_back({{"monomial", jmono}, {"coeff", field_to_string(fin(c))}});
  }
  return json{{"l", f.l()}, {"terms", terms}};
}

json report_to_json(const CheckReport& rep) {
  json failures = json::array();
  for (const auto& f : rep.failures)
    failures.push_back({{"where", f.where}, {"got", f.got}, {"expected", f.expected}});
  return json{{"check", rep.check},
              {"params", rep.params},
              {"status", rep.pass() ? "pass" : "fail"},
              {"failures", failures}};
}

void print_report_text(const CheckReport& rep, std::ostream& out) {
  out << "check=" << rep.check << " params=" << rep.params << " status="
      << (rep.pass() ? "pass" : "fail") << "\n";
  for (const auto& f : rep.failures)
    out << "  " << f.where << " | got " << f.got << " | expected " << f.expected << "\n";
}

int emit_reports(const std::vector<CheckReport>& reports, const Options& opt,
                 std::ostream& out) {
  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.pass();
  if (opt.format == "json") {
    json jr = json::array();
    for (const auto& r : reports) jr.push_back(report_to_json(r));
    out << json{{"reports", jr}, {"status", all_pass ? "pass" : "fail"}}.dump(2) << "\n";
  } else {
    for (const auto& r : reports) print_report_text(r, out);
    out << "status " << (all_pass ? "pass" : "fail") << "\n";
  }
  return all_pass ? 0 : 1;
}

int run_hpoly(const Options& opt, std::ostream& out) {
  const Partition lam = Partition::parse(opt.lambda);
  const WreathRecord& rec = wreath_h(lam, opt.l);
  const Finalizer fin = make_finalizer(opt);
  const FieldElem norm = fin(rec.norm);
  if (opt.format == "json") {
    json j{{"l", rec.l},
           {"lambda", rec.lambda.to_string()},
           {"core", rec.core.to_string()},
           {"degree", rec.degree},
           {"basis", opt.basis}};
    if (opt.basis == "p") {
      j["h"] = multisym_to_json(rec.h, fin);
    } else {
      json terms = json::array();
      for (const auto& [tuple, c] : rec.tuple_coeffs) {
        if (opt.basis == "schur") {
          json jt = json::array();
          for (const Partition& p : tuple) jt.push_back(p.to_string());
          terms.push_back({{"tuple", jt}, {"coeff", field_to_string(fin(c))}});
        } else {
          const Partition member =
              from_core_quotient(CoreQuotient{rec.l, rec.core, tuple});
          terms.push_back(
              {{"lambda", member.to_string()}, {"coeff", field_to_string(fin(c))}});
        }
      }
      j["h"] = terms;
    }
    j["norm"] = field_to_string(norm);
    out << j.dump(2) << "\n";
  } else {
    if (opt.basis == "p") {
      for (const auto& [mono, c] : rec.h.terms())
        out << monomial_to_string(mono) << "\t" << field_to_string(fin(c)) << "\n";
    } else {
      for (const auto& [tuple, c] : rec.tuple_coeffs) {
        if (opt.basis == "schur")
          out << tuple_to_string(tuple) << "\t" << field_to_string(fin(c)) << "\n";
        else
          out << from_core_quotient(CoreQuotient{rec.l, rec.core, tuple}).to_string()
              << "\t" << field_to_string(fin(c)) << "\n";
      }
    }
    out << "norm\t" << field_to_string(norm) << "\n";
  }
  return 0;
}

int run_norm(const Options& opt, std::ostream& out) {
  const Partition lam = Partition::parse(opt.lambda);
  const Finalizer fin = make_finalizer(opt);
  const FieldElem norm = fin(wreath_norm(lam, opt.l));
  if (opt.format == "json")
    out << json{{"l", opt.l},
                {"lambda", lam.to_string()},
                {"norm", field_to_string(norm)}}
               .dump(2)
        << "\n";
  else
    out << field_to_string(norm) << "\n";
  return 0;
}

int run_vertex(const Options& opt, std::ostream& out) {
  const Partition lam = Partition::parse(opt.lambda);
  VertexRoute route = VertexRoute::both;
  if (opt.route == "pairing") route = VertexRoute::pairing;
  if (opt.route == "specialization") route = VertexRoute::specialization;
  const VertexResult res = capped_vertex(lam, opt.l, route);
  const Finalizer fin = make_finalizer(opt);
  const FieldElem value = fin(res.value);
  const FieldElem classical = fin(res.classical);
  if (opt.format == "json")
    out << json{{"lambda", res.lambda.to_string()},
                {"l", res.l},
                {"value", field_to_string(value)},
                {"classical", field_to_string(classical)},
                {"routes_agree", res.routes_agree}}
               .dump(2)
        << "\n";
  else
    out << field_to_string(value) << "\n";
  return res.routes_agree ? 0 : 1;
}

int run_eval(const Options& opt, std::ostream& out) {
  const Partition lam = Partition::parse(opt.lambda);
  if (opt.m >= opt.l)
    throw CLI::ValidationError("--m must lie in [0, l)");
  const Finalizer fin = make_finalizer(opt);
  std::vector<int> residues;
  if (opt.m >= 0)
    residues.push_back(opt.m);
  else
    for (int m = 0; m < opt.l; ++m) residues.push_back(m);
  bool all_equal = true;
  json entries = json::array();
  std::ostringstream text;
  for (int m : residues) {
    const auto [lhs, rhs] = evaluate_h(lam, opt.l, m);
    const FieldElem flhs = fin(lhs);
    const FieldElem frhs = fin(rhs);
    const bool equal = field_eq(flhs, frhs);
    all_equal = all_equal && equal;
    entries.push_back({{"m", m},
                       {"lhs", field_to_string(flhs)},
                       {"rhs", field_to_string(frhs)},
                       {"equal", equal}});
    text << m << "\t" << field_to_string(flhs) << "\t" << field_to_string(frhs) << "\t"
         << (equal ? "true" : "false") << "\n";
  }
  if (opt.format == "json")
    out << json{{"l", opt.l},
                {"lambda", lam.to_string()},
                {"entries", entries},
                {"status", all_equal ? "pass" : "fail"}}
               .dump(2)
        << "\n";
  else
    out << text.str();
  return all_equal ? 0 : 1;
}

// Verifies a deliberately false identity (the size-2 norm at l=1 is not
// symmetric under t1 <-> t2) so failure reporting and exit propagation can
// be exercised end to end.
CheckReport negative_control() {
  CheckReport rep;
  rep.check = "negative-control";
  rep.params = "l=1 lambda=(2)";
  const FieldElem lhs = wreath_norm(Partition::parse("2"), 1);
  const FieldElem rhs = coeff_swap(lhs);
  if (!field_eq(lhs, rhs))
    rep.mismatch("norm symmetry under t1<->t2 (deliberately false)",
                 field_to_string(lhs), field_to_string(rhs));
  return rep;
}

int run_verify(const Options& opt, std::ostream& out) {
  const Partition core = Partition::parse(opt.core);
  std::vector<CheckReport> reports;
  if (opt.check == "cauchy") {
    reports.push_back(verify_schur_cauchy(opt.l, opt.degree, core));
    reports.push_back(verify_wreath_cauchy(opt.l, opt.degree, core));
  } else if (opt.check == "orthogonality") {
    for (int d = 0; d <= opt.degree; ++d)
      reports.push_back(verify_orthogonality(opt.l, opt.l * d));
  } else if (opt.check == "classical") {
    if (opt.m >= opt.l) throw CLI::ValidationError("--m must lie in [0, l)");
    if (opt.m >= 0) {
      reports.push_back(verify_classical_generating(opt.l, opt.m, opt.degree));
    } else {
      for (int m = 0; m < opt.l; ++m)
        reports.push_back(verify_classical_generating(opt.l, m, opt.degree));
    }
  } else if (opt.check == "abrr") {
    reports.push_back(verify_abrr(opt.l, opt.degree));
  } else if (opt.check == "derivation") {
    reports.push_back(verify_derivation(opt.l, opt.degree));
  } else if (opt.check == "eval-all") {
    reports.push_back(verify_evaluation(opt.l, opt.l * opt.degree));
  } else if (opt.check == "negative-control") {
    reports.push_back(negative_control());
  }
  return emit_reports(reports, opt, out);
}

struct BatchEntry {
  std::string command;
  int exit_code = 0;
  std::string out_text;
  std::string err_text;
};

int run_batch(const Options& opt, std::ostream& out, std::ostream& err) {
  std::ifstream in(opt.manifest);
  if (!in) throw CLI::ValidationError("cannot read manifest: " + opt.manifest);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  const int jobs = std::max(1, opt.jobs);
  std::vector<BatchEntry> entries(lines.size());
  auto run_one = [](const std::string& cmd) {
    BatchEntry e;
    e.command = cmd;
    std::ostringstream o;
    std::ostringstream s;
    const std::vector<std::string> args = split_command(cmd);
    if (!args.empty() && args.front() == "batch") {
      e.exit_code = 2;
      e.err_text = "batch manifests cannot nest batch commands\n";
      return e;
    }
    e.exit_code = run_cli(args, o, s);
    e.out_text = o.str();
    e.err_text = s.str();
    return e;
  };
  size_t done = 0;
  while (done < lines.size()) {
    const size_t end = std::min(lines.size(), done + static_cast<size_t>(jobs));
    std::vector<std::future<BatchEntry>> futures;
    for (size_t i = done; i < end; ++i)
      futures.push_back(std::async(std::launch::async, run_one, lines[i]));
    for (size_t i = done; i < end; ++i) entries[i] = futures[i - done].get();
    done = end;
  }
  bool all_pass = true;
  for (const auto& e : entries) {
    all_pass = all_pass && e.exit_code == 0;
    if (!e.err_text.empty()) err << e.err_text;
  }
  if (opt.format == "json") {
    json je = json::array();
    for (const auto& e : entries) {
      json payload;
      try {
        payload = json::parse(e.out_text);
      } catch (const json::parse_error&) {
        payload = e.out_text;
      }
      je.push_back({{"command", e.command}, {"exit", e.exit_code}, {"output", payload}});
    }
    out << json{{"entries", je}, {"status", all_pass ? "pass" : "fail"}}.dump(2) << "\n";
  } else {
    for (size_t i = 0; i < entries.size(); ++i) {
      out << "# " << (i + 1) << " " << entries[i].command << "\n";
      out << entries[i].out_text;
      out << "# exit " << entries[i].exit_code << "\n";
    }
    out << "status " << (all_pass ? "pass" : "fail") << "\n";
  }
  return all_pass ? 0 : 1;
}

} // namespace

std::vector<std::string> split_command(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact wreath Macdonald polynomials, norms, kernels, and capped vertices"};
  app.require_subcommand(1);
  Options opt;

  const auto add_common = [&](CLI::App* cmd, bool needs_lambda) {
    cmd->add_option("--l", opt.l, "number of colors")->required()->check(CLI::PositiveNumber);
    if (needs_lambda)
      cmd->add_option("--lambda", opt.lambda, "partition, comma-separated parts");
    cmd->add_option("--format", opt.format)->check(CLI::IsMember({"json", "text"}));
  };
  const auto add_value_flags = [&](CLI::App* cmd) {
    auto* w_opt = cmd->add_option("--w", opt.w_value, "value bound to the quantum parameter");
    cmd->add_option("--z", opt.z_values, "comma-separated values whose product is bound to w")
        ->excludes(w_opt);
    cmd->add_flag("--geometric-relation", opt.geometric,
                  "substitute t1 -> h^2/t2 into printed values");
  };

  auto* hpoly = app.add_subcommand("hpoly", "construct one polynomial");
  add_common(hpoly, true);
  hpoly->get_option("--lambda")->required();
  hpoly->add_option("--basis", opt.basis)->check(CLI::IsMember({"p", "schur", "vecschur"}));
  add_value_flags(hpoly);

  auto* norm = app.add_subcommand("norm", "print one pairing norm");
  add_common(norm, true);
  norm->get_option("--lambda")->required();
  add_value_flags(norm);

  auto* vertex = app.add_subcommand("vertex", "capped vertex value at a fixed point");
  add_common(vertex, true);
  vertex->get_option("--lambda")->required();
  vertex->add_option("--route", opt.route)
      ->check(CLI::IsMember({"pairing", "specialization", "both"}));
  add_value_flags(vertex);

  auto* eval = app.add_subcommand("eval", "one-row evaluation of a polynomial");
  add_common(eval, true);
  eval->get_option("--lambda")->required();
  eval->add_option("--m", opt.m, "residue; omit to evaluate every residue");
  add_value_flags(eval);

  auto* verify = app.add_subcommand("verify", "run one identity check");
  add_common(verify, false);
  verify->add_option("--check", opt.check)
      ->required()
      ->check(CLI::IsMember({"cauchy", "orthogonality", "classical", "abrr", "derivation",
                             "eval-all", "negative-control"}));
  verify->add_option("--degree", opt.degree)->check(CLI::NonNegativeNumber);
  verify->add_option("--m", opt.m, "residue for the classical check; omit for all");
  verify->add_option("--core", opt.core, "core partition for the cauchy check");

  auto* batch = app.add_subcommand("batch", "run a manifest of commands");
  batch->add_option("--manifest", opt.manifest)->required();
  batch->add_option("--jobs", opt.jobs)->check(CLI::PositiveNumber);
  batch->add_option("--format", opt.format)->check(CLI::IsMember({"json", "text"}));

  std::vector<const char*> argv;
  argv.push_back("wmp");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(hpoly)) return run_hpoly(opt, out);
    if (app.got_subcommand(norm)) return run_norm(opt, out);
    if (app.got_subcommand(vertex)) return run_vertex(opt, out);
    if (app.got_subcommand(eval)) return run_eval(opt, out);
    if (app.got_subcommand(verify)) return run_verify(opt, out);
    if (app.got_subcommand(batch)) return run_batch(opt, out, err);
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
  err << "no subcommand dispatched\n";
  return 2;
}

} // namespace wmpcli
