#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "propp/constructions.hpp"
#include "propp/extremal_search.hpp"
#include "propp/json_io.hpp"
#include "propp/proof_audit.hpp"
#include "propp/property_p.hpp"
#include "propp/sumset_structure.hpp"

namespace propp::cli {
namespace {

// Inline list "1,2,3" or "@path" (one integer per line).
IntSet load_set(const std::string& text) {
  if (!text.empty() && text[0] == '@') return read_set_file(text.substr(1));
  return parse_set_literal(text);
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidConfig:
      return kExitUsage;
    case ErrorKind::TooLarge:
    case ErrorKind::InvalidInstance:
    case ErrorKind::EmptySet:
      return kExitGuard;
    case ErrorKind::NotPropertyP:
    case ErrorKind::HypothesisViolation:
      return kExitNotP;
    default:
      return kExitCounterexample;
  }
}

unsigned default_jobs() {
  if (const char* e = std::getenv("PROPP_JOBS")) {
    const int v = std::atoi(e);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"property P toolkit: sets where no element divides a sum of two larger ones"};
  app.name("propp");
  app.require_subcommand(1);

  std::int64_t n = 0;
  std::string set_spec;

  auto* check = app.add_subcommand("check", "test property P (exit 0 yes, 1 no)");
  check->add_option("--n", n, "ground set [1, n]")->required();
  check->add_option("--set", set_spec, "list like 1,2,3 or @file")->required();

  auto* witness = app.add_subcommand("witness", "print the canonical violating triple as JSON, or none");
  witness->add_option("--n", n)->required();
  witness->add_option("--set", set_spec)->required();

  auto* extremal = app.add_subcommand("extremal", "print the tight example (2n/3, n]");
  extremal->add_option("--n", n)->required();

  std::optional<std::uint64_t> budget;
  bool oracle = false;
  auto* search = app.add_subcommand("search", "exact f(n) by branch and bound");
  search->add_option("--n", n)->required();
  search->add_option("--budget", budget, "node budget");
  search->add_flag("--oracle", oracle, "cross-check against brute force (n <= 20)");

  std::int64_t from = 1, to = 1;
  std::string out_path;
  unsigned jobs = default_jobs();
  auto* table = app.add_subcommand("table", "CSV of f(n) against the reference bounds");
  table->add_option("--from", from)->required();
  table->add_option("--to", to)->required();
  table->add_option("--out", out_path, "CSV file (default stdout)");
  table->add_option("--budget", budget, "node budget per row");
  table->add_option("--jobs", jobs, "worker threads (env PROPP_JOBS)")->check(CLI::PositiveNumber);

  bool count_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "list every property-P subset of [n]");
  enumerate->add_option("--n", n)->required();
  enumerate->add_flag("--count-only", count_only);

  std::string delta, cconst, epsilon, json_path;
  auto* auditc = app.add_subcommand("audit", "classify into the case tree and evaluate its inequalities");
  auditc->add_option("--n", n)->required();
  auditc->add_option("--set", set_spec)->required();
  auditc->add_option("--delta", delta, "p/q");
  auditc->add_option("--c", cconst, "p/q");
  auditc->add_option("--epsilon", epsilon, "p/q");
  auditc->add_option("--json", json_path, "report file (default stdout)");

  std::string xs, ys;
  auto* sumsetc = app.add_subcommand("sumset", "print X + Y");
  sumsetc->add_option("--x", xs)->required();
  sumsetc->add_option("--y", ys)->required();

  auto* freiman = app.add_subcommand("freiman", "Freiman dichotomy for S + T as JSON");
  freiman->add_option("--s", xs)->required();
  freiman->add_option("--t", ys)->required();

  std::uint64_t seed = 0;
  auto* random = app.add_subcommand("random", "greedy random property-P set");
  random->add_option("--n", n)->required();
  random->add_option("--seed", seed)->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*check) {
      const ProblemInstance inst(n, load_set(set_spec));
      if (auto w = find_violation(inst)) {
        out << "no " << w->str() << "\n";
        return kExitNo;
      }
      out << "yes\n";
      return kExitOk;
    }
    if (*witness) {
      const ProblemInstance inst(n, load_set(set_spec));
      if (auto w = find_violation(inst))
        out << to_json(*w).dump() << "\n";
      else
        out << "none\n";
      return kExitOk;
    }
    if (*extremal) {
      const IntSet e = extremal_example(n);
      out << e.str() << " size=" << e.size() << "\n";
      return kExitOk;
    }
    if (*search) {
      if (oracle && n > 20) throw Error(ErrorKind::TooLarge, "--oracle needs n <= 20");
      const SearchResult r = max_property_p(n, budget);
      err << "elapsed " << r.elapsed.count() << "s\n";
      ojson j = to_json(r);
      int code = kExitOk;
      if (oracle) {
        const std::int64_t bf = brute_force_max(n);
        j["oracle"] = bf;
        if (r.optimal && bf != r.best_size) code = kExitCounterexample;
      }
      out << j.dump(2) << "\n";
      return code;
    }
    if (*table) {
      const auto rows = f_table(from, to, budget, jobs);
      if (out_path.empty()) {
        write_csv(out, rows);
      } else {
        std::ofstream f(out_path);
        if (!f) throw Error(ErrorKind::ParseError, "cannot write " + out_path);
        write_csv(f, rows);
      }
      return kExitOk;
    }
    if (*enumerate) {
      if (count_only) {
        out << count_property_p(n) << "\n";
      } else {
        enumerate_property_p(n, [&](const IntSet& s) { out << "{" << s.str() << "}\n"; });
      }
      return kExitOk;
    }
    if (*auditc) {
      AuditConfig cfg;
      if (!delta.empty()) cfg.delta = Rational::parse(delta);
      if (!cconst.empty()) cfg.c_const = Rational::parse(cconst);
      if (!epsilon.empty()) cfg.epsilon = Rational::parse(epsilon);
      cfg.validate();
      const CaseReport rep = audit(ProblemInstance(n, load_set(set_spec)), cfg);
      const std::string text = to_json(rep).dump(2) + "\n";
      if (json_path.empty()) {
        out << text;
      } else {
        std::ofstream f(json_path);
        if (!f) throw Error(ErrorKind::ParseError, "cannot write " + json_path);
        f << text;
        out << rep.path << (rep.unconditional_pass ? " pass" : " FAIL") << "\n";
      }
      return rep.unconditional_pass ? kExitOk : kExitCounterexample;
    }
    if (*sumsetc) {
      out << sumset(load_set(xs), load_set(ys)).str() << "\n";
      return kExitOk;
    }
    if (*freiman) {
      out << to_json(freiman_classify(load_set(xs), load_set(ys))).dump(2) << "\n";
      return kExitOk;
    }
    if (*random) {
      out << random_property_p(n, seed).str() << "\n";
      return kExitOk;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code(e.kind());
  }
  return kExitUsage;
}

}  // namespace propp::cli
