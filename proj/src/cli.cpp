#include "monlab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "monlab/betti.hpp"
#include "monlab/bounds.hpp"
#include "monlab/duality.hpp"
#include "monlab/error.hpp"
#include "monlab/harness.hpp"
#include "monlab/linearity.hpp"

namespace monlab {

namespace {

using nlohmann::json;

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool as_json = false;
  FieldSpec field = FieldSpec::rationals();
};

int verdict(bool holds) { return holds ? kExitTrue : kExitFalse; }

void emit(Context& ctx, const json& j) { ctx.out << j.dump(2) << '\n'; }

std::string yes_no(bool b) { return b ? "true" : "false"; }

void print_report(Context& ctx, const BoundReport& r) {
  if (ctx.as_json) {
    emit(ctx, bound_report_to_json(r));
    return;
  }
  const bool reg = r.kind == BoundReport::Kind::Regularity;
  const std::string d = reg ? "d" : "c";
  ctx.out << (reg ? "reg(I)      = " : "cd(S,I)     = ") << r.reg << '\n'
          << d << "           = " << r.d << '\n'
          << "n           = " << r.n << " (ambient " << r.ambient_n << ", support " << r.support_n << ")\n"
          << "f(n," << d << ")      = " << r.f_value << '\n'
          << "g(n," << d << ")      = " << r.g_value << '\n'
          << "bound       = " << r.bound << '\n'
          << "holds       = " << yes_no(r.theorem_holds) << '\n'
          << "tight       = " << yes_no(r.tight) << '\n'
          << "faltings    = " << r.faltings_value << '\n'
          << "field       = " << r.field << '\n';
}

void print_summary(Context& ctx, const EnumerationSummary& s) {
  if (ctx.as_json) {
    emit(ctx, s.to_json());
    return;
  }
  ctx.out << "n = " << s.n << ", d = " << s.d << ", field " << s.field << ", symmetry " << to_string(s.symmetry) << '\n'
          << "ideals      " << s.total_ideals << '\n'
          << "N2 ideals   " << s.n2_count << '\n';
  if (s.symmetry == SymmetryMode::Skip) ctx.out << "skipped     " << s.skipped << '\n';
  if (s.n2_classes) ctx.out << "N2 classes  " << *s.n2_classes << '\n';
  ctx.out << "max reg     " << s.max_reg << " (bound " << regularity_bound(s.n, s.d) << ")\n"
          << "extremal    " << s.extremal_count << '\n'
          << "violations  " << s.violations.size() << '\n';
  for (const auto& v : s.violations) ctx.out << "  " << describe(v) << '\n';
  if (!s.complete) ctx.out << "stopped at cursor " << s.cursor << '\n';
  ctx.out << "elapsed     " << s.elapsed.count() << " s\n";
}

unsigned default_jobs() {
  const char* env = std::getenv("MONOMIAL_LAB_JOBS");
  if (!env || !*env) return 1;
  try {
    std::size_t used = 0;
    const long v = std::stol(env, &used);
    if (used == std::string(env).size() && v >= 1 && v <= 4096) return static_cast<unsigned>(v);
  } catch (const std::exception&) {
  }
  throw InputError(std::string("MONOMIAL_LAB_JOBS must be a positive integer, got '") + env + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Regularity of squarefree monomial ideals with linear first syzygies", "monomial-lab"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  bool as_json = false;
  std::string field_text = "QQ";
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--field", field_text, "coefficient field: QQ or p:<prime>");

  std::string file;
  int k = 0, n = 0, d = 0, n_min = 0, n_max = 0;
  bool fine = false, table = false, use_support = false, resume = false;
  unsigned jobs = 0;
  std::string checkpoint, symmetry = "off", results;
  std::size_t chunk_size = 4096, checkpoint_every = 16, stop_after = 0;

  auto with_file = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "ideal file")->required();
    return sub;
  };
  auto* reg_cmd = with_file("reg", "regularity of I");
  auto* betti_cmd = with_file("betti", "graded Betti table of I");
  betti_cmd->add_flag("--fine", fine, "also list the squarefree-graded Betti numbers");
  auto* n2_cmd = with_file("n2", "N2 by the generator-graph criterion");
  auto* nk_cmd = with_file("nk", "N_k from the Betti table");
  nk_cmd->add_option("--k", k, "number of linear steps")->required();
  auto* dual_cmd = with_file("dual", "Alexander dual");
  auto* s2_cmd = with_file("s2", "Serre S2 of S/I through the dual");
  auto* cd_cmd = with_file("cd", "cohomological dimension cd(S,I)");
  auto* check_cmd = with_file("check", "regularity against max(d, f(n,d)) for an N2 ideal");
  check_cmd->add_flag("--support", use_support, "evaluate f at |supp(I)|");
  auto* check_s2_cmd = with_file("check-s2", "cd(S,I) against max(c, f(n,c)) when S/I is S2");
  check_s2_cmd->add_flag("--support", use_support, "evaluate f at |supp(I)|");

  auto* bound_cmd = app.add_subcommand("bound", "values of f(n,d) and g(n,d)");
  bound_cmd->add_option("--n", n, "number of variables");
  bound_cmd->add_option("--d", d, "degree")->required();
  bound_cmd->add_flag("--table", table, "print a row of values for n-min..n-max");
  bound_cmd->add_option("--n-min", n_min, "first column of the table (default d)");
  bound_cmd->add_option("--n-max", n_max, "last column of the table");

  auto* sharp_cmd = app.add_subcommand("sharp", "N2 ideal with reg = f(n,d), d odd");
  sharp_cmd->add_option("--n", n)->required();
  sharp_cmd->add_option("--d", d)->required();

  auto* verify_cmd = app.add_subcommand("verify", "exhaustive check over all degree-d ideals in n variables");
  verify_cmd->add_option("--n", n)->required();
  verify_cmd->add_option("--d", d)->required();
  verify_cmd->add_option("--jobs", jobs, "worker threads (default $MONOMIAL_LAB_JOBS or 1)");
  verify_cmd->add_option("--checkpoint", checkpoint, "checkpoint file");
  verify_cmd->add_flag("--resume", resume, "continue from the checkpoint");
  verify_cmd->add_option("--symmetry", symmetry, "off, dedup or skip");
  verify_cmd->add_option("--results", results, "write JSON-lines records here");
  verify_cmd->add_option("--chunk-size", chunk_size, "subset indices per work unit");
  verify_cmd->add_option("--checkpoint-every", checkpoint_every, "chunks between checkpoint writes");
  verify_cmd->add_option("--stop-after", stop_after, "stop after this many chunks")->group("");

  auto* sweep_cmd = app.add_subcommand("gcd-sweep", "exhaustive check of the gcd witness lemma");
  sweep_cmd->add_option("--n", n)->required();
  sweep_cmd->add_option("--d", d)->required();

  auto* suite_cmd = app.add_subcommand("paper-suite", "run the built-in reference checks");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitTrue;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInput;
  }

  Context ctx{out, err, as_json};
  try {
    ctx.field = FieldSpec::parse(field_text);
    if (verify_cmd->parsed()) {
      if (resume && checkpoint.empty()) throw InputError("--resume needs --checkpoint");
      if (jobs == 0) jobs = default_jobs();
    }
    if (bound_cmd->parsed() && table && n_max == 0) throw InputError("--table needs --n-max");
    if (bound_cmd->parsed() && !table && bound_cmd->count("--n") == 0) throw InputError("bound needs --n or --table");

    auto ideal = [&] { return read_ideal_file(file); };

    if (reg_cmd->parsed()) {
      const int r = regularity(ideal(), ctx.field);
      if (ctx.as_json) emit(ctx, {{"reg", r}, {"field", ctx.field.to_string()}});
      else out << r << '\n';
      return kExitTrue;
    }
    if (betti_cmd->parsed()) {
      const auto t = betti_table(ideal(), ctx.field, {.fine = fine});
      if (ctx.as_json) {
        emit(ctx, betti_to_json(t));
      } else {
        out << format_betti_grid(t);
        if (t.fine()) {
          for (const auto& [key, rank] : *t.fine()) {
            out << "beta_" << key.first << "," << format_monomial(key.second) << " = " << rank << '\n';
          }
        }
      }
      return kExitTrue;
    }
    if (n2_cmd->parsed()) {
      const auto v = is_n2_graph(ideal());
      if (ctx.as_json) {
        emit(ctx, {{"n2", v.holds}, {"witness", v.witness ? witness_to_json(*v.witness) : json(nullptr)}});
      } else {
        out << yes_no(v.holds) << '\n';
        if (v.witness) {
          out << "disconnected pair: " << format_monomial(v.witness->first) << ", "
              << format_monomial(v.witness->second) << '\n';
        }
      }
      return verdict(v.holds);
    }
    if (nk_cmd->parsed()) {
      const bool holds = is_nk_betti(ideal(), k, ctx.field);
      if (ctx.as_json) emit(ctx, {{"k", k}, {"nk", holds}, {"field", ctx.field.to_string()}});
      else out << yes_no(holds) << '\n';
      return verdict(holds);
    }
    if (dual_cmd->parsed()) {
      const auto r = height_profile(ideal());
      if (ctx.as_json) emit(ctx, dual_report_to_json(r));
      else out << format_ideal(r.dual);
      return kExitTrue;
    }
    if (s2_cmd->parsed()) {
      const auto v = is_s2(ideal(), ctx.field);
      if (ctx.as_json) emit(ctx, {{"s2", v.holds}, {"height", v.height}, {"field", ctx.field.to_string()}});
      else out << yes_no(v.holds) << " (height " << v.height << ")\n";
      return verdict(v.holds);
    }
    if (cd_cmd->parsed()) {
      const int c = cohomological_dimension(ideal(), ctx.field);
      if (ctx.as_json) emit(ctx, {{"cd", c}, {"field", ctx.field.to_string()}});
      else out << c << '\n';
      return kExitTrue;
    }
    if (check_cmd->parsed() || check_s2_cmd->parsed()) {
      const BoundOptions opts{use_support};
      const auto r = check_cmd->parsed() ? check_regularity_bound(ideal(), ctx.field, opts)
                                         : check_cd_bound(ideal(), ctx.field, opts);
      print_report(ctx, r);
      if (!r.theorem_holds) err << "bound exceeded: " << r.reg << " > " << r.bound << '\n';
      return r.theorem_holds ? kExitTrue : kExitInternal;
    }
    if (bound_cmd->parsed()) {
      if (table) {
        const int lo = n_min ? n_min : std::max(d, 1);
        if (ctx.as_json) {
          json rows = json::array();
          for (int m = lo; m <= n_max; ++m) rows.push_back({{"n", m}, {"f", f_bound(m, d)}, {"g", g_bound(m, d)}});
          emit(ctx, {{"d", d}, {"rows", rows}});
        } else {
          out << format_bound_table(d, lo, n_max);
        }
      } else {
        const int f = f_bound(n, d), g = g_bound(n, d);
        if (ctx.as_json) {
          emit(ctx, {{"n", n}, {"d", d}, {"f", f}, {"g", g}, {"bound", regularity_bound(n, d)}});
        } else {
          out << "f(" << n << "," << d << ") = " << f << '\n' << "g(" << n << "," << d << ") = " << g << '\n';
        }
      }
      return kExitTrue;
    }
    if (sharp_cmd->parsed()) {
      const auto i = sharp_example(n, d);
      if (ctx.as_json) emit(ctx, {{"ambient", n}, {"d", d}, {"reg", f_bound(n, d)}, {"generators", ideal_to_json(i)}});
      else out << format_ideal(i);
      return kExitTrue;
    }
    if (verify_cmd->parsed()) {
      VerifyOptions opts;
      opts.jobs = jobs;
      opts.chunk_size = chunk_size;
      opts.checkpoint_path = checkpoint;
      opts.checkpoint_every = checkpoint_every;
      opts.resume = resume;
      opts.symmetry = parse_symmetry(symmetry);
      opts.stop_after_chunks = stop_after;
      const auto s = verify_range(n, d, ctx.field, opts);
      print_summary(ctx, s);
      if (!results.empty()) {
        std::ofstream f(results);
        if (!f) throw InputError("cannot write results file '" + results + "'");
        write_results_jsonl(s, f);
      }
      if (!s.violations.empty()) {
        err << s.violations.size() << " N2 ideal(s) exceed the regularity bound\n";
        return kExitInternal;
      }
      return kExitTrue;
    }
    if (sweep_cmd->parsed()) {
      const auto r = gcd_lemma_sweep(n, d, ctx.field);
      if (ctx.as_json) {
        emit(ctx, r.to_json());
      } else {
        out << "ideals " << r.ideals << ", N2 " << r.n2_ideals << ", instances " << r.instances << ", witnessed "
            << r.witnessed << ", violations " << r.violations.size() << '\n';
        for (const auto& [i, f] : r.violations) out << "  " << describe(i) << " f = " << format_monomial(f) << '\n';
      }
      return r.violations.empty() ? kExitTrue : kExitInternal;
    }
    if (suite_cmd->parsed()) {
      const auto checks = golden_suite();
      bool all = true;
      json rows = json::array();
      for (const auto& c : checks) {
        all = all && c.passed;
        if (ctx.as_json) rows.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        else out << (c.passed ? "PASS  " : "FAIL  ") << c.name << (c.passed ? "" : "  [" + c.detail + "]") << '\n';
      }
      if (ctx.as_json) emit(ctx, {{"passed", all}, {"checks", rows}});
      else out << (all ? "all checks passed" : "some checks failed") << '\n';
      return verdict(all);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ResumeError& e) {
    err << "resume error: " << e.what() << '\n';
    return kExitInput;
  } catch (const TheoremViolation& e) {
    err << "theorem violation: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  err << "internal error: no command ran\n";
  return kExitInternal;
}

}  // namespace monlab
