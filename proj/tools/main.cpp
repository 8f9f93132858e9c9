// Command-line front end: evaluation, saddle catalogues, expansions,
// Stokes charts, path tracing, magnitude profiles, and the deterministic
// reproduction harness for the built-in reference tables and figures.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lacunary/lacunary.hpp"
#include "lacunary/reference_tables.hpp"

using json = nlohmann::ordered_json;
using namespace lacunary;

namespace {

std::string sig10(double v) {
  char b[64];
  std::snprintf(b, sizeof b, "%.10g", v);
  return b;
}

std::string fmt_complex(complex v) {
  if (v.imag() == 0.0) return sig10(v.real());
  return sig10(v.real()) + (v.imag() < 0 ? " - " : " + ") + sig10(std::abs(v.imag())) + "i";
}

json json_complex(complex v) { return json{{"re", v.real()}, {"im", v.imag()}}; }

// exactly one of (z | x | abs-x) selects the parameterization
struct param_group {
  std::optional<double> z, x, abs_x;
  double theta_pi = 0.0;

  void attach(CLI::App* cmd, bool theta_allowed = true) {
    cmd->add_option("--z", z, "argument z of the polynomial (|z| < 1 for ctx-based verbs)");
    cmd->add_option("--x", x, "real x > 1 (z = x^-2)");
    cmd->add_option("--abs-x", abs_x, "|x| > 1; combine with --theta-pi for complex x");
    if (theta_allowed)
      cmd->add_option("--theta-pi", theta_pi, "arg(x) in units of pi (default 0)");
  }

  int count() const { return (z ? 1 : 0) + (x ? 1 : 0) + (abs_x ? 1 : 0); }

  problem_context context(long n) const {
    if (count() != 1)
      throw CLI::ValidationError("exactly one of --z, --x, --abs-x must be given");
    if (z) return problem_context::from_z(n, *z);
    if (x) return problem_context(n, *x);
    return problem_context(n, std::polar(*abs_x, theta_pi * pi));
  }

  complex z_value(long n) const {
    if (count() != 1)
      throw CLI::ValidationError("exactly one of --z, --x, --abs-x must be given");
    if (z) return {*z, 0.0};
    return context(n).z;
  }
};

std::string out_dir_default() {
  const char* env = std::getenv("LACUNARY_OUT_DIR");
  return env ? env : ".";
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw error("cannot write output file: " + path);
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

// ---------------------------------------------------------------- reproduce

struct report_row {
  std::string label;
  double computed;
  double reference;
  double deviation;  // relative unless a table uses absolute components
  bool within;
};

void print_report(const std::vector<report_row>& rows, const std::string& format,
                  const char* dev_header) {
  if (format == "json") {
    json out = json::array();
    for (const auto& r : rows)
      out.push_back({{"label", r.label},
                     {"computed", r.computed},
                     {"reference", r.reference},
                     {"deviation", r.deviation},
                     {"within_tolerance", r.within}});
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::printf("%-34s %18s %18s %12s  %s\n", "label", "computed", "reference", dev_header, "ok");
  for (const auto& r : rows)
    std::printf("%-34s %18s %18s %12.3e  %s\n", r.label.c_str(), sig10(r.computed).c_str(),
                sig10(r.reference).c_str(), r.deviation, r.within ? "yes" : "NO");
}

std::vector<report_row> reproduce_table1() {
  std::vector<report_row> rows;
  problem_context ctx(1000, 2.0);
  for (const auto& ref : reference::table1) {
    const complex guess = saddle_guess(ref.k, ctx);
    const saddle sad = saddle_at(ref.k, ctx);
    auto push = [&](const std::string& label, double got, double want) {
      rows.push_back({label, got, want, std::abs(got - want), std::abs(got - want) < 1e-6});
    };
    const std::string base = "k=" + std::to_string(ref.k);
    push(base + " Re s", sad.s.real(), ref.refined.real());
    push(base + " Im s", sad.s.imag(), ref.refined.imag());
    push(base + " Re guess", guess.real(), ref.approx.real());
    push(base + " Im guess", guess.imag(), ref.approx.imag());
  }
  return rows;
}

std::vector<report_row> reproduce_table2() {
  std::vector<report_row> rows;
  for (const auto& col : reference::table2) {
    const double exact = eval_direct(col.n, 1.0 / (col.x * col.x)).value.real();
    for (int j = 0; j <= 3; ++j) {
      const auto e = expand_real(problem_context(col.n, col.x), j, 1);
      const double err = std::abs(e.total.real() - exact) / exact;
      const double dev = std::abs(err - col.rel_err[j]) / col.rel_err[j];
      rows.push_back({"n=" + std::to_string(col.n) + " x=" + sig10(col.x) + " j=" +
                          std::to_string(j),
                      err, col.rel_err[j], dev, dev < 0.05});
    }
  }
  return rows;
}

std::vector<report_row> reproduce_table3() {
  std::vector<report_row> rows;
  for (const auto& cs : reference::table3) {
    const std::string base = "n=" + std::to_string(cs.n) + " x=" + sig10(cs.x);
    const double exact = eval_direct(cs.n, 1.0 / (cs.x * cs.x)).value.real();
    const double asym = expand_real(problem_context(cs.n, cs.x), 3, 1).total.real();
    const double gn = gn_approx(cs.n, cs.x * cs.x);
    auto push = [&](const std::string& what, double got, double want, double tol) {
      const double dev = std::abs(got - want) / std::abs(want);
      rows.push_back({base + " " + what, got, want, dev, dev < tol});
    };
    push("exact", exact, cs.exact, 5e-10);  // all 10 displayed digits
    push("asymptotic", asym, cs.asymptotic, 1e-8);
    push("gn", gn, cs.gn, 1e-8);
  }
  return rows;
}

std::vector<report_row> reproduce_table4() {
  std::vector<report_row> rows;
  for (const auto& col : reference::table4) {
    for (int k = 1; k <= 5; ++k) {
      const auto t = stokes_angle(k, col.n, col.abs_x);
      const double got = t ? *t / pi : -1.0;
      const double want = col.theta_over_pi[k - 1];
      rows.push_back({"n=" + std::to_string(col.n) + " |x|=" + sig10(col.abs_x) + " pair (" +
                          std::to_string(k) + "," + std::to_string(k + 1) + ")",
                      got, want, std::abs(got - want), std::abs(got - want) < 2e-5});
    }
  }
  return rows;
}

std::vector<report_row> reproduce_table5() {
  std::vector<report_row> rows;
  for (const auto& col : reference::table5) {
    for (int row = 0; row < 6; ++row) {
      const double theta = reference::table5_theta_over_pi[row] * pi;
      problem_context ctx(col.n, std::polar(col.abs_x, theta));
      const complex exact = eval_direct(col.n, ctx.z).value;
      const auto e = expand_complex(ctx, 3);
      const double err = std::abs(e.total - exact) / std::abs(exact);
      const double want = col.rel_err[row];
      const double ratio = err / want;
      rows.push_back({"n=" + std::to_string(col.n) + " |x|=" + sig10(col.abs_x) + " theta=" +
                          sig10(reference::table5_theta_over_pi[row]) + "pi",
                      err, want, ratio, ratio < 2.0 && ratio > 0.5});
    }
  }
  return rows;
}

figure_data build_paths_figure(const problem_context& ctx, long k_min, long k_max,
                               bool with_ascent) {
  figure_data fig;
  const auto cat = saddle_catalog(k_min, k_max, ctx);
  for (const auto& s : cat) {
    auto [a, b] = trace_descent(s, ctx);
    fig.paths.push_back(std::move(a));
    fig.paths.push_back(std::move(b));
    if (with_ascent) {
      auto [c, d] = trace_ascent(s, ctx);
      fig.paths.push_back(std::move(c));
      fig.paths.push_back(std::move(d));
    }
    fig.saddle_marks.push_back(s.s);
  }
  for (long k = k_min - 1; k <= k_max; ++k) fig.singularity_marks.push_back(singularity(k, ctx));
  return fig;
}

std::string profile_csv(const std::vector<std::pair<long, double>>& prof) {
  std::string out = "k,log10_abs_J\r\n";
  for (const auto& [k, v] : prof) {
    char b[64];
    std::snprintf(b, sizeof b, "%ld,%.6f\r\n", k, v);
    out += b;
  }
  return out;
}

std::string profile_svg(const std::vector<std::pair<long, double>>& prof) {
  figure_data fig;  // reuse the polyline renderer with (k, log10|J|) points
  path_polyline line;
  line.k = 0;
  for (const auto& [k, v] : prof) line.points.push_back({static_cast<double>(k), v});
  fig.paths.push_back(line);
  for (const auto& [k, v] : prof) fig.saddle_marks.push_back({static_cast<double>(k), v});
  return emit_svg(fig);
}

int run_reproduce_figures(int fig, const std::string& dir) {
  std::vector<std::string> written;
  auto emit_both = [&](const figure_data& data, const std::string& stem) {
    write_file(dir + "/" + stem + ".svg", emit_svg(data));
    write_file(dir + "/" + stem + ".csv", emit_csv(data));
    written.push_back(dir + "/" + stem + ".svg");
    written.push_back(dir + "/" + stem + ".csv");
  };

  if (fig == 1) {
    problem_context ctx(200, 2.0);
    emit_both(build_paths_figure(ctx, -2, 2, true), "fig1");
  } else if (fig == 2) {
    const double thetas[4] = {0.30, 0.22172, 0.18, 0.09844};
    const char* stems[4] = {"fig2a", "fig2b", "fig2c", "fig2d"};
    for (int p = 0; p < 4; ++p) {
      problem_context ctx(100, std::polar(3.0, thetas[p] * pi));
      const long k_hi = (p == 3) ? 4 : 3;
      emit_both(build_paths_figure(ctx, -2, k_hi, false), stems[p]);
    }
  } else if (fig == 3) {
    const double xs[2] = {1.50, 1.10};
    const char* stems[2] = {"fig3a", "fig3b"};
    for (int p = 0; p < 2; ++p) {
      problem_context ctx(200, std::polar(xs[p], 0.40 * pi));
      const auto prof = contribution_profile(ctx, -14, 1);
      write_file(dir + "/" + std::string(stems[p]) + ".csv", profile_csv(prof));
      write_file(dir + "/" + std::string(stems[p]) + ".svg", profile_svg(prof));
      written.push_back(dir + "/" + std::string(stems[p]) + ".csv");
      written.push_back(dir + "/" + std::string(stems[p]) + ".svg");
    }
  } else {
    throw domain_error("reproduce: --fig must be 1, 2 or 3");
  }
  for (const auto& w : written) std::cout << "wrote " << w << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lacunary binomial-type polynomials: exact evaluation and saddle-point expansions"};
  app.require_subcommand(1);
  std::string format = "table";
  app.add_option("--format", format, "table | json")->check(CLI::IsMember({"table", "json"}));

  long n = 0;

  // ---- eval
  auto* c_eval = app.add_subcommand("eval", "evaluate wp_n by direct summation or quadrature");
  param_group p_eval;
  std::string method = "direct";
  c_eval->add_option("--n", n, "degree")->required();
  p_eval.attach(c_eval);
  c_eval->add_option("--method", method, "direct | dd | quadrature")
      ->check(CLI::IsMember({"direct", "dd", "quadrature"}));

  // ---- saddles
  auto* c_sad = app.add_subcommand("saddles", "locate saddles s_k (guess + Newton refinement)");
  param_group p_sad;
  long kmin = 0, kmax = 5;
  c_sad->add_option("--n", n, "degree")->required();
  p_sad.attach(c_sad);
  c_sad->add_option("--kmin", kmin, "lowest index");
  c_sad->add_option("--kmax", kmax, "highest index");

  // ---- expand
  auto* c_exp = app.add_subcommand("expand", "saddle-point expansion of wp_n");
  param_group p_exp;
  int jmax = 3, jmax_tail = 0;
  long kmax_exp = -1;
  bool compare = false;
  c_exp->add_option("--n", n, "degree")->required();
  p_exp.attach(c_exp);
  c_exp->add_option("--jmax", jmax, "series truncation order at the dominant saddle (0..3)");
  c_exp->add_option("--jmax-tail", jmax_tail, "series order for k >= 1 when x is real (0..3)");
  c_exp->add_option("--kmax", kmax_exp, "highest saddle index (real x; -1 = automatic)");
  c_exp->add_flag("--compare", compare, "also print the direct sum and the relative error");

  // ---- gn / conjecture
  auto* c_gn = app.add_subcommand("gn", "r(n)-based closed-form approximation");
  auto* c_conj = app.add_subcommand("conjecture", "Lambert-W closed-form approximation");
  std::optional<double> y_opt;
  param_group p_gn, p_conj;
  for (auto* cmd : {c_gn, c_conj}) {
    cmd->add_option("--n", n, "degree")->required();
    cmd->add_option("--y", y_opt, "y > 1 (z = 1/y)");
  }
  p_gn.attach(c_gn, false);
  p_conj.attach(c_conj, false);

  // ---- stokes
  auto* c_st = app.add_subcommand("stokes", "critical phases where adjacent saddles connect");
  double abs_x_st = 0.0;
  int kpairs = 5;
  c_st->add_option("--n", n, "degree")->required();
  c_st->add_option("--abs-x", abs_x_st, "|x| > 1")->required();
  c_st->add_option("--kpairs", kpairs, "number of pairs (1,2)..(kpairs,kpairs+1)");

  // ---- paths
  auto* c_paths = app.add_subcommand("paths", "trace steepest descent/ascent paths");
  param_group p_paths;
  long kmin_p = -2, kmax_p = 2;
  bool ascent = false;
  std::string fmt_paths = "svg", out_paths;
  c_paths->add_option("--n", n, "degree")->required();
  p_paths.attach(c_paths);
  c_paths->add_option("--kmin", kmin_p, "lowest saddle index");
  c_paths->add_option("--kmax", kmax_p, "highest saddle index");
  c_paths->add_flag("--ascent", ascent, "also trace steepest ascent paths");
  c_paths->add_option("--fig-format", fmt_paths, "svg | csv")
      ->check(CLI::IsMember({"svg", "csv"}));
  c_paths->add_option("--out", out_paths, "output file (default: stdout)");

  // ---- profile
  auto* c_prof = app.add_subcommand("profile", "per-saddle magnitude profile log10 |J_k|");
  param_group p_prof;
  long kmin_f = -10, kmax_f = 1;
  std::string out_prof;
  c_prof->add_option("--n", n, "degree")->required();
  p_prof.attach(c_prof);
  c_prof->add_option("--kmin", kmin_f, "lowest saddle index");
  c_prof->add_option("--kmax", kmax_f, "highest saddle index");
  c_prof->add_option("--out", out_prof, "write CSV here instead of printing");

  // ---- reproduce
  auto* c_rep = app.add_subcommand("reproduce", "recompute a built-in reference table or figure");
  int table = 0, fig = 0;
  std::string out_dir = out_dir_default();
  c_rep->add_option("--table", table, "reference table 1..5");
  c_rep->add_option("--fig", fig, "reference figure 1..3");
  c_rep->add_option("--out", out_dir, "output directory for figure files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (*c_eval) {
      eval_result r;
      complex xv{0.0, 0.0};
      if (method == "quadrature") {
        const problem_context ctx = p_eval.context(n);
        xv = ctx.x;
        r.value = eval_quadrature(ctx);
        r.term_count = 0;
        r.condition = 1.0;
      } else {
        const complex z = p_eval.z_value(n);
        r = (method == "dd") ? eval_direct_dd(n, z) : eval_direct(n, z);
      }
      if (format == "json") {
        json out{{"verb", "eval"},   {"n", n},
                 {"method", method}, {"value", json_complex(r.value)},
                 {"term_count", r.term_count}, {"condition", r.condition}};
        if (method == "quadrature") out["x"] = json_complex(xv);
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << fmt_complex(r.value) << "\n";
        if (method != "quadrature")
          std::cout << "terms: " << r.term_count << "  condition: " << sig10(r.condition) << "\n";
      }
    } else if (*c_sad) {
      const problem_context ctx = p_sad.context(n);
      const auto cat = saddle_catalog(kmin, kmax, ctx);
      if (format == "json") {
        json out = json::array();
        for (const auto& s : cat)
          out.push_back({{"k", s.k},
                         {"s", json_complex(s.s)},
                         {"guess", json_complex(s.guess)},
                         {"residual", s.residual}});
        std::cout << out.dump(2) << "\n";
      } else {
        std::printf("%4s %32s %32s %10s\n", "k", "s_k", "guess", "residual");
        for (const auto& s : cat)
          std::printf("%4ld %32s %32s %10.2e\n", s.k, fmt_complex(s.s).c_str(),
                      fmt_complex(s.guess).c_str(), s.residual);
      }
    } else if (*c_exp) {
      const problem_context ctx = p_exp.context(n);
      const expansion_result e = ctx.real_x() ? expand_real(ctx, jmax, kmax_exp, jmax_tail)
                                              : expand_complex(ctx, jmax);
      std::optional<double> rel;
      complex exact{0.0, 0.0};
      if (compare) {
        exact = eval_direct(n, ctx.z).value;
        rel = std::abs(e.total - exact) / std::abs(exact);
      }
      if (format == "json") {
        json contribs = json::array();
        for (const auto& c : e.contributions)
          contribs.push_back(
              {{"k", c.k}, {"value", json_complex(c.value)}, {"log10_abs", c.log_abs / std::log(10.0)}});
        json out{{"verb", "expand"},
                 {"n", n},
                 {"x", json_complex(ctx.x)},
                 {"jmax", jmax},
                 {"total", json_complex(e.total)},
                 {"k_min_used", e.k_min_used},
                 {"k_max_used", e.k_max_used},
                 {"truncation", e.truncation_note},
                 {"contributions", contribs}};
        if (rel) {
          out["direct"] = json_complex(exact);
          out["rel_error"] = *rel;
        }
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << fmt_complex(e.total) << "\n";
        std::cout << "saddles used: k in [" << e.k_min_used << ", " << e.k_max_used << "]  ("
                  << e.truncation_note << ")\n";
        if (rel)
          std::cout << "direct: " << fmt_complex(exact) << "  rel.error: " << sig10(*rel) << "\n";
      }
    } else if (*c_gn || *c_conj) {
      const bool is_gn = static_cast<bool>(*c_gn);
      const param_group& pg = is_gn ? p_gn : p_conj;
      double y;
      if (y_opt)
        y = *y_opt;
      else
        y = pg.context(n).y.real();
      const double v = is_gn ? gn_approx(n, y) : conjecture_approx(n, y);
      if (format == "json") {
        json out{{"verb", is_gn ? "gn" : "conjecture"}, {"n", n}, {"y", y}, {"value", v}};
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << sig10(v) << "\n";
      }
    } else if (*c_st) {
      const auto chart = build_chart(n, abs_x_st, kpairs);
      if (format == "json") {
        json events = json::array();
        for (const auto& ev : chart.events)
          events.push_back({{"pair", {ev.k, ev.k + 1}}, {"theta_star_over_pi", ev.theta_star / pi}});
        json out{{"verb", "stokes"}, {"n", n}, {"abs_x", abs_x_st}, {"events", events},
                 {"saturated", chart.saturated}};
        std::cout << out.dump(2) << "\n";
      } else {
        std::printf("%10s %16s\n", "pair", "theta*/pi");
        for (const auto& ev : chart.events)
          std::printf("  (%d,%d) %18.6f\n", ev.k, ev.k + 1, ev.theta_star / pi);
        if (chart.saturated)
          std::cout << "(no further connections above the sweep floor)\n";
      }
    } else if (*c_paths) {
      const problem_context ctx = p_paths.context(n);
      const figure_data data = build_paths_figure(ctx, kmin_p, kmax_p, ascent);
      const std::string doc =
          emit_figure(data, fmt_paths == "svg" ? figure_format::svg : figure_format::csv);
      if (out_paths.empty())
        std::cout << doc;
      else {
        write_file(out_paths, doc);
        std::cout << "wrote " << out_paths << "\n";
      }
    } else if (*c_prof) {
      const problem_context ctx = p_prof.context(n);
      const auto prof = contribution_profile(ctx, kmin_f, kmax_f);
      if (!out_prof.empty()) {
        write_file(out_prof, profile_csv(prof));
        std::cout << "wrote " << out_prof << "\n";
      } else if (format == "json") {
        json out = json::array();
        for (const auto& [k, v] : prof) out.push_back({{"k", k}, {"log10_abs_J", v}});
        std::cout << out.dump(2) << "\n";
      } else {
        std::printf("%6s %14s\n", "k", "log10|J_k|");
        for (const auto& [k, v] : prof) std::printf("%6ld %14.6f\n", k, v);
      }
    } else if (*c_rep) {
      if ((table != 0) == (fig != 0))
        throw domain_error("reproduce: give exactly one of --table 1..5 or --fig 1..3");
      if (fig != 0) return run_reproduce_figures(fig, out_dir);
      std::vector<report_row> rows;
      const char* dev_header = "rel.dev";
      switch (table) {
        case 1: rows = reproduce_table1(); dev_header = "abs.dev"; break;
        case 2: rows = reproduce_table2(); break;
        case 3: rows = reproduce_table3(); break;
        case 4: rows = reproduce_table4(); dev_header = "abs.dev"; break;
        case 5: rows = reproduce_table5(); dev_header = "ratio"; break;
        default: throw domain_error("reproduce: --table must be 1..5");
      }
      print_report(rows, format, dev_header);
    }
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
