#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lacunary/context.hpp"
#include "lacunary/detail/numeric.hpp"
#include "lacunary/detail/quadrature.hpp"
#include "lacunary/errors.hpp"
#include "lacunary/phase.hpp"
#include "lacunary/saddles.hpp"

namespace lacunary {

// Steepest descent/ascent paths through the saddles: curves of constant
// Im psi along which Re psi changes monotonically.  Traced with a
// predictor (unit-speed gradient flow) and corrector (Newton projection
// back onto the Im psi level set).  The integrand e^{-n psi} is entire in
// s, so integrals along the traced polylines equal the exact path
// integrals; only quadrature error on each chord enters.

enum class path_kind { descent, ascent };

struct path_terminus {
  enum class kind { singularity, infinity, step_limit } what = kind::step_limit;
  long index = 0;      // T_index when singularity
  double angle = 0.0;  // direction when infinity
};

struct path_polyline {
  long k = 0;
  path_kind kind = path_kind::descent;
  std::vector<complex> points;  // ordered from the saddle outward
  path_terminus terminus;
};

struct trace_options {
  double arc_step = 0.05;         // maximum step length
  double re_psi_budget = -1.0;    // |Re psi - Re psi(s_k)| at which a branch
                                  // clear of all singularities is declared
                                  // to run to infinity; < 0 => max(6, 200/n)
  double singularity_tol = 1e-6;  // |1 + x e^{is}| at which a branch stops on T_j
  std::size_t max_steps = 60000;
  double level_tol = 1e-7;        // Im psi fidelity kept at every point
};

namespace detail {

// branch-continuous log of 1 + x e^{is} along a path: the argument is
// unwound step by step (adjacent points must differ by < pi in arg).
struct log_tracker {
  complex last_w;
  double cum_arg = 0.0;

  explicit log_tracker(complex w0) : last_w(w0), cum_arg(std::arg(w0)) {}

  complex peek(complex w) const {
    return {std::log(std::abs(w)), cum_arg + std::arg(w / last_w)};
  }
  void commit(complex w) {
    cum_arg += std::arg(w / last_w);
    last_w = w;
  }
};

inline path_polyline trace_branch(const saddle& sad, const problem_context& ctx, complex launch_dir,
                                  bool descent, const trace_options& opts) {
  path_polyline path;
  path.k = sad.k;
  path.kind = descent ? path_kind::descent : path_kind::ascent;

  const double budget =
      opts.re_psi_budget > 0.0 ? opts.re_psi_budget : std::max(6.0, 200.0 / ctx.n);
  const double n = static_cast<double>(ctx.n);
  const complex quad_coef = 1.0 / (4.0 * n * ctx.logx);

  auto w_of = [&](complex s) { return 1.0 + ctx.x * std::exp(iu * s); };
  auto dpsi = [&](complex s) { return psi_derivative(s, 1, ctx); };

  const double delta = 1e-4 / std::sqrt(std::abs(sad.ddpsi));
  complex s = sad.s + delta * launch_dir;
  log_tracker lt(w_of(sad.s));
  lt.commit(w_of(s));

  auto psi_c = [&](complex sp, const log_tracker& t) {
    return sp * sp * quad_coef - t.peek(w_of(sp));
  };

  const double level = psi_c(s, lt).imag();
  const double re0 = sad.psi_s.real();

  path.points.push_back(sad.s);
  path.points.push_back(s);

  const double sign = descent ? 1.0 : -1.0;
  double h = std::min(opts.arc_step, 10.0 * delta);

  for (std::size_t step = 0; step < opts.max_steps; ++step) {
    complex grad = dpsi(s);
    double gn = std::abs(grad);
    if (gn < 1e-12) {
      // stagnation away from the launch saddle: a connection with another
      // saddle (Stokes configuration)
      path.terminus.what = path_terminus::kind::step_limit;
      return path;
    }
    const complex v = sign * std::conj(grad) / gn;

    bool accepted = false;
    complex sp;
    for (int halve = 0; halve < 40 && !accepted; ++halve) {
      sp = s + h * v;
      // corrector: project back onto Im psi = level
      bool ok = false;
      double corr_total = 0.0;
      for (int it = 0; it < 6; ++it) {
        const complex w = w_of(sp);
        if (std::abs(w) < opts.singularity_tol) {
          ok = true;  // termination handled below
          break;
        }
        const double f = (sp * sp * quad_coef - lt.peek(w)).imag() - level;
        if (std::abs(f) < 0.25 * opts.level_tol) {
          ok = true;
          break;
        }
        const complex gp = dpsi(sp);
        const double gpn = std::abs(gp);
        if (gpn < 1e-14) break;
        const complex corr = -f * iu * std::conj(gp) / (gpn * gpn);
        sp += corr;
        corr_total += std::abs(corr);
      }
      if (ok && corr_total <= 0.25 * h) {
        accepted = true;
      } else {
        h *= 0.5;
        if (h < 1e-13) {
          path.terminus.what = path_terminus::kind::step_limit;
          return path;
        }
      }
    }
    if (!accepted) {
      path.terminus.what = path_terminus::kind::step_limit;
      return path;
    }

    const complex w_new = w_of(sp);
    if (std::abs(w_new) < opts.singularity_tol) {
      const long j = detail::nearest_singularity_index(sp, ctx);
      path.points.push_back(sp);
      path.points.push_back(singularity(j, ctx));  // close the polyline visually
      path.terminus.what = path_terminus::kind::singularity;
      path.terminus.index = j;
      return path;
    }

    lt.commit(w_new);
    s = sp;
    path.points.push_back(s);

    // infinity only when clear of every singularity: a branch headed for a
    // T_j keeps tracing (with shrinking steps) until the proximity stop
    const double re_now = (s * s * quad_coef - lt.peek(w_new)).real();
    if (std::abs(re_now - re0) > budget && std::abs(w_new) > 0.75) {
      path.terminus.what = path_terminus::kind::infinity;
      path.terminus.angle = std::arg(s);
      return path;
    }

    // step-size control: grow when the corrector was quiet, shrink near a
    // singularity where the level set curls tightly
    h = std::min({1.4 * h, opts.arc_step, 0.25 * std::abs(w_new) + 1e-9});
  }
  path.terminus.what = path_terminus::kind::step_limit;
  return path;
}

}  // namespace detail

/// The two steepest-descent branches leaving a saddle, launched along the
/// descent bisectors at angles -arg(psi'')/2 and the opposite.
inline std::pair<path_polyline, path_polyline> trace_descent(const saddle& sad,
                                                             const problem_context& ctx,
                                                             const trace_options& opts = {}) {
  if (std::abs(sad.ddpsi) < 1e-300) throw degenerate_error("trace_descent: psi''(s_k) = 0");
  const double phi = -0.5 * std::arg(sad.ddpsi);
  const complex dir = std::polar(1.0, phi);
  return {detail::trace_branch(sad, ctx, dir, true, opts),
          detail::trace_branch(sad, ctx, -dir, true, opts)};
}

/// Steepest-ascent branches (figure use only), launched perpendicular to
/// the descent bisectors.
inline std::pair<path_polyline, path_polyline> trace_ascent(const saddle& sad,
                                                            const problem_context& ctx,
                                                            const trace_options& opts = {}) {
  if (std::abs(sad.ddpsi) < 1e-300) throw degenerate_error("trace_ascent: psi''(s_k) = 0");
  const double phi = -0.5 * std::arg(sad.ddpsi) + pi / 2;
  const complex dir = std::polar(1.0, phi);
  return {detail::trace_branch(sad, ctx, dir, false, opts),
          detail::trace_branch(sad, ctx, -dir, false, opts)};
}

/// Integral of e^{-n psi} along one polyline in its stored orientation,
/// without the 1/(2 sqrt(pi log x)) prefactor.
inline complex path_integral(const path_polyline& path, const problem_context& ctx,
                             double rel_tol = 1e-11) {
  auto f = [&](complex s) {
    const complex u = ctx.x * std::exp(iu * s);
    return std::exp(-s * s / (4.0 * ctx.logx)) * detail::pow_int(1.0 + u, ctx.n);
  };
  detail::neumaier_complex acc;
  for (std::size_t i = 0; i + 1 < path.points.size(); ++i) {
    const complex a = path.points[i];
    const complex b = path.points[i + 1];
    const complex d = b - a;
    if (std::abs(d) == 0.0) continue;
    auto seg = detail::integrate_adaptive([&](double t) { return f(a + t * d) * d; }, 0.0, 1.0,
                                          rel_tol, 0.0, 1, 64);
    acc.add(seg.value);
  }
  return acc.value();
}

/// Sum of the serpentine contour integrals over the supplied descent paths,
/// with the representation prefactor: for real x over k in [-K, K] this
/// reproduces the direct sum.  Branch pairs for each k are oriented so that
/// every C_k runs in the +Re direction.
inline complex contour_quadrature(std::span<const path_polyline> paths, const problem_context& ctx,
                                  double rel_tol = 1e-11) {
  std::map<long, std::vector<const path_polyline*>> by_k;
  for (const auto& p : paths)
    if (p.kind == path_kind::descent) by_k[p.k].push_back(&p);

  detail::neumaier_complex acc;
  for (const auto& [k, branches] : by_k) {
    if (branches.empty()) continue;
    if (branches.size() == 1) {
      acc.add(path_integral(*branches[0], ctx, rel_tol));
      continue;
    }
    const path_polyline* a = branches[0];
    const path_polyline* b = branches[1];
    // orient: the branch ending further left is traversed inward
    if (a->points.back().real() > b->points.back().real()) std::swap(a, b);
    acc.add(path_integral(*b, ctx, rel_tol) - path_integral(*a, ctx, rel_tol));
  }
  return acc.value() / (2.0 * std::sqrt(pi * ctx.logx));
}

// ---------------------------------------------------------------------------
// figure emission (SVG 1.1 polylines / RFC-4180-style CSV), deterministic
// byte output for identical inputs

struct figure_data {
  std::vector<path_polyline> paths;
  std::vector<complex> saddle_marks;
  std::vector<complex> singularity_marks;
};

namespace detail {

inline std::string fmt6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace detail

inline std::string emit_csv(const figure_data& fig) {
  std::string out = "k,kind,re,im\r\n";
  for (const auto& p : fig.paths) {
    const char* kind = (p.kind == path_kind::descent) ? "descent" : "ascent";
    for (const auto& pt : p.points) {
      out += std::to_string(p.k);
      out += ',';
      out += kind;
      out += ',';
      out += detail::fmt6(pt.real());
      out += ',';
      out += detail::fmt6(pt.imag());
      out += "\r\n";
    }
  }
  return out;
}

inline std::string emit_svg(const figure_data& fig) {
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  auto grow = [&](complex p) {
    xmin = std::min(xmin, p.real());
    xmax = std::max(xmax, p.real());
    ymin = std::min(ymin, p.imag());
    ymax = std::max(ymax, p.imag());
  };
  for (const auto& p : fig.paths)
    for (const auto& pt : p.points) grow(pt);
  for (const auto& p : fig.saddle_marks) grow(p);
  for (const auto& p : fig.singularity_marks) grow(p);
  if (xmin > xmax) { xmin = ymin = -1.0; xmax = ymax = 1.0; }

  const double pad = 0.06 * std::max(xmax - xmin, ymax - ymin) + 0.5;
  xmin -= pad; xmax += pad; ymin -= pad; ymax += pad;
  const double width = 900.0;
  const double scale = width / (xmax - xmin);
  const double height = (ymax - ymin) * scale;

  auto X = [&](double re) { return (re - xmin) * scale; };
  auto Y = [&](double im) { return (ymax - im) * scale; };  // y grows upward

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         detail::fmt6(width) + "\" height=\"" + detail::fmt6(height) + "\" viewBox=\"0 0 " +
         detail::fmt6(width) + " " + detail::fmt6(height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (const auto& p : fig.paths) {
    const bool desc = p.kind == path_kind::descent;
    svg += "<polyline fill=\"none\" stroke=\"";
    svg += desc ? "#1a4876" : "#b2532a";
    svg += "\" stroke-width=\"1.5\"";
    if (!desc) svg += " stroke-dasharray=\"6,4\"";
    svg += " points=\"";
    for (std::size_t i = 0; i < p.points.size(); ++i) {
      if (i) svg += ' ';
      svg += detail::fmt6(X(p.points[i].real())) + "," + detail::fmt6(Y(p.points[i].imag()));
    }
    svg += "\"/>\n";
  }
  for (const auto& s : fig.saddle_marks) {
    svg += "<circle cx=\"" + detail::fmt6(X(s.real())) + "\" cy=\"" + detail::fmt6(Y(s.imag())) +
           "\" r=\"4\" fill=\"black\"/>\n";
  }
  const double c = 5.0;
  for (const auto& t : fig.singularity_marks) {
    const double cx = X(t.real()), cy = Y(t.imag());
    svg += "<path stroke=\"#808080\" stroke-width=\"1.5\" d=\"M" + detail::fmt6(cx - c) + " " +
           detail::fmt6(cy - c) + " L" + detail::fmt6(cx + c) + " " + detail::fmt6(cy + c) + " M" +
           detail::fmt6(cx - c) + " " + detail::fmt6(cy + c) + " L" + detail::fmt6(cx + c) + " " +
           detail::fmt6(cy - c) + "\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

enum class figure_format { svg, csv };

inline std::string emit_figure(const figure_data& fig, figure_format fmt) {
  return fmt == figure_format::svg ? emit_svg(fig) : emit_csv(fig);
}

}  // namespace lacunary
