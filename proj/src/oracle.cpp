#include "tiqm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "tiqm/errors.hpp"

namespace tiqm::oracle {

namespace {

// Gauss-Kronrod 7/15 abscissae and weights (QUADPACK qk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  cplx value;
  double err;
};

Panel gk15(const Integrand& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const cplx fc = f(centre);
  cplx kronrod = fc * kWgk[7];
  cplx gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const cplx sum = f(centre - dx) + f(centre + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

cplx pairwise_sum(const std::vector<cplx>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return v[lo];
  if (hi - lo == 2) return v[lo] + v[lo + 1];
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

struct ErrLess {
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.err != y.err) return x.err < y.err;
    return x.a > y.a;
  }
};

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct LegendreRule {
  std::vector<double> x;
  std::vector<double> w;
};

LegendreRule gauss_legendre(int n) {
  LegendreRule rule;
  rule.x.resize(n);
  rule.w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = z;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    rule.x[i] = -z;
    rule.x[n - 1 - i] = z;
    rule.w[i] = rule.w[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return rule;
}

double tolerance_for(const QuadratureSpec& spec, cplx value) {
  return std::max(spec.abs_tol, spec.rel_tol * std::abs(value));
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw Error(ErrorCode::domain, "quadrature tolerances must be positive");
  }
  if (!(radial_cutoff > 1.0)) throw Error(ErrorCode::domain, "radial cutoff must exceed 1");
  if (max_subdivisions < 1) throw Error(ErrorCode::domain, "max_subdivisions must be positive");
}

QuadratureResult integrate_interval(const Integrand& f, double a, double b,
                                    const QuadratureSpec& spec, double max_panel) {
  spec.validate();
  QuadratureResult out;
  if (a == b) return out;
  const bool reversed = b < a;
  if (reversed) std::swap(a, b);

  int initial = 1;
  if (max_panel > 0.0) {
    initial = static_cast<int>(std::ceil((b - a) / max_panel));
    initial = std::clamp(initial, 1, spec.max_subdivisions);
  }
  std::priority_queue<Panel, std::vector<Panel>, ErrLess> queue;
  cplx total = 0.0;
  double total_err = 0.0;
  const double width = (b - a) / initial;
  for (int i = 0; i < initial; ++i) {
    const double lo = a + i * width;
    const double hi = i + 1 == initial ? b : a + (i + 1) * width;
    Panel p = gk15(f, lo, hi);
    total += p.value;
    total_err += p.err;
    queue.push(p);
  }

  int subdivisions = 0;
  while (total_err > tolerance_for(spec, total)) {
    if (subdivisions >= spec.max_subdivisions) {
      throw Error(ErrorCode::non_convergence,
                  "adaptive quadrature exhausted its subdivision budget");
    }
    Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw Error(ErrorCode::non_convergence, "quadrature panel underflow");
    }
    Panel left = gk15(f, worst.a, mid);
    Panel right = gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    queue.push(left);
    queue.push(right);
    ++subdivisions;
  }

  std::vector<Panel> panels;
  panels.reserve(queue.size());
  while (!queue.empty()) {
    panels.push_back(queue.top());
    queue.pop();
  }
  std::sort(panels.begin(), panels.end(),
            [](const Panel& x, const Panel& y) { return x.a < y.a; });
  std::vector<cplx> values;
  values.reserve(panels.size());
  double err = 0.0;
  for (const Panel& p : panels) {
    values.push_back(p.value);
    err += p.err;
  }
  out.value = pairwise_sum(values, 0, values.size());
  if (reversed) out.value = -out.value;
  out.error = err;
  out.subdivisions = subdivisions;
  return out;
}

QuadratureResult integrate_angular(const Integrand& f, const QuadratureSpec& spec) {
  return integrate_interval(f, 0.0, 2.0 * kPi, spec, 0.5 * kPi);
}

QuadratureResult integrate_radial(const Integrand& f, double omega, double lower,
                                  const QuadratureSpec& spec) {
  spec.validate();
  if (!std::isfinite(lower) || lower <= 0.0) {
    throw Error(ErrorCode::domain, "radial lower limit must be positive");
  }
  const double w = std::abs(omega);
  double cutoff = std::max(spec.radial_cutoff, 2.0 * lower);

  enum class Tail { inverse_substitution, by_parts };
  Tail mode = Tail::inverse_substitution;
  if (w > 0.0) {
    constexpr double kPeriods = 20.0;
    constexpr double kMaxCutoff = 1e5;
    if (w * cutoff >= kPeriods) {
      mode = Tail::by_parts;
    } else if (kPeriods / w <= kMaxCutoff) {
      cutoff = kPeriods / w;
      mode = Tail::by_parts;
    }
  }

  const double max_panel = w > 0.0 ? kPi / w : 0.0;
  QuadratureResult main = integrate_interval(f, lower, cutoff, spec, max_panel);

  cplx tail = 0.0;
  double tail_err = 0.0;
  if (mode == Tail::inverse_substitution) {
    // ∫_R^∞ f(ρ) dρ = ∫_0^{1/R} f(1/t) / t² dt; GK never samples t = 0.
    auto g = [&f](double t) { return f(1.0 / t) / (t * t); };
    QuadratureSpec tail_spec = spec;
    tail_spec.abs_tol = std::max(spec.abs_tol * 1e-2, 1e-300);
    const QuadratureResult r = integrate_interval(g, 0.0, 1.0 / cutoff, tail_spec);
    tail = r.value;
    tail_err = r.error;
  } else {
    // ∫_R^∞ g e^{iωρ} = -e^{iωR} Σ_j (-1)^j g^{(j)}(R) / (iω)^{j+1}
    const cplx iw(0.0, omega);
    auto envelope = [&](double r) { return f(r) * std::exp(-iw * r); };
    const double h = 0.02 * cutoff;
    const cplx g0 = envelope(cutoff);
    const cplx gp = envelope(cutoff + h);
    const cplx gm = envelope(cutoff - h);
    const cplx g1 = (gp - gm) / (2.0 * h);
    const cplx g2 = (gp - 2.0 * g0 + gm) / (h * h);
    const cplx t0 = -g0 / iw;
    const cplx t1 = g1 / (iw * iw);
    const cplx t2 = -g2 / (iw * iw * iw);
    tail = std::exp(iw * cutoff) * (t0 + t1 + t2);
    tail_err = std::abs(t2) + 1e-3 * std::abs(t1);
  }

  QuadratureResult out;
  out.value = main.value + tail;
  out.tail = tail;
  out.tail_bound = std::abs(tail) + tail_err;
  out.error = main.error + tail_err;
  out.subdivisions = main.subdivisions;
  out.tail_dominated = tail_err > tolerance_for(spec, out.value);
  return out;
}

QuadratureResult integrate_2d(const Integrand2& f, double lB, const QuadratureSpec& spec) {
  spec.validate();
  if (!(lB > 0.0)) throw Error(ErrorCode::domain, "l_B must be positive");
  static const LegendreRule rule = gauss_legendre(20);
  const double span = 8.0 * lB;
  const double norm = 1.0 / (kPi * lB * lB);

  QuadratureSpec inner = spec;
  inner.abs_tol = spec.abs_tol * 1e-2;
  inner.rel_tol = spec.rel_tol * 1e-2;

  auto composite = [&](int panels, double& inner_err) {
    std::vector<cplx> parts;
    parts.reserve(panels * rule.x.size());
    inner_err = 0.0;
    const double width = span / panels;
    for (int p = 0; p < panels; ++p) {
      const double lo = p * width;
      for (std::size_t i = 0; i < rule.x.size(); ++i) {
        const double rp = lo + 0.5 * width * (rule.x[i] + 1.0);
        const double weight = 0.5 * width * rule.w[i] * rp * norm * std::exp(-rp * rp / (lB * lB));
        const QuadratureResult r = integrate_angular([&](double php) { return f(rp, php); }, inner);
        parts.push_back(weight * r.value);
        inner_err += weight * r.error;
      }
    }
    return pairwise_sum(parts, 0, parts.size());
  };

  double err_coarse = 0.0;
  double err_fine = 0.0;
  int panels = 2;
  cplx coarse = composite(panels, err_coarse);
  for (; panels <= 256; panels *= 2) {
    const cplx fine = composite(2 * panels, err_fine);
    const double diff = std::abs(fine - coarse);
    if (diff + err_fine <= tolerance_for(spec, fine)) {
      QuadratureResult out;
      out.value = fine;
      out.error = diff + err_fine;
      out.subdivisions = 2 * panels;
      return out;
    }
    coarse = fine;
  }
  throw Error(ErrorCode::non_convergence, "2D quadrature did not converge");
}

}  // namespace tiqm::oracle
