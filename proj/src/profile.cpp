#include "sasakit/profile.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "sasakit/errors.hpp"
#include "sasakit/version.hpp"

namespace sasakit {

namespace {

// Gauss-Kronrod 7-15 abscissae and weights (positive half).
constexpr double kXgk[8] = {
    0.9914553711208126392068547, 0.9491079123427585245261897,
    0.8648644233597690727897128, 0.7415311855993944398638648,
    0.5860872354676911302941448, 0.4058451513773971669066064,
    0.2077849550078984676006894, 0.0};
constexpr double kWgk[8] = {
    0.0229353220105292249637320, 0.0630920926299785532907007,
    0.1047900103222501838398763, 0.1406532597155259187451896,
    0.1690047266392679028265834, 0.1903505780647854099132564,
    0.2044329400752988924141620, 0.2094821410847278280129992};
constexpr double kWg[4] = {
    0.1294849661688696932706114, 0.2797053914892766679014678,
    0.3818300505051189449503698, 0.4179591836734693877551020};

struct Panel {
  double a, b;
  double value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <typename F>
Panel gk15(const F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kXgk[i];
    const double f1 = f(c - dx);
    const double f2 = f(c + dx);
    resk += kWgk[i] * (f1 + f2);
    if (i % 2 == 1) resg += kWg[i / 2] * (f1 + f2);
  }
  return {a, b, resk * h, std::abs((resk - resg) * h)};
}

// Subdivision budget; SASAKIT_MAX_QUAD_PANELS overrides it (ops/test knob).
int max_quadrature_panels() {
  if (const char* env = std::getenv("SASAKIT_MAX_QUAD_PANELS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 60000;
}

// Globally adaptive: repeatedly split the panel with the largest error
// estimate until the total estimate meets the absolute tolerance.
template <typename F>
double adaptive_quadrature(const F& f, double a, double b, double abs_tol) {
  if (a == b) return 0.0;
  const int max_panels = max_quadrature_panels();
  std::priority_queue<Panel> queue;
  Panel first = gk15(f, a, b);
  if (!std::isfinite(first.value)) {
    throw QuadratureFailure("non-finite integrand encountered");
  }
  double total_value = first.value;
  double total_error = first.error;
  double stuck_error = 0.0;  // panels too narrow to split further
  queue.push(first);
  int panels = 1;
  while (total_error + stuck_error > abs_tol) {
    if (queue.empty() || panels >= max_panels) {
      throw QuadratureFailure("quadrature tolerance " + std::to_string(abs_tol) +
                              " not met within the subdivision budget");
    }
    const Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid == worst.a || mid == worst.b) {
      total_error -= worst.error;
      stuck_error += worst.error;
      continue;
    }
    const Panel left = gk15(f, worst.a, mid);
    const Panel right = gk15(f, mid, worst.b);
    if (!std::isfinite(left.value) || !std::isfinite(right.value)) {
      throw QuadratureFailure("non-finite integrand encountered");
    }
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++panels;
  }
  return total_value;
}

// p composed with the linear substitution sub(t), exactly.
RationalPoly compose_linear(const RationalPoly& p, const RationalPoly& sub) {
  RationalPoly acc;
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * sub + RationalPoly::constant(p.coefficient(i));
  }
  return acc;
}

// Double-precision view of the profile data at a fixed Reeb parameter.
// A vanishes linearly at both moment-interval endpoints, so plain Horner
// evaluation cancels catastrophically there; instead A is kept in three
// exactly-shifted coefficient sets (around the lower endpoint, around 0,
// around 1) rounded once, and A' is evaluated in product form.
class ProfileContext {
public:
  static constexpr double kUpperCut = 0.5;

  ProfileContext(const FanoBaseSpec& spec, const BigRational& a) {
    lower_exact_ = moment_lower_endpoint(a);
    const RationalPoly f = integrand_poly(spec, a);
    const RationalPoly phi = f.antiderivative();
    a_exact_ = RationalPoly::constant(phi.eval(lower_exact_)) - phi;
    ap_exact_ = -f;

    const RationalPoly at_upper =
        compose_linear(a_exact_, RationalPoly({BigRational(1), BigRational(-1)}));  // s = 1 - t
    const RationalPoly at_lower =
        compose_linear(a_exact_, RationalPoly({lower_exact_, BigRational(1)}));  // s = lo + t
    for (const auto& c : a_exact_.coefficients()) mid_coef_.push_back(c.to_double());
    for (const auto& c : at_upper.coefficients()) up_coef_.push_back(c.to_double());
    for (const auto& c : at_lower.coefficients()) lo_coef_.push_back(c.to_double());

    for (const auto& e : spec.entries()) {
      mus_.push_back(mu_shift(e.mu, a).to_double());
      mults_.push_back(e.multiplicity);
    }
    lower_ = lower_exact_.to_double();
    // Rounding residue of the lower endpoint, so that the shifted variable
    // t = (s - lower_) - lower_residue_ keeps full relative accuracy.
    lower_residue_ = (lower_exact_ - BigRational::from_double(lower_)).to_double();
    lower_switch_ = 0.5 * lower_;
  }

  // B(x) = integral of the pole-free integrand from 0 to x. The middle
  // region integrates in s directly; the endpoint tails integrate in
  // tau = log(distance to the endpoint), where the integrand t*g is smooth
  // and O(1), so the order-1 poles cost a handful of panels and no accuracy.
  double b_eval(double x, double abs_tol) const {
    if (x >= kUpperCut) {
      const double base =
          adaptive_quadrature([this](double s) { return integrand(s); }, 0.0, kUpperCut,
                              0.5 * abs_tol);
      const double t_x = 1.0 - x;
      if (t_x == 0.5) return base;
      const auto tail = [this](double tau) {
        const double t = std::exp(tau);
        return t * factor_product(1.0 - t) / horner(up_coef_, t);
      };
      return base + adaptive_quadrature(tail, std::log(t_x), std::log(0.5), 0.5 * abs_tol);
    }
    if (x <= lower_switch_) {
      const double base =
          adaptive_quadrature([this](double s) { return integrand(s); }, 0.0, lower_switch_,
                              0.5 * abs_tol);
      const double t_x = (x - lower_) - lower_residue_;
      if (!(t_x > 0.0)) {
        throw DomainError("x is numerically at the lower moment-interval endpoint");
      }
      const double t_cut = (lower_switch_ - lower_) - lower_residue_;
      const auto tail = [this](double tau) {
        const double t = std::exp(tau);
        return t * factor_product(lower_ + t) / horner(lo_coef_, t);
      };
      if (t_x >= t_cut) return base;
      return base - adaptive_quadrature(tail, std::log(t_x), std::log(t_cut), 0.5 * abs_tol);
    }
    return adaptive_quadrature([this](double s) { return integrand(s); }, 0.0, x, abs_tol);
  }

  double lower() const { return lower_; }
  const BigRational& lower_exact() const { return lower_exact_; }
  const RationalPoly& a_poly() const { return a_exact_; }
  const RationalPoly& ap_poly() const { return ap_exact_; }

  double a_at(double x) const {
    if (x >= kUpperCut) return horner(up_coef_, 1.0 - x);
    if (x <= lower_switch_) return horner(lo_coef_, (x - lower_) - lower_residue_);
    return horner(mid_coef_, x);
  }

  // A' = -x prod_k (1 + mu_{k,a} x)^{m_k}, cancellation-free as a product.
  double ap_at(double x) const { return -x * factor_product(x); }

  double factor_product(double x) const {
    double p = 1.0;
    for (size_t k = 0; k < mus_.size(); ++k) {
      const double base = 1.0 + mus_[k] * x;
      for (int m = 0; m < mults_[k]; ++m) p *= base;
    }
    return p;
  }

  double min_margin(double x) const {
    double m = std::numeric_limits<double>::infinity();
    for (const double mu : mus_) m = std::min(m, 1.0 + mu * x);
    return m;
  }

  // B' in its pole-free form, positive on the open interval.
  double integrand(double x) const { return factor_product(x) / a_at(x); }

private:
  static double horner(const std::vector<double>& c, double x) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  std::vector<double> mid_coef_, up_coef_, lo_coef_;
  std::vector<double> mus_;
  std::vector<int> mults_;
  BigRational lower_exact_;
  RationalPoly a_exact_, ap_exact_;
  double lower_ = 0;
  double lower_residue_ = 0;
  double lower_switch_ = 0;
};

double b_value_impl(const ProfileContext& ctx, double x, double quad_tol) {
  if (!(x > ctx.lower() && x < 1.0)) {
    throw DomainError("x = " + std::to_string(x) + " outside the open moment interval (" +
                      std::to_string(ctx.lower()) + ", 1)");
  }
  if (x == 0.0) return 0.0;
  if (!(ctx.a_at(x) > 0.0)) {
    throw DomainError("x = " + std::to_string(x) + " is numerically at the moment-interval endpoint");
  }
  return ctx.b_eval(x, quad_tol);
}

// Bracketed Newton/bisection on the monotone B. The quadrature budget per
// evaluation is a quarter of the inversion tolerance so the Newton residual
// test stays meaningful. Bracket expansion bisects toward the interval
// endpoint, treating any point where A evaluates non-positive as a wall
// (with a detuned Reeb parameter, A's zero moves strictly inside); when the
// preimage is beyond double resolution the nearest valid interior point
// comes back.
double invert_impl(const ProfileContext& ctx, double rho, double tol) {
  if (rho == 0.0) return 0.0;
  const double qtol = 0.25 * tol;
  const auto B = [&](double x) { return b_value_impl(ctx, x, qtol); };

  double xl, xh, bl, bh;
  if (rho > 0.0) {
    xl = 0.0;
    bl = 0.0;
    double wall = 1.0;
    for (;;) {
      const double xc = 0.5 * (xl + wall);
      if (xc <= xl || xc >= wall) return xl;  // no representable point left
      if (!(ctx.a_at(xc) > 0.0)) {
        wall = xc;
        continue;
      }
      const double bc = B(xc);
      if (bc >= rho) {
        xh = xc;
        bh = bc;
        break;
      }
      xl = xc;
      bl = bc;
    }
  } else {
    xh = 0.0;
    bh = 0.0;
    double wall = ctx.lower();
    for (;;) {
      const double xc = 0.5 * (xh + wall);
      if (xc >= xh || xc <= wall) return xh;
      if (!(ctx.a_at(xc) > 0.0)) {
        wall = xc;
        continue;
      }
      const double bc = B(xc);
      if (bc <= rho) {
        xl = xc;
        bl = bc;
        break;
      }
      xh = xc;
      bh = bc;
    }
  }

  double x = xl + (rho - bl) / (bh - bl) * (xh - xl);
  for (int it = 0; it < 100; ++it) {
    if (!(x > xl && x < xh)) x = 0.5 * (xl + xh);
    if (x == xl || x == xh) return std::abs(bl - rho) <= std::abs(bh - rho) ? xl : xh;
    const double bx = B(x);
    if (std::abs(bx - rho) <= 0.5 * tol) return x;
    if (bx < rho) {
      xl = x;
      bl = bx;
    } else {
      xh = x;
      bh = bx;
    }
    x -= (bx - rho) / ctx.integrand(x);
  }
  return 0.5 * (xl + xh);
}

void require_valid_double_parameter(double a) {
  if (!(a > -0.5)) {
    throw ReebParameterOutOfRange("Reeb parameter a = " + std::to_string(a) + " must exceed -1/2");
  }
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9e", v);
  return buf;
}

}  // namespace

double b_value(const FanoBaseSpec& spec, double a, double x, double quad_tol) {
  require_valid_double_parameter(a);
  if (!(quad_tol > 0)) throw std::invalid_argument("b_value: quad_tol must be positive");
  const ProfileContext ctx(spec, BigRational::from_double(a));
  return b_value_impl(ctx, x, quad_tol);
}

double invert_b(const FanoBaseSpec& spec, double a, double rho, double tol) {
  require_valid_double_parameter(a);
  if (!(tol > 0)) throw std::invalid_argument("invert_b: tol must be positive");
  const ProfileContext ctx(spec, BigRational::from_double(a));
  return invert_impl(ctx, rho, tol);
}

ProfileTable build_profile(const FanoBaseSpec& spec, const ReebSolution& solution,
                           double rho_min, double rho_max, int steps, double quad_tol) {
  if (steps < 2) throw std::invalid_argument("build_profile: steps must be >= 2");
  if (!(rho_min < rho_max)) throw std::invalid_argument("build_profile: need rho_min < rho_max");
  if (!(quad_tol > 0)) throw std::invalid_argument("build_profile: quad_tol must be positive");

  const BigRational a_mid = solution.a0_enclosure.midpoint();
  const ProfileContext ctx(spec, a_mid);
  const double a0_of_zero = ctx.a_at(0.0);

  ProfileTable table;
  table.a = a_mid.to_double();
  table.quad_tol = quad_tol;
  table.rows.reserve(steps);

  for (int i = 0; i < steps; ++i) {
    const double rho =
        (i == steps - 1) ? rho_max : rho_min + (rho_max - rho_min) * i / (steps - 1);
    ProfileRow row;
    row.rho = rho;
    row.x = invert_impl(ctx, rho, quad_tol);
    const double a_x = ctx.a_at(row.x);
    if (!(a_x > 0.0)) {
      throw DomainError("profile row at rho = " + std::to_string(rho) +
                        " left the positive range of A");
    }
    row.u = -std::log(a_x);
    row.u_second = row.x == 0.0 ? a0_of_zero : -row.x * a_x / ctx.ap_at(row.x);
    row.min_margin = ctx.min_margin(row.x);
    row.ode_residual = row.u_second * ctx.factor_product(row.x) - std::exp(-row.u);
    if (!(row.min_margin > 0.0)) {
      throw PositivityViolation("metric factor margin " + std::to_string(row.min_margin) +
                                " at rho = " + std::to_string(rho) +
                                "; the Reeb parameter or quadrature is wrong");
    }
    table.rows.push_back(row);
  }
  return table;
}

MomentData moment_function(double a, std::span<const double> x_samples) {
  require_valid_double_parameter(a);
  const double c = 1.0 / (1.0 + 2.0 * a);
  MomentData data;
  data.a = a;
  data.interval_lo = -c;
  data.interval_hi = 1.0;
  data.samples.reserve(x_samples.size());
  for (const double x : x_samples) {
    const double t1 = 0.5 * x;
    const double t2 = -0.5 * x * c;
    const double m = std::max(t1, t2);
    const double e1 = std::exp(t1 - m);
    const double e2 = std::exp(t2 - m);
    MomentSample s;
    s.x = x;
    s.v = 2.0 * (m + std::log(e1 + e2));
    s.v_prime = (e1 - c * e2) / (e1 + e2);
    data.samples.push_back(s);
  }
  return data;
}

double evaluate_fiber_metric(double a, double z_modulus, Chart chart) {
  require_valid_double_parameter(a);
  if (!(z_modulus > 0)) throw DomainError("evaluate_fiber_metric: |z| must be positive");
  const double r = z_modulus;
  const double q = 1.0 + 2.0 * a;
  if (chart == Chart::Plus) {
    const double t = 1.0 / r + std::pow(r, 1.0 / q);
    return 1.0 / (t * t * r * r);
  }
  const double t = std::pow(r, q) + 1.0 / r;
  return q * q / (t * t * r * r);
}

VerificationReport verify_profile(const ProfileTable& table, const ReebSolution& solution,
                                  const ProfileTolerances& tolerances) {
  const double ode_tol =
      tolerances.ode_residual > 0 ? tolerances.ode_residual : 100.0 * table.quad_tol;
  const ProfileContext ctx(solution.spec, BigRational::from_double(table.a));
  const auto& rows = table.rows;

  std::vector<CheckResult> checks;

  double sup_resid = 0.0;
  double min_u2 = std::numeric_limits<double>::infinity();
  double min_dx = std::numeric_limits<double>::infinity();
  double min_edge = std::numeric_limits<double>::infinity();
  double min_margin = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < rows.size(); ++i) {
    sup_resid = std::max(sup_resid, std::abs(rows[i].ode_residual));
    min_u2 = std::min(min_u2, rows[i].u_second);
    min_margin = std::min(min_margin, rows[i].min_margin);
    min_edge = std::min({min_edge, rows[i].x - ctx.lower(), 1.0 - rows[i].x});
    if (i > 0) min_dx = std::min(min_dx, rows[i].x - rows[i - 1].x);
  }
  checks.push_back({"ode_residual_sup", sup_resid <= ode_tol, format_double(sup_resid), ode_tol});
  checks.push_back({"u_second_positive", min_u2 > 0.0, format_double(min_u2), 0.0});
  checks.push_back({"x_strictly_increasing", rows.size() < 2 || min_dx > 0.0,
                    format_double(rows.size() < 2 ? 0.0 : min_dx), 0.0});
  checks.push_back({"x_inside_moment_interval", min_edge > 0.0, format_double(min_edge), 0.0});

  // Exact sampling of A's range (0, A(0)] and of the slope sign A'(x)/x < 0.
  const size_t stride = std::max<size_t>(1, rows.size() / 256);
  const BigRational a_at_zero = ctx.a_poly().eval(BigRational(0));
  bool range_ok = true;
  bool slope_ok = true;
  double worst_a = std::numeric_limits<double>::infinity();
  double worst_excess = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < rows.size(); i += stride) {
    const BigRational x = BigRational::from_double(rows[i].x);
    const BigRational ax = ctx.a_poly().eval(x);
    range_ok = range_ok && ax.sign() > 0 && ax <= a_at_zero;
    worst_a = std::min(worst_a, ax.to_double());
    worst_excess = std::max(worst_excess, (ax - a_at_zero).to_double());
    if (!x.is_zero()) {
      slope_ok = slope_ok && (ctx.ap_poly().eval(x) * x).sign() < 0;
    }
  }
  checks.push_back({"A_range_sampled", range_ok,
                    "min A = " + format_double(worst_a) +
                        ", max A - A(0) = " + format_double(worst_excess),
                    0.0});
  checks.push_back({"A_slope_sign_sampled", slope_ok, slope_ok ? "all negative" : "violation", 0.0});
  checks.push_back({"positivity_margin", min_margin > 0.0, format_double(min_margin), 0.0});

  const double a_at_one = ctx.a_poly().eval(BigRational(1)).to_double();
  checks.push_back({"A_vanishes_at_one", std::abs(a_at_one) <= tolerances.a_at_one,
                    format_double(a_at_one), tolerances.a_at_one});

  return VerificationReport::build(std::move(checks), solution.spec.label(),
                                   solution.a0_enclosure.lo.str(),
                                   solution.a0_enclosure.hi.str());
}

}  // namespace sasakit
