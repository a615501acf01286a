#include "psychoprobe/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace psychoprobe::sf {

namespace {

constexpr double kEps = 1e-16;
constexpr double kTiny = 1e-300;
constexpr int kMaxIter = 500;

// Lentz continued fraction for the incomplete beta, valid for
// x < (a+1)/(a+b+2).
double beta_cf(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return h;
}

} // namespace

double reg_inc_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::invalid_argument("reg_inc_beta: a,b must be positive");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double log_prefactor = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                               a * std::log(x) + b * std::log1p(-x);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return std::exp(log_prefactor) * beta_cf(a, b, x) / a;
  }
  return 1.0 - std::exp(log_prefactor) * beta_cf(b, a, 1.0 - x) / b;
}

double reg_gamma_p(double a, double x) {
  if (!(a > 0.0)) throw std::invalid_argument("reg_gamma_p: a must be positive");
  if (x <= 0.0) return 0.0;
  if (x < a + 1.0) {
    // series
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int n = 0; n < kMaxIter; ++n) {
      ap += 1.0;
      term *= x / ap;
      sum += term;
      if (std::fabs(term) < std::fabs(sum) * kEps) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
  }
  return 1.0 - reg_gamma_q(a, x);
}

double reg_gamma_q(double a, double x) {
  if (!(a > 0.0)) throw std::invalid_argument("reg_gamma_q: a must be positive");
  if (x <= 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - reg_gamma_p(a, x);
  // Lentz continued fraction
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIter; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double normal_pdf(double z) {
  static const double inv_sqrt_2pi = 0.3989422804014326779;
  return inv_sqrt_2pi * std::exp(-0.5 * z * z);
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z * M_SQRT1_2); }

double normal_sf(double z) { return 0.5 * std::erfc(z * M_SQRT1_2); }

double normal_quantile(double p) {
  if (!(p > 0.0) || !(p < 1.0)) {
    if (p == 0.0) return -std::numeric_limits<double>::infinity();
    if (p == 1.0) return std::numeric_limits<double>::infinity();
    throw std::invalid_argument("normal_quantile: p outside (0,1)");
  }
  const double q = p - 0.5;
  double r;
  if (std::fabs(q) <= 0.425) {
    r = 0.180625 - q * q;
    return q *
           (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                 6.7265770927008700853e4) * r + 4.5921953931549871457e4) * r +
               1.3731693765509461125e4) * r + 1.9715909503065514427e3) * r +
             1.3314166789178437745e2) * r + 3.3871328727963666080e0) /
           (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                 3.9307895800092710610e4) * r + 2.1213794301586595867e4) * r +
               5.3941960214247511077e3) * r + 6.8718700749205790830e2) * r +
             4.2313330701600911252e1) * r + 1.0);
  }
  r = (q < 0.0) ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double val;
  if (r <= 5.0) {
    r -= 1.6;
    val = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                2.41780725177450611770e-1) * r + 1.27045825245236838258e0) * r +
              3.64784832476320460504e0) * r + 5.76949722146069140550e0) * r +
            4.63033784615654529590e0) * r + 1.42343711074968357734e0) /
          (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
              6.89767334985100004550e-1) * r + 1.67638483018380384940e0) * r +
            2.05319162663775882187e0) * r + 1.0);
  } else {
    r -= 5.0;
    val = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
              2.96560571828504891230e-1) * r + 1.78482653991729133580e0) * r +
            5.46378491116411436990e0) * r + 6.65790464350110377720e0) /
          (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
              1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
            5.99832206555887937690e-1) * r + 1.0);
  }
  return (q < 0.0) ? -val : val;
}

double student_t_sf2(double t, double df) {
  if (!(df > 0.0)) throw std::invalid_argument("student_t_sf2: df must be positive");
  const double t2 = t * t;
  return reg_inc_beta(df / 2.0, 0.5, df / (df + t2));
}

double f_sf(double f, double df1, double df2) {
  if (!(df1 > 0.0) || !(df2 > 0.0)) throw std::invalid_argument("f_sf: df must be positive");
  if (f <= 0.0) return 1.0;
  return reg_inc_beta(df2 / 2.0, df1 / 2.0, df2 / (df2 + df1 * f));
}

double chisq_sf(double x, double df) {
  if (x <= 0.0) return 1.0;
  return reg_gamma_q(df / 2.0, x / 2.0);
}

namespace {

// 32-point Gauss-Legendre nodes/weights on [-1,1] (symmetric halves)
constexpr int kGlN = 16;
constexpr double kGlX[kGlN] = {
    0.0483076656877383162, 0.1444719615827964934, 0.2392873622521370745,
    0.3318686022821276498, 0.4213512761306353454, 0.5068999089322293900,
    0.5877157572407623290, 0.6630442669302152010, 0.7321821187402896804,
    0.7944837959679424070, 0.8493676137325699701, 0.8963211557660521240,
    0.9349060759377396892, 0.9647622555875064308, 0.9856115115452683354,
    0.9972638618494815635};
constexpr double kGlW[kGlN] = {
    0.0965400885147278006, 0.0956387200792748594, 0.0938443990808045654,
    0.0911738786957638847, 0.0876520930044038111, 0.0833119242269467552,
    0.0781938957870703065, 0.0723457941088485062, 0.0658222227763618468,
    0.0586840934785355471, 0.0509980592623761762, 0.0428358980222266807,
    0.0342738629130214331, 0.0253920653092620595, 0.0162743947309056706,
    0.0070186100094700966};

template <typename F>
double gauss_legendre(F&& f, double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double sum = 0.0;
  for (int i = 0; i < kGlN; ++i) {
    const double dx = half * kGlX[i];
    sum += kGlW[i] * (f(mid + dx) + f(mid - dx));
  }
  return sum * half;
}

// P(range of k iid standard normals < w)
double range_cdf_unit_sigma(double w, int k) {
  if (w <= 0.0) return 0.0;
  const auto integrand = [&](double z) {
    const double span = normal_cdf(z) - normal_cdf(z - w);
    return normal_pdf(z) * std::pow(span, k - 1);
  };
  // split [-8, 8+w] into panels for accuracy
  const double lo = -8.5;
  const double hi = 8.5 + w;
  const int panels = 8;
  double total = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double a = lo + (hi - lo) * i / panels;
    const double b = lo + (hi - lo) * (i + 1) / panels;
    total += gauss_legendre(integrand, a, b);
  }
  return k * total;
}

} // namespace

double studentized_range_cdf(double q, int k, double df) {
  if (q <= 0.0) return 0.0;
  if (k < 2) throw std::invalid_argument("studentized_range_cdf: k must be >= 2");
  if (df > 1e5) return range_cdf_unit_sigma(q, k);
  // integrate over the scale factor s = chi_df / sqrt(df); density
  // f(s) = 2 (df/2)^{df/2} / Gamma(df/2) * s^{df-1} exp(-df s^2 / 2)
  const double half_df = df / 2.0;
  const double log_norm = std::log(2.0) + half_df * std::log(half_df) - std::lgamma(half_df);
  const auto integrand = [&](double s) {
    const double log_dens = log_norm + (df - 1.0) * std::log(s) - half_df * s * s;
    return std::exp(log_dens) * range_cdf_unit_sigma(q * s, k);
  };
  const double sd = 1.0 / std::sqrt(2.0 * df);
  const double lo = std::max(1e-8, 1.0 - 10.0 * sd);
  const double hi = 1.0 + 12.0 * sd;
  const int panels = 6;
  double total = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double a = lo + (hi - lo) * i / panels;
    const double b = lo + (hi - lo) * (i + 1) / panels;
    total += gauss_legendre(integrand, a, b);
  }
  return std::min(1.0, total);
}

} // namespace psychoprobe::sf
