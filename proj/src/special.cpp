#include "riscov/special.hpp"

#include <cmath>
#include <limits>

namespace riscov {

namespace {

constexpr int kMaxTerms = 10000;
constexpr double kSqrtPi = 1.7724538509055160273;

bool is_nonpositive_integer(double c) {
    return c <= 0.0 && c == std::floor(c);
}

// Plain Gauss series sum_k (a)_k (b)_k / ((c)_k k!) z^k. Valid for |z| < 1;
// the caller is responsible for picking an argument where it converges at a
// useful rate. Terminates early when b or a is a non-positive integer.
double gauss_series(double a, double b, double c, double z) {
    double term = 1.0;
    double sum = 1.0;
    for (int k = 0; k < kMaxTerms; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        sum += term;
        if (std::abs(term) <= 1e-16 * std::abs(sum) && k > 2) return sum;
        if (!std::isfinite(sum))
            throw numeric_error("gauss2f1: series overflow", sum);
    }
    throw numeric_error("gauss2f1: series did not converge", sum);
}

} // namespace

double gauss2f1(double a, double b, double c, double z) {
    if (is_nonpositive_integer(c))
        throw std::domain_error("gauss2f1: c is a non-positive integer");
    if (z >= 1.0 || !std::isfinite(z))
        throw std::domain_error("gauss2f1: argument must satisfy z < 1");
    if (z == 0.0) return 1.0;
    if (std::abs(z) <= 0.5 || z > 0.0) return gauss_series(a, b, c, z);
    // z < -0.5: Pfaff, 2F1(a,b;c;z) = (1-z)^-a 2F1(a, c-b; c; z/(z-1)).
    // The mapped argument lies in (1/3, 1) and the transformed series decays
    // like k^-(1+b-a), which converges for every parameter set we evaluate.
    const double w = z / (z - 1.0);
    return std::pow(1.0 - z, -a) * gauss_series(a, c - b, c, w);
}

namespace {

// erf on [0, 1.5] by Taylor series; max term count ~30.
double erf_series(double x) {
    const double x2 = x * x;
    double term = x;
    double sum = x;
    for (int k = 1; k < 200; ++k) {
        term *= -x2 / k;
        const double add = term / (2.0 * k + 1.0);
        sum += add;
        if (std::abs(add) < 1e-18 * std::abs(sum)) break;
    }
    return 2.0 / kSqrtPi * sum;
}

// Continued fraction for sqrt(pi) * exp(x^2) * erfc(x), x >= 1.5.
// K = 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))), evaluated by modified
// Lentz iteration.
double erfc_cf_scaled(double x) {
    const double tiny = 1e-300;
    double f = x, C = x, D = 0.0;
    for (int n = 1; n < 300; ++n) {
        const double an = 0.5 * n;
        D = x + an * D;
        if (D == 0.0) D = tiny;
        C = x + an / C;
        if (C == 0.0) C = tiny;
        D = 1.0 / D;
        const double delta = C * D;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return 1.0 / f;
}

} // namespace

double erfc(double x) {
    if (std::isnan(x)) return std::numeric_limits<double>::quiet_NaN();
    if (x < 0.0) return 2.0 - erfc(-x);
    if (x <= 1.5) return 1.0 - erf_series(x);
    if (x > 27.0) return 0.0; // exp(-x^2) underflows
    return std::exp(-x * x) * erfc_cf_scaled(x) / kSqrtPi;
}

double erfcx(double x) {
    if (x < 0.0) throw std::domain_error("erfcx: negative argument");
    if (x <= 1.5) return std::exp(x * x) * (1.0 - erf_series(x));
    return erfc_cf_scaled(x) / kSqrtPi;
}

namespace {

// Lanczos approximation, g = 7, 9 coefficients.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

} // namespace

double gamma_fn(double x) {
    if (!(x > 0.0))
        throw std::domain_error("gamma_fn: argument must be positive");
    if (x < 0.5) {
        // reflection keeps the Lanczos sum in its accurate range
        return M_PI / (std::sin(M_PI * x) * gamma_fn(1.0 - x));
    }
    const double z = x - 1.0;
    double s = kLanczos[0];
    for (int i = 1; i < 9; ++i) s += kLanczos[i] / (z + i);
    const double t = z + 7.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * s;
}

} // namespace riscov
