#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "fixity/errors.hpp"
#include "fixity/numeric.hpp"

namespace fixity {

/// A closed interval known to contain an exact real value.
struct Enclosure {
    double lower;
    double upper;
    double midpoint() const { return lower + (upper - lower) / 2; }
};

namespace detail {

inline double down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
inline double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

// Bisection of an increasing function h against target, until the bracket
// endpoints are adjacent doubles. Requires h(lo) <= target <= h(hi).
template <class F>
Enclosure bisect_increasing(F h, double target, double lo, double hi)
{
    for (int iter = 0; iter < 2000; ++iter) {
        const double mid = lo + (hi - lo) / 2;
        if (mid <= lo || mid >= hi)
            break;
        if (h(mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

// x! as an exact double for x <= 20, else 0.
inline double exact_factorial(int k)
{
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i)
        f *= static_cast<std::uint64_t>(i);
    return static_cast<double>(f);
}

} // namespace detail

/// Inverse of the Gamma function on [2, inf), for y >= 1. Values y = k!
/// (k <= 20) resolve exactly to k + 1.
inline Enclosure gamma_inverse(double y)
{
    if (!(y >= 1.0) || std::isinf(y))
        throw DomainError("gamma_inverse needs a finite argument >= 1, got " + to_string(y));
    for (int k = 1; k <= 20; ++k) {
        const double f = detail::exact_factorial(k);
        if (f == y)
            return {static_cast<double>(k + 1), static_cast<double>(k + 1)};
        if (f > y)
            break;
    }
    const double target = std::log(y);
    double hi = 4.0;
    while (std::lgamma(hi) < target)
        hi *= 2;
    // lgamma is accurate to a few ulps; widen the bracket by a few ulps to stay safe.
    Enclosure e = detail::bisect_increasing([](double t) { return std::lgamma(t); }, target, 2.0, hi);
    double lo = e.lower, up = e.upper;
    for (int i = 0; i < 4; ++i) {
        lo = detail::down(lo);
        up = detail::up(up);
    }
    return {std::max(2.0, lo), up};
}

/// f(x) = 1 / Gamma^{-1}(x - 1), for x >= 1. On [1, 2) the Gamma^{-1}
/// argument would leave its domain; there f is held at its value at x = 2, 1/2.
inline Enclosure f_bound_enclosure(double x)
{
    if (!(x >= 1.0))
        throw DomainError("f_bound needs x >= 1, got " + to_string(x));
    if (x < 2.0)
        return {0.5, 0.5};
    const Enclosure t = gamma_inverse(x - 1.0);
    if (t.lower == t.upper) {
        const double v = 1.0 / t.lower;
        return {detail::down(v), detail::up(v)};
    }
    return {detail::down(1.0 / t.upper), detail::up(1.0 / t.lower)};
}

/// Nearest-value evaluation of f.
inline double f_bound(double x)
{
    if (!(x >= 1.0))
        throw DomainError("f_bound needs x >= 1, got " + to_string(x));
    if (x < 2.0)
        return 0.5;
    const Enclosure t = gamma_inverse(x - 1.0);
    return 1.0 / (t.lower == t.upper ? t.lower : t.midpoint());
}

/// A value no smaller than f(x).
inline double f_bound_upper(double x) { return f_bound_enclosure(x).upper; }

/// log of x (2x)^x.
inline double log_growth(double x) { return std::log(x) + x * std::log(2.0 * x); }

/// x (2x)^x.
inline double growth(double x) { return std::exp(log_growth(x)); }

/// Enclosure of F(y), the inverse of x -> x (2x)^x on the positive reals.
inline Enclosure F_bound_enclosure(double y)
{
    if (!(y > 0.0) || std::isinf(y))
        throw DomainError("F_bound needs a finite y > 0, got " + to_string(y));
    const double target = std::log(y);
    double lo = 1.0, hi = 1.0;
    while (log_growth(lo) > target)
        lo /= 2;
    while (log_growth(hi) < target)
        hi *= 2;
    Enclosure e = detail::bisect_increasing(log_growth, target, lo, hi);
    double l = e.lower, u = e.upper;
    for (int i = 0; i < 4; ++i) {
        l = detail::down(l);
        u = detail::up(u);
    }
    return {l, u};
}

inline double F_bound(double y)
{
    const Enclosure e = F_bound_enclosure(y);
    // Adjacent-ulp bracket after widening: pick the endpoint with the smaller residual.
    const double target = std::log(y);
    double best = e.midpoint();
    double best_err = std::abs(log_growth(best) - target);
    for (double x = e.lower; x <= e.upper; x = detail::up(x)) {
        const double err = std::abs(log_growth(x) - target);
        if (err < best_err) {
            best = x;
            best_err = err;
        }
    }
    return best;
}

/// A value no larger than F(y).
inline double F_bound_lower(double y) { return F_bound_enclosure(y).lower; }

/// A positive real too large for a double, stored through log10(log10(value)).
class HugeMagnitude {
public:
    static HugeMagnitude from_log10(double log10_value) { return HugeMagnitude(std::log10(log10_value)); }
    static HugeMagnitude from_log10_log10(double ll) { return HugeMagnitude(ll); }

    double log10_log10() const noexcept { return log10_log10_; }

    /// log10 of the value; +inf when that itself overflows a double.
    double log10() const { return std::pow(10.0, log10_log10_); }

    /// value > n, for a count n >= 1.
    bool exceeded_by(double n) const
    {
        if (n <= 1.0)
            return false;
        return std::log10(std::log10(n)) > log10_log10_;
    }

    friend bool operator<(const HugeMagnitude& a, const HugeMagnitude& b)
    {
        return a.log10_log10_ < b.log10_log10_;
    }

    /// "1.50515" style log10 when finite, else "10^<log10 log10>".
    std::string log10_string() const
    {
        const double l = log10();
        if (std::isfinite(l))
            return to_string(l);
        return "10^" + to_string(log10_log10_);
    }

private:
    explicit HugeMagnitude(double ll) : log10_log10_(ll) {}
    double log10_log10_;
};

/// The vertex-count threshold phi^{-1}(alpha / c^2) with phi = f o F.
///
/// Inverting: phi^{-1}(y) = g(Gamma(1/y) + 1) with g(x) = x (2x)^x, valid for
/// y <= 1/2. At y = 1/2 the flat piece of f makes phi^{-1} an interval
/// [2, 32]; its top end 32 is returned so that |G| <= threshold stays true.
/// For y > 1/2 no |G| satisfies phi(|G|) >= y and the smallest point of the
/// domain of phi, g(1) = 2, is returned.
inline HugeMagnitude n_threshold(const Integer& c, const Rational& alpha)
{
    if (c < 1)
        throw DomainError("n_threshold needs c >= 1");
    if (alpha <= 0 || alpha > 1)
        throw DomainError("n_threshold needs 0 < alpha <= 1, got " + to_string(alpha));
    const Rational y = alpha / Rational(c * c);
    if (y > Rational(1, 2))
        return HugeMagnitude::from_log10(std::log10(2.0));
    const Rational inv = 1 / y;
    const double inv_y = to_double(inv);
    // x = Gamma(1/y) + 1, then log10 g(x) = log10 x + x log10(2x).
    const double lg = std::lgamma(inv_y); // natural log of Gamma(1/y)
    if (lg < 600.0) {
        std::int64_t k = 0;
        double gamma = std::exp(lg);
        if (denominator_of(inv) == 1 && inv <= 21) {
            k = numerator_of(inv).convert_to<std::int64_t>();
            gamma = detail::exact_factorial(static_cast<int>(k - 1));
        }
        const double x = gamma + 1.0;
        const double log10_n = std::log10(x) + x * std::log10(2.0 * x);
        return HugeMagnitude::from_log10(log10_n);
    }
    // Here x is astronomically large: log10 x ~ lg / ln 10 and
    // log10(log10 g(x)) = log10 x + log10(log10(2x) + log10(x) / x).
    const double log10_x = lg / std::log(10.0);
    const double ll = log10_x + std::log10(std::log10(2.0) + log10_x);
    return HugeMagnitude::from_log10_log10(ll);
}

} // namespace fixity
