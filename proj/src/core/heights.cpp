#include "heights.hpp"

#include <cmath>

namespace ecfac {

const char* to_string(HeightMethod m) { return m == HeightMethod::limit ? "limit" : "local_sum"; }

namespace {

const long double kLog2 = std::log(2.0L);

// Nearest long double to num/den, without overflowing the intermediate values.
long double to_long_double(const Rat& x) {
    if (x.is_zero()) return 0;
    auto top = [](const Int& v, long& shift) {
        Int a = abs(v);
        const long bits = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2));
        shift = bits > 64 ? bits - 64 : 0;
        if (shift > 0) mpz_tdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
        unsigned long long w = 0;
        mpz_export(&w, nullptr, -1, sizeof(w), 0, 0, a.get_mpz_t());
        return static_cast<long double>(w);
    };
    long sn = 0, sd = 0;
    const long double n = top(x.num(), sn);
    const long double d = top(x.den(), sd);
    return static_cast<long double>(x.sign()) * std::ldexp(n / d, static_cast<int>(sn - sd));
}

Rat duplicate_x(const Int& N, const Rat& x) {
    const Rat x2 = x * x;
    const Rat two_n(2 * N);
    const Rat top = x2 + two_n;
    return top * top / (Rat(4) * x * (x2 - two_n));
}

// 1/4 log(a^2 + 2N d^4) for x = a/d^2.
long double quartic_log(const Int& N, const Rat& x) {
    const Int& a = x.num();
    const Int& den = x.den();
    return log_abs(Int(a * a + 2 * N * den * den)) / 4;
}

void require_non_torsion(const CurvePoint& P) {
    if (P.is_infinity() || P.x().is_zero()) throw InvalidArgument("height of a torsion point");
}

// Tate's series for the archimedean local height, after shifting x by an
// integer c large enough that every real point has x + c > 1.
long double archimedean(const Int& N, const Rat& x) {
    const Int c_int = 2 * isqrt(Int(2 * N)) + 2;
    const long double c = c_int.get_d();
    const long double A = -2 * N.get_d();
    const long double a2 = -3 * c, a4 = 3 * c * c + A, a6 = -c * c * c - A * c;
    const long double b2 = 4 * a2, b4 = 2 * a4, b6 = 4 * a6, b8 = 4 * a2 * a6 - a4 * a4;
    const long double xs = to_long_double(x + Rat(c_int));
    long double lambda = std::log(std::fabs(xs)) / 2;
    long double t = 1 / xs;
    long double weight = 1.0L / 8;
    for (int n = 0; n < 60; ++n) {
        const long double t2 = t * t, t3 = t2 * t, t4 = t3 * t;
        const long double w = 4 * t + b2 * t2 + 2 * b4 * t3 + b6 * t4;
        const long double z = 1 - b4 * t2 - 2 * b6 * t3 - b8 * t4;
        lambda += weight * std::log(std::fabs(z));
        weight /= 4;
        t = w / z;
    }
    return lambda;
}

} // namespace

long double naive_height(const Rat& x) {
    const Int& a = x.num();
    const Int& d2 = x.den();
    if (a == 0) return 0;
    return log_abs(abs(a) > d2 ? a : d2) / 2;
}

HeightReport canonical_height(const Int& N, const CurvePoint& P, HeightMethod method) {
    require_non_torsion(P);
    HeightReport rep;
    rep.method = method;
    rep.naive = naive_height(P.x());

    if (method == HeightMethod::limit) {
        // The archimedean bound pins 1/4 log(a^2 + 2N d^4) to within (1/24) log 2 of
        // the canonical height once the point reduces into the identity component,
        // which holds for every double; the error then shrinks by 4 per doubling.
        Rat x = P.x();
        long double scale = 1, previous = 0;
        for (int n = 1; n <= 8; ++n) {
            x = duplicate_x(N, x);
            scale *= 4;
            const long double estimate = (quartic_log(N, x) + kLog2 / 24) / scale;
            rep.canonical = estimate;
            rep.doublings = n;
            if (n > 1 && std::fabs(estimate - previous) < 1e-8L) break;
            previous = estimate;
        }
        return rep;
    }

    rep.archimedean_local = archimedean(N, P.x());
    long double total = rep.archimedean_local;
    Int rest = P.x().den();
    for (const auto& pp : factor(Int(2 * N))) {
        const Int& t = pp.prime;
        const long double lt = log_abs(t);
        const long vd = val(rest, t);
        long double local = vd * lt / 2;
        for (long i = 0; i < vd; ++i) mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), t.get_mpz_t());
        // Points that do not reduce into the identity component (t | numerator) carry a correction.
        if (val(P.x().num(), t) >= 1) local -= lt / 4;
        rep.finite_locals.emplace_back(t, local);
        total += local;
    }
    if (rest != 1) {
        const long double good = log_abs(rest) / 2;
        rep.finite_locals.emplace_back(Int(0), good);  // all primes of good reduction together
        total += good;
    }
    rep.canonical = total;
    return rep;
}

HeightBounds height_bounds(const Int& N, const CurvePoint& P, long double canonical, long double tolerance) {
    require_non_torsion(P);
    HeightBounds b;
    b.canonical = canonical;
    const long double log2n = log_abs(Int(2 * N));
    const long double q = quartic_log(N, P.x());
    b.lower = log_abs(Int(4 * N)) / 16;
    b.sandwich_low = q - log2n / 4;
    b.sandwich_high = q + kLog2 / 12;
    b.difference = canonical - naive_height(P.x());
    b.difference_low = -log_abs(Int(4 * N)) / 4;
    b.difference_high = log_abs(Int(2 * N + 1)) / 4 + kLog2 / 12;
    b.lower_ok = canonical + tolerance >= b.lower;
    b.sandwich_ok = b.sandwich_low - tolerance <= canonical && canonical <= b.sandwich_high + tolerance;
    b.difference_ok = b.difference_low - tolerance <= b.difference && b.difference <= b.difference_high + tolerance;
    return b;
}

bool height_difference_check(const Int& N, const CurvePoint& P) {
    const auto h = canonical_height(N, P, HeightMethod::local_sum);
    return height_bounds(N, P, h.canonical).difference_ok;
}

} // namespace ecfac
