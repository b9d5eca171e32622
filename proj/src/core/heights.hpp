#pragma once

#include <utility>
#include <vector>

#include "arith.hpp"
#include "curve.hpp"

namespace ecfac {

enum class HeightMethod { limit, local_sum };
const char* to_string(HeightMethod m);

struct HeightReport {
    long double naive = 0;      // 1/2 log max(|a|, d^2) for x = a/d^2
    long double canonical = 0;
    long double archimedean_local = 0;                       // local_sum only
    std::vector<std::pair<Int, long double>> finite_locals;  // local_sum only
    HeightMethod method = HeightMethod::limit;
    int doublings = 0;  // limit only
};

/// Weil height h(P) = 1/2 log max(|a|, d^2).
long double naive_height(const Rat& x);

/// Canonical height on y^2 = x^3 - 2N x, normalized so that it is close to
/// 1/2 log|x| for large points. Throws InvalidArgument for torsion points.
HeightReport canonical_height(const Int& N, const CurvePoint& P, HeightMethod method);

struct HeightBounds {
    long double canonical = 0;
    long double lower = 0;           // (1/16) log(4N)
    long double sandwich_low = 0;    // 1/4 log((a^2 + 2N d^4) / 2N)
    long double sandwich_high = 0;   // 1/4 log(a^2 + 2N d^4) + 1/12 log 2
    long double difference = 0;      // canonical - h(P)
    long double difference_low = 0;  // -1/4 log(4N)
    long double difference_high = 0; // 1/4 log(2N + 1) + 1/12 log 2
    bool lower_ok = false;
    bool sandwich_ok = false;
    bool difference_ok = false;

    bool all_ok() const { return lower_ok && sandwich_ok && difference_ok; }
};

/// Evaluates the three height inequalities for P given its canonical height.
/// A slack of `tolerance` absorbs floating-point error.
HeightBounds height_bounds(const Int& N, const CurvePoint& P, long double canonical, long double tolerance = 1e-9L);

bool height_difference_check(const Int& N, const CurvePoint& P);

} // namespace ecfac
