#pragma once

#include <optional>
#include <vector>

#include "arith.hpp"

namespace ecfac {

// A point on y^2 = x^3 + A x: either the point at infinity or an affine pair.
class CurvePoint {
public:
    CurvePoint() = default;  // infinity
    CurvePoint(Rat x, Rat y) : affine_(true), x_(std::move(x)), y_(std::move(y)) {}

    static CurvePoint infinity() { return {}; }

    bool is_infinity() const { return !affine_; }
    const Rat& x() const;
    const Rat& y() const;

    friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
        if (a.affine_ != b.affine_) return false;
        return !a.affine_ || (a.x_ == b.x_ && a.y_ == b.y_);
    }

private:
    bool affine_ = false;
    Rat x_, y_;
};

// y^2 = x^3 + A x with A != 0.
class Curve {
public:
    explicit Curve(Int A);

    // E: y^2 = x^3 - 2N x and its isogenous partner E': y^2 = x^3 + 8N x.
    static Curve E(const Int& N) { return Curve(-2 * N); }
    static Curve E_prime(const Int& N) { return Curve(8 * N); }

    const Int& A() const { return A_; }

    bool contains(const CurvePoint& P) const;
    CurvePoint negate(const CurvePoint& P) const;
    CurvePoint add(const CurvePoint& P, const CurvePoint& Q) const;
    CurvePoint dbl(const CurvePoint& P) const;
    CurvePoint mul(const Int& k, const CurvePoint& P) const;
    CurvePoint mul(long k, const CurvePoint& P) const { return mul(Int(k), P); }

    // P + T with T = (0,0). Throws for P in {O, T}.
    CurvePoint translate_T(const CurvePoint& P) const;

    bool is_torsion(const CurvePoint& P) const;
    std::vector<CurvePoint> torsion() const;

    /// Affine point with the given x, if x^3 + A x is a rational square (y >= 0).
    std::optional<CurvePoint> point_with_x(const Rat& x) const;

private:
    Int A_;
};

/// phi: E -> E' and phihat: E' -> E for E: y^2 = x^3 - 2N x.
CurvePoint phi(const Int& N, const CurvePoint& P);
CurvePoint phihat(const Int& N, const CurvePoint& P);

/// Throws InvalidArgument if P is not on the curve.
inline void require_on(const Curve& E, const CurvePoint& P) {
    if (!E.contains(P)) throw InvalidArgument("point is not on the curve");
}

} // namespace ecfac
