#include "curve.hpp"

namespace ecfac {

const Rat& CurvePoint::x() const {
    if (!affine_) throw InvalidArgument("point at infinity has no x-coordinate");
    return x_;
}

const Rat& CurvePoint::y() const {
    if (!affine_) throw InvalidArgument("point at infinity has no y-coordinate");
    return y_;
}

Curve::Curve(Int A) : A_(std::move(A)) {
    if (A_ == 0) throw InvalidArgument("singular curve: A = 0");
}

bool Curve::contains(const CurvePoint& P) const {
    if (P.is_infinity()) return true;
    const Rat& x = P.x();
    return P.y() * P.y() == x * x * x + Rat(A_) * x;
}

CurvePoint Curve::negate(const CurvePoint& P) const {
    if (P.is_infinity()) return P;
    return {P.x(), -P.y()};
}

CurvePoint Curve::add(const CurvePoint& P, const CurvePoint& Q) const {
    if (P.is_infinity()) return Q;
    if (Q.is_infinity()) return P;
    Rat lambda;
    if (P.x() == Q.x()) {
        if (P.y() == -Q.y()) return CurvePoint::infinity();  // also covers y = 0 doubling
        lambda = (Rat(3) * P.x() * P.x() + Rat(A_)) / (Rat(2) * P.y());
    } else {
        lambda = (Q.y() - P.y()) / (Q.x() - P.x());
    }
    Rat x3 = lambda * lambda - P.x() - Q.x();
    Rat y3 = lambda * (P.x() - x3) - P.y();
    return {std::move(x3), std::move(y3)};
}

CurvePoint Curve::dbl(const CurvePoint& P) const { return add(P, P); }

CurvePoint Curve::mul(const Int& k, const CurvePoint& P) const {
    if (k < 0) return negate(mul(Int(-k), P));
    CurvePoint acc;
    const std::size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        acc = dbl(acc);
        if (mpz_tstbit(k.get_mpz_t(), i)) acc = add(acc, P);
    }
    return acc;
}

CurvePoint Curve::translate_T(const CurvePoint& P) const {
    if (P.is_infinity() || P.x().is_zero()) throw InvalidArgument("translate_T needs a point other than O and T");
    // Adding T sends x to A/x.
    return add(P, CurvePoint(Rat(0), Rat(0)));
}

bool Curve::is_torsion(const CurvePoint& P) const {
    // With -A squarefree the torsion subgroup is {O, T}; no other point has finite order.
    return P.is_infinity() || (P.x().is_zero() && P.y().is_zero());
}

std::vector<CurvePoint> Curve::torsion() const { return {CurvePoint::infinity(), CurvePoint(Rat(0), Rat(0))}; }

std::optional<CurvePoint> Curve::point_with_x(const Rat& x) const {
    Rat rhs = x * x * x + Rat(A_) * x;
    if (rhs.sign() < 0) return std::nullopt;
    auto y = exact_sqrt(rhs);
    if (!y) return std::nullopt;
    return CurvePoint(x, *y);
}

CurvePoint phi(const Int& N, const CurvePoint& P) {
    if (P.is_infinity() || P.x().is_zero()) return CurvePoint::infinity();
    const Rat& x = P.x();
    const Rat& y = P.y();
    Rat x2 = x * x;
    return {y * y / x2, -y * (Rat(2 * N) + x2) / x2};
}

CurvePoint phihat(const Int& N, const CurvePoint& P) {
    if (P.is_infinity() || P.x().is_zero()) return CurvePoint::infinity();
    const Rat& x = P.x();
    const Rat& y = P.y();
    Rat x2 = x * x;
    return {y * y / (Rat(4) * x2), y * (Rat(8 * N) - x2) / (Rat(8) * x2)};
}

} // namespace ecfac
