#include "factor.hpp"

#include <map>

namespace ecfac {

const char* to_string(GcdSource s) { return s == GcdSource::numerator ? "numerator" : "denominator"; }

namespace {

std::string label(long m, bool plus_T) {
    std::string s = "[" + std::to_string(m) + "]Q";
    return plus_T ? s + "+T" : s;
}

bool is_even(long v) { return v % 2 == 0; }

} // namespace

PatternReport pattern_check(const CurveParams& params, const CurvePoint& Q, long k_max) {
    const Curve E = Curve::E(params.N());
    if (!E.contains(Q) || E.is_torsion(Q)) throw InvalidArgument("pattern_check needs a non-torsion point on the curve");
    if (k_max < 1) throw InvalidArgument("k range must be at least 1");

    // Multiples [m]Q for |m| <= 2 k_max + 1, computed once.
    std::map<long, CurvePoint> mult;
    const long top = 2 * k_max + 1;
    CurvePoint acc;
    for (long m = 1; m <= top; ++m) {
        acc = E.add(acc, Q);
        mult[m] = acc;
        mult[-m] = E.negate(acc);
    }

    PatternReport rep;
    const Rat minus_2n(Int(-2 * params.N()));
    for (const auto& t : params.finite_places()) {
        if (t == 2) continue;
        const bool case_one = val(Q.x(), t) >= 1;
        for (long k = -k_max; k <= k_max; ++k) {
            if (k == 0) continue;
            for (long m : {2 * k, 2 * k + 1}) {
                const CurvePoint& R = mult.at(m);
                const CurvePoint RT = E.translate_T(R);
                if (R.x() * RT.x() == minus_2n) {
                    ++rep.identity_checks;
                } else {
                    rep.violations.push_back("x(R)x(R+T) != -2N for R = " + label(m, false));
                }
                const bool odd_m = m % 2 != 0;
                for (bool plus_T : {false, true}) {
                    const long v = val(plus_T ? RT.x() : R.x(), t);
                    ValuationEntry e{t, m, plus_T, v, {}, false};
                    // Which of the four table lines applies.
                    const bool positive_odd = plus_T != (case_one && odd_m);
                    if (positive_odd) {
                        e.rule = "1 <= v odd";
                        e.ok = v >= 1 && !is_even(v);
                    } else {
                        e.rule = "0 >= v even";
                        e.ok = v <= 0 && is_even(v);
                        if (case_one && odd_m && plus_T && e.ok && v > -2)
                            rep.notes.push_back("t = " + t.get_str() + ", " + label(m, true) + ": v = " + std::to_string(v) +
                                                " does not meet -2 >= v");
                    }
                    if (!e.ok)
                        rep.violations.push_back("t = " + t.get_str() + ", " + label(m, plus_T) + ": v = " +
                                                 std::to_string(v) + " breaks " + e.rule);
                    rep.entries.push_back(std::move(e));
                }
            }
        }
    }
    return rep;
}

bool asymmetry_check(const CurveParams& params, const CurvePoint& Q, const std::vector<long>& odd_ks) {
    const Curve E = Curve::E(params.N());
    for (long k : odd_ks) {
        if (k % 2 == 0) throw InvalidArgument("asymmetry_check needs odd multipliers, got " + std::to_string(k));
        const Rat x = E.mul(k, Q).x();
        if (val(x, params.p()) == val(x, params.q())) return false;
    }
    return true;
}

std::optional<Extraction> extract(const Int& D, const Rat& x) {
    if (D < 4 || mpz_even_p(D.get_mpz_t())) throw InvalidArgument("extract needs an odd composite D");
    for (GcdSource source : {GcdSource::numerator, GcdSource::denominator}) {
        const Int g = gcd(source == GcdSource::numerator ? x.num() : x.den(), D);
        if (g > 1 && g < D) {
            Extraction out{D, x, source, g, g, Int(D / g)};
            if (out.p_out > out.q_out) std::swap(out.p_out, out.q_out);
            return out;
        }
    }
    return std::nullopt;
}

} // namespace ecfac
