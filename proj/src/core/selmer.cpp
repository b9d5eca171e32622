#include "selmer.hpp"

#include <algorithm>
#include <set>

namespace ecfac {

Int SquareClass::value() const {
    Int v = sign;
    for (const auto& p : primes) v *= p;
    return v;
}

SquareClass SquareClass::from_value(const Int& d) {
    if (d == 0) throw InvalidArgument("square class of zero");
    SquareClass out;
    out.sign = sgn(d) < 0 ? -1 : 1;
    for (const auto& pp : factor(d)) {
        if (pp.exponent != 1) throw InvalidArgument("square class representative must be squarefree");
        out.primes.push_back(pp.prime);
    }
    return out;
}

SquareClass operator*(const SquareClass& a, const SquareClass& b) {
    SquareClass out;
    out.sign = a.sign * b.sign;
    std::set_symmetric_difference(a.primes.begin(), a.primes.end(), b.primes.begin(), b.primes.end(),
                                  std::back_inserter(out.primes));
    return out;
}

std::string place_name(const Place& v) { return is_real_place(v) ? "inf" : v.get_str(); }

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::solvable: return "solvable";
    case Verdict::unsolvable: return "unsolvable";
    case Verdict::not_applicable: return "not_applicable";
    }
    return "?";
}

const char* to_string(Side s) { return s == Side::phi ? "phi" : "phihat"; }

std::vector<SquareClass> enumerate_QS2(const std::vector<Int>& finite_places) {
    const std::size_t n = finite_places.size();
    if (n > 30) throw InvalidArgument("too many places");
    std::vector<SquareClass> out;
    for (int sign : {1, -1}) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            SquareClass c;
            c.sign = sign;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1) c.primes.push_back(finite_places[i]);
            std::sort(c.primes.begin(), c.primes.end());
            out.push_back(std::move(c));
        }
    }
    return out;
}

Verdict closed_form_local(const HomogeneousSpace& space, const Place& v) {
    const Int& d = space.d;
    const Int& N = space.N;
    if (d == 0 || mpz_even_p(d.get_mpz_t())) return Verdict::not_applicable;
    if (!mpz_divisible_p(N.get_mpz_t(), d.get_mpz_t())) return Verdict::not_applicable;
    const bool c_side = space.kind == SpaceKind::C;
    if (c_side && d < 0) return Verdict::not_applicable;

    auto yes = [](bool b) { return b ? Verdict::solvable : Verdict::unsolvable; };
    if (is_real_place(v)) return yes(!c_side || d > 0);

    const Int e = 2 * N / d;  // 2rD/d
    if (v == 2) {
        if (c_side) return yes(mod(d, 8) == 1);
        return yes(mod(d, 8) == 1 || mod(d - e, 8) == 1);
    }
    if (mpz_divisible_p(d.get_mpz_t(), v.get_mpz_t())) return yes(jacobi(c_side ? e : Int(-e), v) == 1);
    if (mpz_divisible_p(N.get_mpz_t(), v.get_mpz_t())) return yes(jacobi(d, v) == 1);
    return Verdict::not_applicable;
}

long digit_depth_cap(const Int& N, const Int& t) {
    const Int m = 8 * N;
    return 2 * val(Int(4 * m * m), t) + 6;
}

namespace {

// Decides whether a*x^4 + b is a nonzero-or-zero t-adic square for some
// x = x0 + t^k * (anything in Z_t).
class DigitSearch {
public:
    DigitSearch(Int a, Int b, Int t, long cap) : a_(std::move(a)), b_(std::move(b)), t_(std::move(t)), cap_(cap) {}

    bool solvable(const Int& x0, long k, const Int& tk) const {
        const Int x2 = x0 * x0;
        const Int g = a_ * x2 * x2 + b_;
        if (g == 0) return true;
        const long vg = val(g, t_);
        const Int dg = 4 * a_ * x2 * x0;
        if (dg != 0 && vg > 2 * val(dg, t_)) return true;  // Hensel lift in W
        if (vg < k) {
            // g mod t^k is fixed on this branch, so v(g) and the leading unit are too.
            if (vg % 2 != 0) return false;
            Int unit = g;
            for (long i = 0; i < vg; ++i) mpz_divexact(unit.get_mpz_t(), unit.get_mpz_t(), t_.get_mpz_t());
            if (t_ != 2) return jacobi(unit, t_) == 1;
            if (k - vg >= 3) return mod(unit, 8) == 1;
        }
        if (k >= cap_) throw Inconclusive("digit search reached depth " + std::to_string(cap_) + " at t = " + t_.get_str());
        const Int next = tk * t_;
        for (Int i = 0; i < t_; ++i)
            if (solvable(x0 + i * tk, k + 1, next)) return true;
        return false;
    }

private:
    Int a_, b_, t_;
    long cap_;
};

} // namespace

Verdict generic_local(const HomogeneousSpace& space, const Place& v) {
    const Int& d = space.d;
    if (d == 0) throw InvalidArgument("d must be nonzero");
    // Multiply by d: (dW)^2 = d^3 X^4 + c d Z^4 on the projective line (X : Z).
    const Int a = d * d * d;
    const Int b = space.c() * d;
    if (is_real_place(v)) return (a > 0 || b > 0) ? Verdict::solvable : Verdict::unsolvable;
    if (v < 2 || !is_prime(v)) throw InvalidArgument("place must be a prime or the real place");
    const long cap = digit_depth_cap(space.N, v);
    // Chart Z = 1 with X in Z_t, then chart X = 1 with Z in tZ_t.
    if (DigitSearch(a, b, v, cap).solvable(0, 0, 1)) return Verdict::solvable;
    if (DigitSearch(b, a, v, cap).solvable(0, 1, v)) return Verdict::solvable;
    return Verdict::unsolvable;
}

bool SelmerGroup::contains(const Int& d) const {
    return std::any_of(elements.begin(), elements.end(), [&](const SquareClass& c) { return c.value() == d; });
}

SelmerGroup selmer_group(const CurveParams& params, Side side) {
    SelmerGroup out;
    out.side = side;
    const SpaceKind kind = side == Side::phi ? SpaceKind::C : SpaceKind::C_prime;
    std::vector<Place> places{Place(0)};
    for (const auto& t : params.finite_places()) places.push_back(t);

    for (const auto& cls : enumerate_QS2(params.finite_places())) {
        const HomogeneousSpace space{kind, cls.value(), params.N()};
        bool everywhere = true;
        for (const auto& v : places) {
            LocalRecord rec{space.d, v, generic_local(space, v), closed_form_local(space, v)};
            if (rec.closed_form != Verdict::not_applicable && rec.closed_form != rec.generic)
                throw InvariantViolation("local oracles disagree for d = " + space.d.get_str() + " at " + place_name(v));
            everywhere = everywhere && rec.generic == Verdict::solvable;
            out.records.push_back(std::move(rec));
        }
        if (everywhere) out.elements.push_back(cls);
    }

    const std::size_t n = out.elements.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw InvariantViolation("Selmer set has " + std::to_string(n) + " elements, not a power of two");
    for (const auto& a : out.elements)
        for (const auto& b : out.elements)
            if (!out.contains((a * b).value())) throw InvariantViolation("Selmer set is not closed under products");
    while ((std::size_t{1} << out.dim2) < n) ++out.dim2;
    return out;
}

RankBound rank_upper_bound(const SelmerGroup& s_phi, const SelmerGroup& s_phihat) {
    const int raw = s_phi.dim2 + s_phihat.dim2 - 2;
    return raw < 0 ? RankBound{0, true} : RankBound{raw, false};
}

} // namespace ecfac
