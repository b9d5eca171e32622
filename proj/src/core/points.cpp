#include "points.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "heights.hpp"

namespace ecfac {

bool on_homspace(const Int& N, const HomSpacePoint& hp) {
    const Rat d(hp.d);
    const Rat z2 = hp.z * hp.z;
    return d * hp.w * hp.w == d * d - Rat(Int(2 * N)) * z2 * z2;
}

namespace {

// Quadratic-residue filters for values of a*u^4 - b*v^4 at small moduli.
class ResidueFilter {
public:
    static constexpr std::array<unsigned, 12> kModuli{64, 63, 65, 11, 17, 19, 23, 29, 31, 37, 41, 43};

    ResidueFilter(const Int& a, const Int& b) {
        for (std::size_t i = 0; i < kModuli.size(); ++i) {
            const unsigned M = kModuli[i];
            squares_[i].assign(M, 0);
            for (unsigned x = 0; x < M; ++x) squares_[i][x * x % M] = 1;
            a4_[i].resize(M);
            b4_[i].resize(M);
            const unsigned am = static_cast<unsigned>(mod(a, M)), bm = static_cast<unsigned>(mod(b, M));
            for (unsigned x = 0; x < M; ++x) {
                const unsigned x2 = x * x % M, x4 = x2 * x2 % M;
                a4_[i][x] = am * x4 % M;
                b4_[i][x] = bm * x4 % M;
            }
        }
    }

    // Residues of a*u^4 for a fixed u, one per modulus.
    std::array<unsigned, kModuli.size()> prepare_a(std::uint64_t u) const {
        std::array<unsigned, kModuli.size()> out{};
        for (std::size_t i = 0; i < kModuli.size(); ++i) out[i] = a4_[i][u % kModuli[i]];
        return out;
    }
    std::array<unsigned, kModuli.size()> prepare_b(std::uint64_t v) const {
        std::array<unsigned, kModuli.size()> out{};
        for (std::size_t i = 0; i < kModuli.size(); ++i) out[i] = b4_[i][v % kModuli[i]];
        return out;
    }

    bool passes_with_a(const std::array<unsigned, kModuli.size()>& ra, std::uint64_t v) const {
        for (std::size_t i = 0; i < kModuli.size(); ++i) {
            const unsigned M = kModuli[i];
            if (!squares_[i][(ra[i] + M - b4_[i][v % M]) % M]) return false;
        }
        return true;
    }
    bool passes_with_b(const std::array<unsigned, kModuli.size()>& rb, std::uint64_t u) const {
        for (std::size_t i = 0; i < kModuli.size(); ++i) {
            const unsigned M = kModuli[i];
            if (!squares_[i][(a4_[i][u % M] + M - rb[i]) % M]) return false;
        }
        return true;
    }

private:
    std::array<std::vector<unsigned char>, kModuli.size()> squares_;
    std::array<std::vector<unsigned>, kModuli.size()> a4_, b4_;
};

Int fourth(std::uint64_t v) {
    Int x(static_cast<unsigned long>(v));
    return x * x * x * x;
}

} // namespace

std::optional<HomSpacePoint> search_homspace(const Int& d, const Int& N, std::uint64_t height_cap) {
    if (d == 0) throw InvalidArgument("d must be nonzero");
    const Int two_n = 2 * N;
    if (!mpz_divisible_p(two_n.get_mpz_t(), d.get_mpz_t())) throw InvalidArgument("d must divide 2N");
    const Int e = two_n / d;
    // w'^2 = d n^4 - e m^4 with z = m/n and w = w'/n^2.
    if (d < 0 && e > 0) return std::nullopt;

    // Admissible slope range for m/n from the sign of d n^4 - e m^4.
    const long double ratio = std::pow(std::fabs(d.get_d() / e.get_d()), 0.25L);
    const ResidueFilter filter(d, e);

    auto test = [&](std::uint64_t m, std::uint64_t n) -> std::optional<HomSpacePoint> {
        if (std::gcd(m, n) != 1) return std::nullopt;
        const Int S = d * fourth(n) - e * fourth(m);
        if (S < 0) return std::nullopt;
        auto root = exact_sqrt(S);
        if (!root) return std::nullopt;
        const Int ni(static_cast<unsigned long>(n));
        HomSpacePoint hp{d, Rat(Int(static_cast<unsigned long>(m)), ni), Rat(*root, ni * ni)};
        return hp;
    };

    for (std::uint64_t H = 1; H <= height_cap; ++H) {
        std::optional<HomSpacePoint> best;
        auto keep = [&](std::optional<HomSpacePoint> hp) {
            if (!hp) return;
            if (!best || std::pair(hp->z.num(), hp->z.den()) < std::pair(best->z.num(), best->z.den())) best = std::move(hp);
        };
        auto m_allowed = [&](long double m, long double n) {
            if (e < 0) return d > 0 || m >= n * ratio * (1 - 1e-12L);
            return m <= n * ratio * (1 + 1e-12L);
        };
        // Shell n = H, m = 1..H.
        {
            const auto ra = filter.prepare_a(H);
            for (std::uint64_t m = 1; m <= H; ++m) {
                if (!m_allowed(static_cast<long double>(m), static_cast<long double>(H))) continue;
                if (filter.passes_with_a(ra, m)) keep(test(m, H));
            }
        }
        // Shell m = H, n = 1..H-1.
        if (H > 1 && (e < 0 || m_allowed(static_cast<long double>(H), static_cast<long double>(H - 1)))) {
            const auto rb = filter.prepare_b(H);
            for (std::uint64_t n = 1; n < H; ++n) {
                if (!m_allowed(static_cast<long double>(H), static_cast<long double>(n))) continue;
                if (filter.passes_with_b(rb, n)) keep(test(H, n));
            }
        }
        if (best) return best;
    }
    return std::nullopt;
}

CurvePoint lift(const HomSpacePoint& hp, const Int& N) {
    if (hp.z.is_zero()) throw InvalidArgument("lift needs z != 0");
    const Rat d(hp.d);
    const Rat z2 = hp.z * hp.z;
    CurvePoint P(d / z2, d * hp.w / (z2 * hp.z));
    if (!Curve::E(N).contains(P)) throw InvariantViolation("lifted point is not on the curve");
    return P;
}

std::vector<CurvePoint> naive_search(const Int& N, std::uint64_t height_cap) {
    std::vector<CurvePoint> out;
    if (height_cap >= 1) out.emplace_back(Rat(0), Rat(0));
    const Int two_n = 2 * N;
    // With gcd(a, d) = 1, y^2 d^6 = a (a^2 - 2N d^4) forces a = delta u^2 with
    // delta a signed squarefree divisor of 2N.
    std::vector<Int> deltas;
    {
        const auto f = factor(two_n);
        const std::size_t k = f.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
            Int v = 1;
            for (std::size_t i = 0; i < k; ++i)
                if (mask >> i & 1) v *= f[i].prime;
            deltas.push_back(v);
            deltas.push_back(-v);
        }
    }
    const Int cap(static_cast<unsigned long>(height_cap));
    for (std::uint64_t den = 1; den * den <= height_cap; ++den) {
        const Int den_i(static_cast<unsigned long>(den));
        const Int d2 = den_i * den_i;
        const Int d4 = d2 * d2;
        for (const Int& delta : deltas) {
            for (std::uint64_t u = 1;; ++u) {
                const Int ui(static_cast<unsigned long>(u));
                const Int a = delta * ui * ui;
                if (abs(a) > cap) break;
                if (gcd(a, den_i) != 1) continue;
                const Int rest = a * a - two_n * d4;  // must be delta times a square
                if (!mpz_divisible_p(rest.get_mpz_t(), delta.get_mpz_t())) continue;
                const Int q = rest / delta;
                if (q < 0) continue;
                auto s = exact_sqrt(q);
                if (!s) continue;
                // y = delta u s / den^3
                const Rat y(Int(abs(delta) * ui * *s), d2 * den_i);
                const Rat x(a, d2);
                if (y.is_zero()) continue;
                out.emplace_back(x, y);
                out.emplace_back(x, -y);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const CurvePoint& P, const CurvePoint& Q) {
        return std::tuple(P.x().den(), P.x().num(), P.y().raw()) < std::tuple(Q.x().den(), Q.x().num(), Q.y().raw());
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    const Curve E = Curve::E(N);
    for (const auto& P : out)
        if (!E.contains(P)) throw InvariantViolation("naive search produced a point off the curve");
    return out;
}

std::optional<CurvePoint> halve(const Int& N, const CurvePoint& P) {
    const Curve E = Curve::E(N);
    if (!E.contains(P) || E.is_torsion(P)) throw InvalidArgument("halve needs a non-torsion point on the curve");
    const Curve Ep = Curve::E_prime(N);
    // [2] = phihat o phi: pull P' back along phihat (needs x(P') square), then
    // pull that point back along phi (needs its x square as well).
    for (const CurvePoint& target : {P, E.translate_T(P)}) {
        auto s = exact_sqrt(target.x());
        if (!s) continue;
        const Rat& y = target.y();
        for (const Rat& xp : {Rat(2) * *s * *s + Rat(2) * y / *s, Rat(2) * *s * *s - Rat(2) * y / *s}) {
            if (xp.is_zero()) continue;
            for (const Rat& sign : {Rat(1), Rat(-1)}) {
                const CurvePoint Rp(xp, sign * Rat(2) * *s * xp);
                if (!Ep.contains(Rp) || phihat(N, Rp) != target) continue;
                auto t = exact_sqrt(Rp.x());
                if (!t) continue;
                const Rat t2 = *t * *t;
                auto disc = exact_sqrt(t2 * t2 + Rat(Int(8 * N)));
                if (!disc) continue;
                for (const Rat& x : {(t2 + *disc) / Rat(2), (t2 - *disc) / Rat(2)}) {
                    for (const Rat& ys : {*t * x, -*t * x}) {
                        const CurvePoint R(x, ys);
                        if (E.contains(R) && E.dbl(R) == target) return R;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

GeneratorCandidate find_generator(const CurveParams& params, const SelmerGroup& s_phihat, const SearchCaps& caps) {
    const Int& N = params.N();
    const Curve E = Curve::E(N);
    struct Found {
        CurvePoint P;
        std::string source;
    };
    std::vector<Found> found;
    for (const auto& P : naive_search(N, caps.naive_cap))
        if (!E.is_torsion(P)) found.push_back({P, "naive"});

    // Classes d and -2N d give the same equation with m and n exchanged, so one
    // representative per coset of {1, -2N} is searched.
    const Int t_class = -params.two_n();
    std::vector<Int> searched;
    for (const auto& cls : s_phihat.elements) {
        const Int d = cls.value();
        if (d == 1 || d == t_class) continue;
        const Int partner = t_class * d / (gcd(t_class, d) * gcd(t_class, d));
        if (std::find(searched.begin(), searched.end(), partner) != searched.end()) continue;
        searched.push_back(d);
        if (auto hp = search_homspace(d, N, caps.homspace_cap)) found.push_back({lift(*hp, N), "homspace d=" + d.get_str()});
    }
    if (found.empty()) throw Exhausted("no point found within caps");

    auto height = [&](const CurvePoint& P) { return canonical_height(N, P, HeightMethod::local_sum).canonical; };
    std::size_t best = 0;
    long double best_h = height(found[0].P);
    for (std::size_t i = 1; i < found.size(); ++i) {
        const long double h = height(found[i].P);
        if (h < best_h - 1e-9L) {
            best = i;
            best_h = h;
        }
    }

    GeneratorCandidate out{found[best].P, 0, found[best].source, {}};
    while (auto R = halve(N, out.point)) {
        out.point = *R;
        ++out.halvings_applied;
    }
    if (out.point.y().sign() < 0) out.point = E.negate(out.point);
    out.saturation_note = "not halvable; divisibility by odd m >= 3 not tested";
    return out;
}

} // namespace ecfac
