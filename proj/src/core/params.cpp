#include "params.hpp"

#include <algorithm>
#include <cmath>

namespace ecfac {

const char* to_string(ADTag tag) {
    switch (tag) {
    case ADTag::C1: return "C1";
    case ADTag::C2: return "C2";
    case ADTag::C3: return "C3";
    case ADTag::C4: return "C4";
    case ADTag::C5: return "C5";
    }
    return "?";
}

bool Check::holds() const {
    switch (kind) {
    case Kind::is_prime: return is_prime(a) == (expected == 1);
    case Kind::coprime: return (gcd(a, n) == 1) == (expected == 1);
    case Kind::residue: return n > 0 && mod(a, n.get_si()) == expected;
    case Kind::symbol: return n > 0 && mpz_odd_p(n.get_mpz_t()) && jacobi(a, n) == expected;
    }
    return false;
}

bool replay(const RCertificate& cert) {
    if (cert.checks.empty()) return false;
    return std::all_of(cert.checks.begin(), cert.checks.end(), [](const Check& c) { return c.holds(); });
}

void require_prime_pair(const Int& p, const Int& q) {
    if (p == q) throw InvalidArgument("p and q must be distinct");
    for (const Int* x : {&p, &q})
        if (*x == 2 || !is_prime(*x)) throw InvalidArgument(x->get_str() + " is not an odd prime");
}

CurveParams::CurveParams(const Int& p, const Int& q, const Int& r) : p_(p), q_(q), D_(p * q), r_(r), N_(r * p * q) {
    require_prime_pair(p, q);
    if (r < 1) throw InvalidArgument("r must be positive");
    if (mpz_even_p(r.get_mpz_t())) throw InvalidArgument("r must be odd");
    if (gcd(r, D_) != 1) throw InvalidArgument("r must be coprime to D");
    std::vector<Int> known{p, q};
    auto fr = factor(r, known);
    for (const auto& pp : fr) {
        if (pp.exponent > 1) throw InvalidArgument("2rD is not squarefree");
        r_primes_.push_back(pp.prime);
    }
    places_.push_back(2);
    places_.push_back(p);
    places_.push_back(q);
    for (const auto& l : r_primes_) places_.push_back(l);
    std::sort(places_.begin(), places_.end());
}

int abar(int c) {
    switch (c) {
    case 3: return 5;
    case 7: return 5;
    case 5: return 3;
    default: throw InvalidArgument("a_c is only defined for c in {3, 5, 7}, got " + std::to_string(c));
    }
}

ADCase classify(const Int& p, const Int& q) {
    require_prime_pair(p, q);
    const long pm = mod(p, 8), qm = mod(q, 8), dm = mod(p * q, 8);
    if (pm == 1 && qm == 1) return {ADTag::C5, p, q, false};
    if (pm == 1) return {ADTag::C4, p, q, false};
    if (qm == 1) return {ADTag::C4, q, p, true};
    if (dm == 7) return {ADTag::C1, p, q, false};
    if (dm == 3 || dm == 5) return {ADTag::C2, p, q, false};
    return {ADTag::C3, p, q, false};
}

namespace {

Check symbol(const Int& a, const Int& n, long expected, const std::string& text) {
    return {Check::Kind::symbol, a, n, expected, text};
}

Check residue(const Int& a, long value, const std::string& text) {
    return {Check::Kind::residue, a, Int(8), value, text};
}

std::string first_failure(const std::vector<Check>& checks) {
    for (const auto& c : checks)
        if (!c.holds()) return c.text;
    return {};
}

// Conditions for a single prime l under one role assignment of (p, q).
std::vector<Check> single_prime_checks(ADTag tag, const Int& p, const Int& q, const Int& l) {
    const Int D = p * q;
    const std::string ls = l.get_str(), ps = p.get_str(), ds = D.get_str();
    std::vector<Check> out;
    switch (tag) {
    case ADTag::C1:
        out.push_back(residue(l, mod(q, 8), ls + " = q = " + std::to_string(mod(q, 8)) + " mod 8"));
        out.push_back(symbol(D, l, -1, "(" + ds + "/" + ls + ") = -1"));
        out.push_back(symbol(l, p, 1, "(" + ls + "/" + ps + ") = 1"));
        break;
    case ADTag::C2:
        out.push_back(residue(D * l, 1, ds + "*" + ls + " = 1 mod 8"));
        out.push_back(symbol(D, l, -1, "(" + ds + "/" + ls + ") = -1"));
        out.push_back(symbol(l, p, 1, "(" + ls + "/" + ps + ") = 1"));
        break;
    case ADTag::C3:
    case ADTag::C4: {
        const long qm = mod(q, 8);
        if (qm == 1) {
            // a_1 is undefined; unreachable for a classified pair but kept as a guard.
            out.push_back(residue(q, 0, "a_q undefined for q = 1 mod 8"));
            break;
        }
        const int target = abar(static_cast<int>(qm));
        out.push_back(residue(l, target, ls + " = a_q = " + std::to_string(target) + " mod 8"));
        out.push_back(symbol(D, l, -1, "(" + ds + "/" + ls + ") = -1"));
        if (tag == ADTag::C4) out.push_back(symbol(p, l, -1, "(" + ps + "/" + ls + ") = -1"));
        break;
    }
    case ADTag::C5:
        break;
    }
    return out;
}

std::vector<Check> product_checks(const Int& p, const Int& q, const Int& l1, const Int& l2) {
    const Int D = p * q;
    const std::string ds = D.get_str(), l1s = l1.get_str(), l2s = l2.get_str();
    return {
        residue(l1, 3, l1s + " = 3 mod 8"),
        residue(l2, 7, l2s + " = 7 mod 8"),
        symbol(D, l1, -1, "(" + ds + "/" + l1s + ") = -1"),
        symbol(D, l2, -1, "(" + ds + "/" + l2s + ") = -1"),
        symbol(l1 * l2, p, -1, "(" + Int(l1 * l2).get_str() + "/" + p.get_str() + ") = -1"),
    };
}

std::vector<Check> shape_checks(const std::vector<Int>& primes, const Int& D) {
    std::vector<Check> out;
    for (const auto& l : primes) {
        out.push_back({Check::Kind::is_prime, l, Int(0), 1, l.get_str() + " is prime"});
        out.push_back({Check::Kind::coprime, l, 2 * D, 1, l.get_str() + " does not divide 2D"});
    }
    return out;
}

} // namespace

Membership is_in_AD(const Int& p, const Int& q, const Int& r) {
    const ADCase base = classify(p, q);
    const Int D = p * q;
    if (r < 3 || mpz_even_p(r.get_mpz_t())) return {std::nullopt, "r must be odd and at least 3"};
    if (gcd(r, D) != 1) return {std::nullopt, "r shares a factor with D"};

    if (!base.product_shape()) {
        if (!is_prime(r)) return {std::nullopt, r.get_str() + " is not prime"};
        // The table is asymmetric in p and q; C1-C3 try both role assignments.
        std::vector<ADCase> orientations{base};
        if (base.tag != ADTag::C4) orientations.push_back({base.tag, base.q, base.p, !base.swapped});
        std::string failure;
        for (const auto& oc : orientations) {
            auto checks = single_prime_checks(oc.tag, oc.p, oc.q, r);
            auto why = first_failure(checks);
            if (why.empty()) {
                auto all = shape_checks({r}, D);
                all.insert(all.end(), checks.begin(), checks.end());
                return {RCertificate{r, oc, {r}, std::move(all)}, {}};
            }
            if (failure.empty()) failure = why;
        }
        return {std::nullopt, failure};
    }

    std::vector<Int> known{p, q};
    std::vector<PrimePower> f;
    try {
        f = factor(r, known);
    } catch (const IncompleteFactorization&) {
        return {std::nullopt, "cannot factor r"};
    }
    if (f.size() != 2 || f[0].exponent != 1 || f[1].exponent != 1)
        return {std::nullopt, r.get_str() + " is not a product of two distinct primes"};
    Int l1 = f[0].prime, l2 = f[1].prime;
    if (mod(l1, 8) == 7) std::swap(l1, l2);
    std::string failure;
    for (const auto& oc : {base, ADCase{base.tag, base.q, base.p, !base.swapped}}) {
        auto checks = product_checks(oc.p, oc.q, l1, l2);
        auto why = first_failure(checks);
        if (why.empty()) {
            auto all = shape_checks({l1, l2}, D);
            all.insert(all.end(), checks.begin(), checks.end());
            return {RCertificate{r, oc, {l1, l2}, std::move(all)}, {}};
        }
        if (failure.empty()) failure = why;
    }
    return {std::nullopt, failure};
}

namespace {

constexpr std::uint64_t kMaxSearchBound = 1000000000ULL;

} // namespace

RCertificate find_min_r(const Int& p, const Int& q, std::uint64_t search_bound) {
    if (search_bound < 3) throw InvalidArgument("search bound must be at least 3");
    if (search_bound > kMaxSearchBound) throw InvalidArgument("search bound above 10^9 is not supported");
    const ADCase c = classify(p, q);
    const Int D = p * q;

    if (!c.product_shape()) {
        for (std::uint64_t l = 3; l <= search_bound; l += 2) {
            Int li(static_cast<unsigned long>(l));
            if (!is_prime(li)) continue;
            if (auto m = is_in_AD(p, q, li)) return *m.certificate;
        }
        throw Exhausted("no r in A_D up to " + std::to_string(search_bound));
    }

    // Products l1*l2 with l1 = 3 and l2 = 7 mod 8; both need (D/l) = -1.
    const auto primes = primes_up_to(static_cast<std::uint32_t>(search_bound / 3));
    std::vector<std::uint64_t> threes, sevens;
    for (auto l : primes) {
        if (l == 2 || mpz_divisible_ui_p(D.get_mpz_t(), l)) continue;
        if (jacobi(D, Int(l)) != -1) continue;
        if (l % 8 == 3 && l <= search_bound / 7) threes.push_back(l);
        if (l % 8 == 7) sevens.push_back(l);
    }
    std::optional<RCertificate> best;
    std::uint64_t best_r = search_bound + 1;
    for (auto l1 : threes) {
        for (auto l2 : sevens) {
            const std::uint64_t prod = l1 * l2;
            if (prod >= best_r) break;
            if (auto m = is_in_AD(p, q, Int(static_cast<unsigned long>(prod)))) {
                best = *m.certificate;
                best_r = prod;
                break;
            }
        }
    }
    if (!best) throw Exhausted("no r in A_D up to " + std::to_string(search_bound));
    return *best;
}

MinRStatistics min_r_statistics(const std::vector<std::pair<Int, Int>>& sample, std::uint64_t search_bound) {
    MinRStatistics out;
    double sum = 0;
    for (const auto& [p, q] : sample) {
        auto cert = find_min_r(p, q, search_bound);
        MinRRow row;
        row.p = p;
        row.q = q;
        row.D = p * q;
        row.tag = cert.ad_case.tag;
        row.r_min = cert.r;
        const double lg = static_cast<double>(log_abs(row.D));
        row.log4_d = lg * lg * lg * lg;
        row.ratio = cert.r.get_d() / row.log4_d;
        out.max_ratio = std::max(out.max_ratio, row.ratio);
        sum += row.ratio;
        out.rows.push_back(std::move(row));
    }
    if (!out.rows.empty()) out.mean_ratio = sum / static_cast<double>(out.rows.size());
    return out;
}

} // namespace ecfac
