#include "arith.hpp"

#include <algorithm>
#include <cmath>

namespace ecfac {

Rat::Rat(const Int& num, const Int& den) : q_(num, den) {
    if (den == 0) throw InvalidArgument("rational with zero denominator");
    q_.canonicalize();
}

Rat Rat::parse(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw InvalidArgument("not a rational number: " + text);
    if (q.get_den() == 0) throw InvalidArgument("rational with zero denominator: " + text);
    q.canonicalize();
    return Rat(Raw{}, std::move(q));
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw InvalidArgument("division by zero");
    q_ /= o.q_;
    return *this;
}

int jacobi(const Int& a_in, const Int& n_in) {
    if (n_in <= 0 || mpz_even_p(n_in.get_mpz_t()))
        throw InvalidArgument("jacobi: modulus must be odd and positive, got " + n_in.get_str());
    Int n = n_in;
    Int a = a_in % n;
    if (a < 0) a += n;
    int result = 1;
    while (a != 0) {
        mp_bitcnt_t twos = mpz_scan1(a.get_mpz_t(), 0);
        if (twos > 0) {
            mpz_tdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), twos);
            unsigned long r8 = mpz_fdiv_ui(n.get_mpz_t(), 8);
            if ((twos & 1) && (r8 == 3 || r8 == 5)) result = -result;
        }
        // reciprocity
        if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3) result = -result;
        std::swap(a, n);
        a %= n;
    }
    return n == 1 ? result : 0;
}

int legendre(const Int& a, const Int& p) {
    if (p == 2 || !is_prime(p)) throw InvalidArgument("legendre: modulus must be an odd prime, got " + p.get_str());
    return jacobi(a, p);
}

long val(const Int& x, const Int& t) {
    if (t < 2) throw InvalidArgument("val: t must be a prime");
    if (x == 0) return kInfiniteValuation;
    if (t == 2) return static_cast<long>(mpz_scan1(x.get_mpz_t(), 0));
    Int rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), t.get_mpz_t()));
}

long val(const Rat& x, const Int& t) {
    if (x.is_zero()) return kInfiniteValuation;
    return val(x.num(), t) - val(x.den(), t);
}

namespace {

bool miller_rabin_round(const Int& n, const Int& d, unsigned long s, const Int& base) {
    Int a = base % n;
    if (a == 0) return true;
    Int x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    const Int nm1 = n - 1;
    if (x == 1 || x == nm1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == nm1) return true;
    }
    return false;
}

} // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    static constexpr unsigned small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned p : small) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 64) return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;

    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    // Bases proven sufficient for all n < 2^64.
    static constexpr unsigned long bases[] = {2, 325, 9375, 28178, 450775, 9780504, 1795265022};
    for (unsigned long b : bases)
        if (!miller_rabin_round(n, d, s, Int(b))) return false;
    return true;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t bound) {
    std::vector<bool> composite(bound + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return out;
}

namespace {

const std::vector<std::uint32_t>& trial_primes() {
    static const std::vector<std::uint32_t> primes = primes_up_to(static_cast<std::uint32_t>(kTrialDivisionBound));
    return primes;
}

void add_power(std::vector<PrimePower>& out, const Int& p, unsigned e) {
    for (auto& pp : out)
        if (pp.prime == p) { pp.exponent += e; return; }
    out.push_back({p, e});
}

} // namespace

std::vector<PrimePower> factor(const Int& n_in, std::span<const Int> known_primes, std::uint64_t trial_bound) {
    if (n_in == 0) throw InvalidArgument("factor: zero has no factorization");
    Int n = abs(n_in);
    std::vector<PrimePower> out;
    for (const Int& p : known_primes) {
        if (p < 2) continue;
        Int rest;
        auto e = mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        if (e > 0) {
            add_power(out, p, static_cast<unsigned>(e));
            n = rest;
        }
    }
    for (std::uint32_t p : trial_primes()) {
        if (p > trial_bound) break;
        if (n == 1) break;
        if (Int(p) * p > n) break;
        if (!mpz_divisible_ui_p(n.get_mpz_t(), p)) continue;
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        add_power(out, Int(p), e);
    }
    if (n != 1) {
        // A cofactor is certainly prime if it is below bound^2 (all smaller
        // factors would have been found) or passes the primality test.
        Int b = Int(static_cast<unsigned long>(trial_bound));
        if (n < b * b || is_prime(n)) {
            add_power(out, n, 1);
        } else {
            throw IncompleteFactorization("cannot fully factor " + n_in.get_str() + " (cofactor " + n.get_str() + ")");
        }
    }
    std::sort(out.begin(), out.end(), [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    return out;
}

bool is_squarefree(const Int& n, std::span<const Int> known_primes, std::uint64_t trial_bound) {
    if (n <= 0) throw InvalidArgument("is_squarefree: n must be positive");
    for (const auto& pp : factor(n, known_primes, trial_bound))
        if (pp.exponent > 1) return false;
    return true;
}

Int squarefree_part(const Int& n, std::span<const Int> known_primes) {
    if (n == 0) throw InvalidArgument("squarefree_part of zero");
    Int out = sgn(n) < 0 ? Int(-1) : Int(1);
    for (const auto& pp : factor(n, known_primes))
        if (pp.exponent % 2) out *= pp.prime;
    return out;
}

Int isqrt(const Int& n) {
    if (n < 0) throw InvalidArgument("isqrt of negative number");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::optional<Int> exact_sqrt(const Int& n) {
    if (!is_square(n)) return std::nullopt;
    return isqrt(n);
}

std::optional<Rat> exact_sqrt(const Rat& x) {
    auto a = exact_sqrt(x.num());
    if (!a) return std::nullopt;
    auto b = exact_sqrt(x.den());
    if (!b) return std::nullopt;
    return Rat(*a, *b);
}

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int abs(const Int& a) {
    Int r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

long mod(const Int& a, long m) {
    return static_cast<long>(mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(m)));
}

long double log_abs(const Int& n) {
    if (n == 0) throw InvalidArgument("log of zero");
    // Keep the top 64 bits so the result carries full long double precision.
    std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    if (bits <= 64) {
        Int a = abs(n);
        unsigned long long v = 0;
        mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, a.get_mpz_t());
        return std::log(static_cast<long double>(v));
    }
    Int top;
    mpz_tdiv_q_2exp(top.get_mpz_t(), abs(n).get_mpz_t(), bits - 64);
    unsigned long long v = 0;
    mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, top.get_mpz_t());
    return std::log(static_cast<long double>(v)) + static_cast<long double>(bits - 64) * std::log(2.0L);
}

} // namespace ecfac
