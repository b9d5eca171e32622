#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace ecfac {

using Int = mpz_class;

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rat {
public:
    Rat() = default;
    Rat(long v) : q_(v) {}
    Rat(const Int& n) : q_(n) {}
    Rat(const Int& num, const Int& den);

    static Rat parse(const std::string& text);

    Int num() const { return q_.get_num(); }
    Int den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    std::string str() const { return q_.get_str(); }

    Rat operator-() const { return Rat(Raw{}, mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }

private:
    struct Raw {};
    Rat(Raw, mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

struct PrimePower {
    Int prime;
    unsigned exponent = 0;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

inline constexpr long kInfiniteValuation = std::numeric_limits<long>::max();
inline constexpr std::uint64_t kTrialDivisionBound = 1000000;

/// Jacobi symbol (a/n) for odd n >= 1, by the binary algorithm.
int jacobi(const Int& a, const Int& n);

/// Legendre symbol; n must be an odd prime.
int legendre(const Int& a, const Int& p);

/// t-adic valuation. Zero maps to kInfiniteValuation.
long val(const Int& x, const Int& t);
long val(const Rat& x, const Int& t);

/// Deterministic Miller-Rabin below 2^64; 40-round probabilistic above.
bool is_prime(const Int& n);

/// Factor |n| using the supplied primes plus trial division up to `trial_bound`.
/// Throws IncompleteFactorization if a cofactor other than 1 remains.
std::vector<PrimePower> factor(const Int& n,
                               std::span<const Int> known_primes = {},
                               std::uint64_t trial_bound = kTrialDivisionBound);

bool is_squarefree(const Int& n, std::span<const Int> known_primes = {},
                   std::uint64_t trial_bound = kTrialDivisionBound);

/// Squarefree kernel with the sign of n, i.e. the class of n in Q*/Q*^2.
Int squarefree_part(const Int& n, std::span<const Int> known_primes = {});

Int isqrt(const Int& n);
bool is_square(const Int& n);
std::optional<Int> exact_sqrt(const Int& n);
std::optional<Rat> exact_sqrt(const Rat& x);

Int gcd(const Int& a, const Int& b);
Int abs(const Int& a);

/// Nonnegative residue of a modulo m (m > 0).
long mod(const Int& a, long m);

/// Natural log of |n| for n != 0, accurate for arbitrarily large n.
long double log_abs(const Int& n);

std::vector<std::uint32_t> primes_up_to(std::uint32_t bound);

} // namespace ecfac
