#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arith.hpp"

namespace ecfac {

enum class ADTag { C1, C2, C3, C4, C5 };

const char* to_string(ADTag tag);

// The A_D case for a pair (p, q). `p` and `q` are the roles after any swap
// needed for the case's congruence conditions; `swapped` records whether the
// caller's order was reversed.
struct ADCase {
    ADTag tag = ADTag::C1;
    Int p;
    Int q;
    bool swapped = false;

    bool product_shape() const { return tag == ADTag::C5; }
};

// One replayable condition in a membership proof.
struct Check {
    enum class Kind {
        is_prime,   // is_prime(a) == (expected == 1)
        coprime,    // gcd(a, n) == 1, expected == 1
        residue,    // a mod n == expected
        symbol,     // jacobi(a, n) == expected
    };
    Kind kind = Kind::symbol;
    Int a;
    Int n;
    long expected = 0;
    std::string text;

    bool holds() const;
};

struct RCertificate {
    Int r;
    ADCase ad_case;
    std::vector<Int> primes;  // l, or (l1, l2) with l1 = 3 mod 8 and l2 = 7 mod 8
    std::vector<Check> checks;
};

// Re-evaluates every recorded check. A certificate with no checks is rejected.
bool replay(const RCertificate& cert);

struct Membership {
    std::optional<RCertificate> certificate;
    std::string failure;  // first failing condition when not a member

    explicit operator bool() const { return certificate.has_value(); }
};

class CurveParams {
public:
    // Validates that p, q are distinct odd primes, that r is positive, odd and
    // coprime to 2pq, and that 2rD is squarefree.
    CurveParams(const Int& p, const Int& q, const Int& r);

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }
    const Int& D() const { return D_; }
    const Int& r() const { return r_; }
    const Int& N() const { return N_; }
    Int two_n() const { return 2 * N_; }

    // Finite places of S in increasing order: 2 followed by the primes of rD.
    const std::vector<Int>& finite_places() const { return places_; }
    // Primes dividing r (the l's), increasing.
    const std::vector<Int>& r_primes() const { return r_primes_; }

private:
    Int p_, q_, D_, r_, N_;
    std::vector<Int> places_;
    std::vector<Int> r_primes_;
};

/// The class a_c for c in {3, 5, 7}: 3 and 7 go to 5, 5 goes to 3.
int abar(int c);

/// Throws InvalidArgument unless p and q are distinct odd primes.
void require_prime_pair(const Int& p, const Int& q);

ADCase classify(const Int& p, const Int& q);

Membership is_in_AD(const Int& p, const Int& q, const Int& r);

/// Smallest member of A_D not exceeding search_bound. Throws Exhausted.
RCertificate find_min_r(const Int& p, const Int& q, std::uint64_t search_bound);

struct MinRRow {
    Int p, q, D;
    ADTag tag = ADTag::C1;
    Int r_min;
    double log4_d = 0;
    double ratio = 0;
};

struct MinRStatistics {
    std::vector<MinRRow> rows;
    double max_ratio = 0;
    double mean_ratio = 0;
};

MinRStatistics min_r_statistics(const std::vector<std::pair<Int, Int>>& sample, std::uint64_t search_bound);

} // namespace ecfac
