#pragma once

#include <string>
#include <vector>

#include "arith.hpp"
#include "params.hpp"

namespace ecfac {

// An element of Q(S,2): a sign and a set of primes from S, standing for the
// squarefree integer sign * prod(primes).
struct SquareClass {
    int sign = 1;
    std::vector<Int> primes;  // increasing, distinct

    Int value() const;
    std::string str() const { return value().get_str(); }

    static SquareClass from_value(const Int& d);  // d squarefree and nonzero
    friend SquareClass operator*(const SquareClass& a, const SquareClass& b);
    friend bool operator==(const SquareClass&, const SquareClass&) = default;
};

// Place of Q: a prime t, or the real place (stored as 0).
using Place = Int;
inline bool is_real_place(const Place& v) { return v == 0; }
std::string place_name(const Place& v);

enum class SpaceKind { C, C_prime };  // phi side, phihat side

// dW^2 = d^2 + c Z^4 with c = 8N for C and c = -2N for C'.
struct HomogeneousSpace {
    SpaceKind kind = SpaceKind::C;
    Int d;
    Int N;

    Int c() const { return kind == SpaceKind::C ? Int(8 * N) : Int(-2 * N); }
};

enum class Verdict { solvable, unsolvable, not_applicable };
const char* to_string(Verdict v);

std::vector<SquareClass> enumerate_QS2(const std::vector<Int>& finite_places);

/// The closed-form criteria for odd d dividing rD. Other classes, and the
/// negative classes on the C side, get not_applicable.
Verdict closed_form_local(const HomogeneousSpace& space, const Place& v);

/// Independent decision by a t-adic digit search with Hensel cut-off.
/// Throws Inconclusive if a branch reaches the depth cap.
Verdict generic_local(const HomogeneousSpace& space, const Place& v);

/// Depth cap used by generic_local at the finite place t.
long digit_depth_cap(const Int& N, const Int& t);

enum class Side { phi, phihat };
const char* to_string(Side s);

struct LocalRecord {
    Int d;
    Place place;
    Verdict generic = Verdict::not_applicable;
    Verdict closed_form = Verdict::not_applicable;
};

struct SelmerGroup {
    Side side = Side::phi;
    std::vector<SquareClass> elements;
    int dim2 = 0;
    std::vector<LocalRecord> records;  // every (d, v) pair that was decided

    bool contains(const Int& d) const;
};

/// Throws InvariantViolation if the two oracles disagree or the result is not a group.
SelmerGroup selmer_group(const CurveParams& params, Side side);

struct RankBound {
    int value = 0;
    bool clamped = false;
};

RankBound rank_upper_bound(const SelmerGroup& s_phi, const SelmerGroup& s_phihat);

} // namespace ecfac
