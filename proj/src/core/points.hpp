#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arith.hpp"
#include "curve.hpp"
#include "params.hpp"
#include "selmer.hpp"

namespace ecfac {

// A point (z, w) on C'_d: d w^2 = d^2 - 2N z^4, with z = m/n in lowest terms.
struct HomSpacePoint {
    Int d;
    Rat z;
    Rat w;
};

bool on_homspace(const Int& N, const HomSpacePoint& hp);

/// Smallest solution on C'_d with z = m/n ordered by max(|m|, n) and then by
/// (|m|, n), searching up to max(|m|, n) <= height_cap. d must divide 2N.
std::optional<HomSpacePoint> search_homspace(const Int& d, const Int& N, std::uint64_t height_cap);

/// (z, w) -> (d/z^2, d w/z^3) on y^2 = x^3 - 2N x.
CurvePoint lift(const HomSpacePoint& hp, const Int& N);

/// Every point with x = a/d^2 and max(|a|, d^2) <= height_cap, including T
/// and both signs of y, sorted by (d, a, y).
std::vector<CurvePoint> naive_search(const Int& N, std::uint64_t height_cap);

/// A rational R with 2R in {P, P + T}, when one exists.
std::optional<CurvePoint> halve(const Int& N, const CurvePoint& P);

struct SearchCaps {
    std::uint64_t homspace_cap = 100000;
    std::uint64_t naive_cap = 1000000;
};

struct GeneratorCandidate {
    CurvePoint point;
    int halvings_applied = 0;
    std::string source;           // "homspace d=..." or "naive"
    std::string saturation_note;
};

/// Lowest-height non-torsion point from the naive search and the homogeneous
/// spaces of the phihat-Selmer group, halved until it no longer halves.
/// Throws Exhausted if nothing is found within the caps.
GeneratorCandidate find_generator(const CurveParams& params, const SelmerGroup& s_phihat, const SearchCaps& caps);

} // namespace ecfac
