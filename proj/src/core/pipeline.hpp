#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "factor.hpp"
#include "heights.hpp"
#include "params.hpp"
#include "points.hpp"
#include "rootnumber.hpp"
#include "selmer.hpp"

namespace ecfac {

struct RunConfig {
    std::uint64_t search_bound_r = 1000000;
    std::uint64_t homspace_cap = 100000;
    std::uint64_t naive_cap = 1000000;
    long k_range = 5;
    double height_tolerance = 1e-6;

    void validate() const;  // throws InvalidArgument
    SearchCaps caps() const { return {homspace_cap, naive_cap}; }
};

// x-coordinate tried during extraction: [k]Q or [k]Q + T.
struct ExtractionAttempt {
    long k = 1;
    bool plus_T = false;
    Rat x;
    bool succeeded = false;
};

struct FactorCertificate {
    Int p, q;  // construction inputs
    RCertificate r_cert;
    SelmerGroup s_phi, s_phihat;
    RankBound rank_bound;
    RootNumberReport root;
    RankConclusion rank;
    GeneratorCandidate generator;
    HeightReport height_limit, height_local;
    HeightBounds height_bounds;
    std::vector<std::pair<Int, long>> generator_valuations;  // v_t(x(Q)) for t | 2N
    std::vector<ExtractionAttempt> attempts;
    Extraction extraction;
};

/// Every stage from the choice of r to the split of D. Failures are rethrown as
/// StageError carrying the stage name.
FactorCertificate end_to_end(const Int& p, const Int& q, const RunConfig& config);

} // namespace ecfac
