#pragma once

#include <string>

#include "arith.hpp"
#include "params.hpp"
#include "selmer.hpp"

namespace ecfac {

// W(E_d) for E_d: y^2 = x^3 - d x, as a product of three signs.
struct RootNumberReport {
    Int d;
    int sign_term = 1;
    int epsilon_term = 1;
    int ramified_product = 1;
    int W = 1;
};

/// The epsilon factor: -1 when d mod 16 is one of 1, 3, 11, 13, else +1.
int epsilon(const Int& d);

RootNumberReport root_number(const Int& d);

struct RankConclusion {
    bool rank_one = false;
    std::string reason;  // why the conclusion is undetermined, empty when rank_one
    int root_number = 0;
    int rank_upper_bound = 0;
};

/// Rank one, assuming the parity conjecture, when W = -1 and the Selmer bound is 1.
RankConclusion conjectural_rank(const CurveParams& params, const SelmerGroup& s_phi, const SelmerGroup& s_phihat);

} // namespace ecfac
