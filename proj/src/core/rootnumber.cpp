#include "rootnumber.hpp"

namespace ecfac {

int epsilon(const Int& d) {
    if (mpz_divisible_ui_p(d.get_mpz_t(), 4)) throw InvalidArgument("epsilon: d must not be divisible by 4");
    switch (mod(d, 16)) {
    case 1:
    case 3:
    case 11:
    case 13:
        return -1;
    default:
        return 1;
    }
}

RootNumberReport root_number(const Int& d) {
    if (d == 0) throw InvalidArgument("root_number: d must be nonzero");
    RootNumberReport rep;
    rep.d = d;
    rep.epsilon_term = epsilon(d);
    rep.sign_term = d > 0 ? -1 : 1;  // sgn(-d)
    if (!is_squarefree(abs(d))) {
        for (const auto& pp : factor(d))
            if (pp.prime >= 3 && pp.exponent == 2) rep.ramified_product *= jacobi(-1, pp.prime);
    }
    rep.W = rep.sign_term * rep.epsilon_term * rep.ramified_product;
    return rep;
}

RankConclusion conjectural_rank(const CurveParams& params, const SelmerGroup& s_phi, const SelmerGroup& s_phihat) {
    RankConclusion out;
    out.root_number = root_number(params.two_n()).W;
    const RankBound bound = rank_upper_bound(s_phi, s_phihat);
    out.rank_upper_bound = bound.value;
    if (out.root_number == 1) {
        out.reason = "even parity";
    } else if (bound.value == 0) {
        out.reason = "contradiction: odd parity but Selmer bound 0";
    } else if (bound.value > 1) {
        out.reason = "Selmer bound " + std::to_string(bound.value) + " exceeds 1";
    } else {
        out.rank_one = true;
    }
    return out;
}

} // namespace ecfac
