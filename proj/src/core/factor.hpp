#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arith.hpp"
#include "curve.hpp"
#include "params.hpp"

namespace ecfac {

// One valuation observation: v_t(x(R)) for R = [m]Q or [m]Q + T.
struct ValuationEntry {
    Int t;
    long multiplier = 0;     // m
    bool plus_T = false;
    long value = 0;          // v_t(x(R))
    std::string rule;        // the table line that applies
    bool ok = false;
};

struct PatternReport {
    std::vector<ValuationEntry> entries;
    std::vector<std::string> violations;
    // Observations where the stronger printed bound "-2 >= v" fails although
    // the parity line holds; recorded, not counted as violations.
    std::vector<std::string> notes;
    long identity_checks = 0;  // x(R) x(R+T) = -2N confirmations

    bool passed() const { return violations.empty(); }
};

/// Valuation tables for [2k]Q, [2k+1]Q and their translates by T at every odd
/// prime t dividing rD, for k in -k_max..k_max without 0.
PatternReport pattern_check(const CurveParams& params, const CurvePoint& Q, long k_max);

/// v_p(x([k]Q)) != v_q(x([k]Q)) for every k in odd_ks. Throws for even k.
bool asymmetry_check(const CurveParams& params, const CurvePoint& Q, const std::vector<long>& odd_ks);

enum class GcdSource { numerator, denominator };
const char* to_string(GcdSource s);

struct Extraction {
    Int D;
    Rat x;
    GcdSource source = GcdSource::numerator;
    Int g;
    Int p_out, q_out;  // p_out < q_out
};

/// Splits D using only D and x: gcd with the numerator first, then the denominator.
/// Returns nullopt when neither gcd is a proper divisor.
std::optional<Extraction> extract(const Int& D, const Rat& x);

} // namespace ecfac
