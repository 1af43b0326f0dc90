/**
 * @file oracle.hpp
 * @brief Independent verification suite for the lens-space tables.
 *
 * Each check re-derives its expectation from scratch (closed forms written
 * out locally, multiset symmetries, frozen hand-computed tables) and reports
 * every failing witness instead of throwing. A correct build produces empty
 * failure lists; these checks are shipped in the library so the CLI `verify`
 * command can run them user-visibly.
 */
#pragma once

#include <string>
#include <vector>

#include "ratgenus/core.hpp"

namespace ratgenus {

struct OracleFailure {
    long long p = 0;
    long long q = 0;
    long long i = -1;  // label/class witness, -1 when not applicable
    std::string detail;
};

struct OracleReport {
    std::string name;
    long long p_max = 0;
    long long cases = 0;
    std::vector<OracleFailure> failures;

    bool ok() const { return failures.empty(); }
};

/// d_lens(L(p,1), i) == ((2i-p)^2 - p)/(4p) for all p <= p_max, all i.
/// The right-hand side is evaluated here from its own expression.
OracleReport check_closed_form(long long p_max);

/// multiset d(L(p, p-q)) == -multiset d(L(p,q)) for all coprime pairs.
OracleReport check_orientation_reversal(long long p_max);

/// multiset d(L(p,q)) == multiset d(L(p,q')) whenever q q' == 1 (mod p).
OracleReport check_homeo_invariance(long long p_max);

/// Some affine involution i -> c - i preserves every d-table entrywise, and
/// the theta raw bound is invariant under k -> p - k for every class.
OracleReport check_conjugation(long long p_max);

/// Frozen hand-computed tables for L(2,1), L(3,1), L(3,2), L(5,2).
OracleReport check_reference_table();

/// All five checks, in a fixed order.
std::vector<OracleReport> verify_all(long long p_max);

}  // namespace ratgenus
