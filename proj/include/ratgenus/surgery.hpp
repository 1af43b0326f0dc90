/**
 * @file surgery.hpp
 * @brief V/H obstruction sequences of L-space knots and correction terms of
 *        integer surgeries.
 *
 * For an L-space knot with symmetric Alexander polynomial sum a_j t^j the
 * torsion coefficients
 *
 *     V_k = t_k = sum_{j >= 1} j * a_{k+j},   0 <= k <= g,
 *
 * satisfy V_k >= V_{k+1} >= V_k - 1 and V_g = 0, with H_k = V_{-k}. The
 * p-surgery correction terms in the sigma labeling are
 *
 *     d(i) = d(Y) + d(L(p,1), i) - 2 max{V_i, V_{p-i}},   0 <= i < p,
 *
 * and the dual-knot bound is the maximum over 0 <= i < p of
 *
 *     (2i + 1 - 2p)/p - 2 max{V_{i+1}, V_{p-1-i}} + 2 max{V_i, V_{p-i}}.
 *
 * The dual knot is a genus minimizer in its class exactly when this maximum
 * equals (2g - 1)/p, which holds for every p >= 2g.
 *
 * The identification V_k = t_k is valid for L-space knots only, so the
 * sequence constructor hard-fails on polynomials without the alternating
 * sign pattern rather than returning unreliable numbers.
 */
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ratgenus/core.hpp"

namespace ratgenus {

/// Symmetric Alexander polynomial with support [-g, g], normalized so that
/// the value at t = 1 is 1.
class AlexanderPoly {
public:
    /// Builds from coefficients in ascending exponent order (exponents
    /// -g..g after trimming outer zeros). Throws PolynomialError if the
    /// trimmed list has even length, is not palindromic, or sums != 1.
    static AlexanderPoly from_coefficients(std::vector<long long> ascending);

    /// Delta(T(a,b)) for coprime a,b >= 2, computed by exact division of
    /// t^{ab+1} - t^{ab} - t + 1 by t^{a+b} - t^a - t^b + 1 and recentering;
    /// genus (a-1)(b-1)/2. Throws NonCoprimeError when gcd(a,b) != 1.
    static AlexanderPoly torus_knot(long long a, long long b);

    static AlexanderPoly unknot() { return from_coefficients({1}); }

    /// Parses "c_{-g},...,c_g" (comma-separated integers, ascending exponent).
    static AlexanderPoly parse(std::string_view text);

    long long genus() const { return (static_cast<long long>(coeffs_.size()) - 1) / 2; }
    long long coeff(long long exponent) const;
    const std::vector<long long>& ascending_coeffs() const { return coeffs_; }

    /// Nonzero coefficients alternate in sign and the top one is +1.
    bool is_lspace_pattern() const;

    std::string to_string() const;

private:
    std::vector<long long> coeffs_;  // index 0 <-> exponent -genus
};

/// V_0 >= V_1 >= ... >= V_g = 0 with unit steps; entries beyond g are zero.
struct VSequence {
    std::vector<long long> values;  // V_0..V_g, size genus+1

    long long genus() const { return static_cast<long long>(values.size()) - 1; }
    long long at(long long k) const;  // k >= 0; 0 beyond the stored range
};

/// Convenience wrapper around AlexanderPoly::torus_knot.
AlexanderPoly torus_knot_alexander(long long a, long long b);

/// Torsion coefficients of an L-space-knot polynomial. Throws
/// NotLSpacePatternError if the alternation test fails, and
/// InvariantViolationError if the computed sequence breaks the V-sequence
/// laws (which would mean the input was not an L-space knot after all).
VSequence torsion_coefficients(const AlexanderPoly& poly);

/// Correction terms of p-surgery in the "surgery-sigma" labeling;
/// d_ambient is d(Y) of the ambient homology sphere (0 for S^3).
CorrectionTerms surgery_d(long long p, const VSequence& v,
                          const Rational& d_ambient = Rational(0));

/// The raw (unclamped) lower bound on Theta of the surgery-dual class.
Rational dual_theta_bound(long long p, const VSequence& v);

/// True iff the dual bound equals (2g - 1)/p exactly, i.e. the dual knot is
/// certified as a genus minimizer in its homology class.
bool is_dual_genus_minimizer(const AlexanderPoly& poly, long long p);

}  // namespace ratgenus
