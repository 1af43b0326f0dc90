/**
 * @file theta.hpp
 * @brief Rational-genus lower bounds from correction-term differences, and
 *        exact invariants of simple knots in lens spaces.
 *
 * For a class k acting on labels by translation, the engine computes
 *
 *     raw_bound = max_s { d(s + k) - d(s) } - 1,    theta_lb = max(raw_bound, 0)
 *
 * together with the argmax label set. theta_lb bounds Theta(k) from below
 * for any table. On a lens space the simple knot in class k realizes the
 * bound: with m = order_of(k) the Euler characteristic of a minimizing
 * surface is chi = m * (1 - (raw_bound + 1)), which must be an integer
 * (a non-integer chi means the label/action convention is broken, reported
 * as LabelingInconsistencyError, never silently remapped), the rational
 * norm is max(0, -chi) / (2m), and the knot is rationally fibered exactly
 * when the maximizer is unique.
 */
#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "ratgenus/core.hpp"
#include "ratgenus/lensd.hpp"

namespace ratgenus {

struct ThetaReport {
    Rational raw_bound;                    // max_s{d(s+k)-d(s)} - 1, unclamped
    Rational theta_lb;                     // max(raw_bound, 0)
    bool exact = false;                    // true on the simple-knot path
    bool degenerate = false;               // k == 0 on the simple-knot path
    long long order_m = 1;                 // order of the class in Z/p
    std::optional<long long> chi;          // reconstructed Euler characteristic
    std::optional<Rational> rational_norm; // ||K|| of the simple knot
    std::optional<bool> fibered;
    std::vector<long long> maximizers;     // argmax labels, ascending
};

/// Difference-maximization engine over one correction-term table. Scales the
/// table to a common 64-bit denominator when possible so that per-class
/// scans are integer arithmetic; otherwise falls back to exact rationals.
class ThetaEngine {
public:
    explicit ThetaEngine(const CorrectionTerms& table);
    explicit ThetaEngine(std::shared_ptr<const ScaledDTable> table);

    long long p() const { return p_; }

    struct ClassBound {
        Rational max_diff;                  // max_s { d(s+k) - d(s) }
        std::vector<long long> maximizers;  // ascending
    };
    ClassBound class_bound(long long k) const;

private:
    long long p_ = 1;
    bool compact_ = false;
    long long denom_ = 1;
    std::vector<long long> nums_;
    std::vector<Rational> vals_;
    std::shared_ptr<const ScaledDTable> keep_;
};

/// The translation-action lower bound on a correction-term table; exact =
/// false, chi / rational_norm / fibered absent.
ThetaReport theta_lower_bound(const CorrectionTerms& d, HomologyClass a);

/// Exact rational genus data of the simple knot in class a of L. class_unit
/// is the translation amount per unit of homology class (a configuration
/// point for label conventions where the identity assignment is wrong; must
/// be coprime to p). The zero class is reported as the degenerate disk case.
ThetaReport simple_knot_invariants(const LensSpaceId& L, HomologyClass a,
                                   long long class_unit = 1);

/// Batch variant evaluating against a prebuilt engine for the same space.
ThetaReport simple_knot_invariants(const ThetaEngine& engine, HomologyClass a,
                                   long long class_unit = 1);

/// True iff the bound for class a is attained at exactly one Spin^c label.
/// Throws DegenerateClassError for the zero class.
bool is_fibered_simple(const LensSpaceId& L, HomologyClass a);

}  // namespace ratgenus
