#include "ratgenus/theta.hpp"

#include <limits>
#include <numeric>
#include <string>
#include <utility>

namespace ratgenus {

namespace {
using i64 = long long;
using i128 = __int128;

constexpr i64 kScaleLimit = std::numeric_limits<i64>::max() / 4;
}  // namespace

ThetaEngine::ThetaEngine(std::shared_ptr<const ScaledDTable> table)
    : p_(table->p), compact_(true), denom_(table->denom), keep_(std::move(table)) {
    nums_ = keep_->nums;
}

ThetaEngine::ThetaEngine(const CorrectionTerms& table) : p_(table.p) {
    if (p_ < 1 || static_cast<size_t>(p_) != table.values.size())
        throw InvariantViolationError("correction-term table has " +
                                      std::to_string(table.values.size()) + " entries for p=" +
                                      std::to_string(p_));
    // common denominator of all entries; entries are in lowest terms so the
    // lcm of denominators is exact
    BigInt lcm(1);
    for (const auto& v : table.values) {
        BigInt g = BigInt::gcd(lcm, v.den());
        lcm = (lcm / g) * v.den();
    }
    bool fits = lcm.fits_int64() && lcm.to_int64() <= kScaleLimit;
    if (fits) {
        denom_ = lcm.to_int64();
        nums_.reserve(table.values.size());
        for (const auto& v : table.values) {
            BigInt scaled = v.num() * (lcm / v.den());
            if (!scaled.fits_int64() || scaled.to_int64() > kScaleLimit ||
                scaled.to_int64() < -kScaleLimit) {
                fits = false;
                break;
            }
            nums_.push_back(scaled.to_int64());
        }
    }
    compact_ = fits;
    if (!compact_) {
        nums_.clear();
        denom_ = 1;
        vals_ = table.values;
    }
}

ThetaEngine::ClassBound ThetaEngine::class_bound(long long k) const {
    const i64 p = p_;
    const i64 kr = mod_reduce(k, p);
    ClassBound out;
    if (compact_) {
        i64 best = std::numeric_limits<i64>::min();
        for (i64 s = 0; s < p; ++s) {
            i64 diff = nums_[static_cast<size_t>((s + kr) % p)] - nums_[static_cast<size_t>(s)];
            if (diff > best) {
                best = diff;
                out.maximizers.clear();
                out.maximizers.push_back(s);
            } else if (diff == best) {
                out.maximizers.push_back(s);
            }
        }
        out.max_diff = Rational(best, denom_);
    } else {
        bool first = true;
        Rational best;
        for (i64 s = 0; s < p; ++s) {
            Rational diff = vals_[static_cast<size_t>((s + kr) % p)] - vals_[static_cast<size_t>(s)];
            if (first || diff > best) {
                best = diff;
                first = false;
                out.maximizers.clear();
                out.maximizers.push_back(s);
            } else if (diff == best) {
                out.maximizers.push_back(s);
            }
        }
        out.max_diff = best;
    }
    return out;
}

namespace {

ThetaReport bound_report(const ThetaEngine& engine, i64 kr) {
    ThetaReport rep;
    auto bound = engine.class_bound(kr);
    rep.raw_bound = bound.max_diff - Rational(1);
    rep.theta_lb = rep.raw_bound.is_negative() ? Rational(0) : rep.raw_bound;
    rep.order_m = order_of(HomologyClass{kr}, engine.p());
    rep.maximizers = std::move(bound.maximizers);
    return rep;
}

ThetaReport simple_report(const ThetaEngine& engine, i64 k, i64 class_unit) {
    const i64 p = engine.p();
    const i64 kr = mod_reduce(k, p);
    if (std::gcd(mod_reduce(class_unit, p), p) != 1)
        throw DomainError("simple_knot_invariants: class_unit must be a unit mod p");
    ThetaReport rep = bound_report(engine, mod_reduce(kr * class_unit, p));
    const i64 m = order_of(HomologyClass{kr}, p);
    rep.order_m = m;
    rep.exact = true;
    // chi = m * (1 - (raw_bound + 1)); Euler characteristic of the
    // genus-minimizing rational Seifert surface, necessarily an integer
    Rational chi_rat = Rational(m) * (Rational(0) - rep.raw_bound);
    if (!chi_rat.is_integer())
        throw LabelingInconsistencyError(
            "simple knot chi is not an integer for p=" + std::to_string(p) +
            " k=" + std::to_string(kr) + ": m*(1-RHS) = " + chi_rat.to_string());
    if (!chi_rat.num().fits_int64())
        throw InvariantViolationError("simple knot chi out of range for p=" + std::to_string(p));
    const i64 chi = chi_rat.num().to_int64();
    rep.chi = chi;
    rep.rational_norm = Rational(chi < 0 ? -chi : 0, 2 * m);
    if (kr == 0)
        rep.degenerate = true;  // unknot in a ball; fiberedness criterion not applicable
    else
        rep.fibered = rep.maximizers.size() == 1;
    return rep;
}

}  // namespace

ThetaReport theta_lower_bound(const CorrectionTerms& d, HomologyClass a) {
    ThetaEngine engine(d);
    return bound_report(engine, mod_reduce(a.k, d.p));
}

ThetaReport simple_knot_invariants(const LensSpaceId& L, HomologyClass a, long long class_unit) {
    LensSpaceId n = normalize_lens(L.p, L.q);
    if (auto t = scaled_d_table(n.p, n.q)) {
        ThetaEngine engine(std::move(t));
        return simple_report(engine, a.k, class_unit);
    }
    ThetaEngine engine(d_all(n));
    return simple_report(engine, a.k, class_unit);
}

ThetaReport simple_knot_invariants(const ThetaEngine& engine, HomologyClass a, long long class_unit) {
    return simple_report(engine, a.k, class_unit);
}

bool is_fibered_simple(const LensSpaceId& L, HomologyClass a) {
    LensSpaceId n = normalize_lens(L.p, L.q);
    if (mod_reduce(a.k, n.p) == 0)
        throw DegenerateClassError("is_fibered_simple: the zero class is degenerate");
    ThetaEngine engine(d_all(n));
    return engine.class_bound(a.k).maximizers.size() == 1;
}

}  // namespace ratgenus
