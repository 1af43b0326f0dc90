#include "ratgenus/surgery.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "ratgenus/lensd.hpp"

namespace ratgenus {

namespace {
using i64 = long long;
}

AlexanderPoly AlexanderPoly::from_coefficients(std::vector<long long> ascending) {
    size_t lo = 0, hi = ascending.size();
    while (lo < hi && ascending[lo] == 0) ++lo;
    while (hi > lo && ascending[hi - 1] == 0) --hi;
    std::vector<i64> c(ascending.begin() + static_cast<long>(lo),
                       ascending.begin() + static_cast<long>(hi));
    if (c.empty()) throw PolynomialError("Alexander polynomial: all coefficients are zero");
    if (c.size() % 2 == 0)
        throw PolynomialError("Alexander polynomial: support is not symmetric (even coefficient count)");
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != c[c.size() - 1 - i])
            throw PolynomialError("Alexander polynomial: coefficients are not palindromic");
    i64 at_one = 0;
    for (i64 v : c) at_one += v;
    if (at_one != 1)
        throw PolynomialError("Alexander polynomial: value at t=1 is " + std::to_string(at_one) +
                              ", expected 1");
    AlexanderPoly poly;
    poly.coeffs_ = std::move(c);
    return poly;
}

AlexanderPoly AlexanderPoly::torus_knot(long long a, long long b) {
    if (a < 2 || b < 2)
        throw DomainError("torus knot parameters must be >= 2, got T(" + std::to_string(a) +
                          "," + std::to_string(b) + ")");
    if (std::gcd(a, b) != 1)
        throw NonCoprimeError("T(" + std::to_string(a) + "," + std::to_string(b) +
                              "): parameters are not coprime");
    // numerator (t^{ab} - 1)(t - 1), denominator (t^a - 1)(t^b - 1)
    std::vector<i64> num(static_cast<size_t>(a * b + 2), 0);
    num[static_cast<size_t>(a * b + 1)] = 1;
    num[static_cast<size_t>(a * b)] = -1;
    num[1] = -1;
    num[0] = 1;
    std::vector<i64> den(static_cast<size_t>(a + b + 1), 0);
    den[static_cast<size_t>(a + b)] = 1;
    den[static_cast<size_t>(a)] -= 1;
    den[static_cast<size_t>(b)] -= 1;
    den[0] += 1;
    // exact long division from the top
    const size_t dd = den.size() - 1;
    std::vector<i64> quot(num.size() - dd, 0);
    for (size_t i = num.size(); i-- > dd;) {
        i64 c = num[i];
        if (c == 0) continue;
        quot[i - dd] = c;
        for (size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (i64 v : num)
        if (v != 0) throw InvariantViolationError("torus knot polynomial division left a remainder");
    return from_coefficients(std::move(quot));
}

AlexanderPoly AlexanderPoly::parse(std::string_view text) {
    std::vector<i64> coeffs;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                                : comma - pos);
        while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
        while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
        i64 value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument("invalid Alexander coefficient: '" + std::string(tok) + "'");
        coeffs.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return from_coefficients(std::move(coeffs));
}

long long AlexanderPoly::coeff(long long exponent) const {
    i64 g = genus();
    if (exponent < -g || exponent > g) return 0;
    return coeffs_[static_cast<size_t>(exponent + g)];
}

bool AlexanderPoly::is_lspace_pattern() const {
    std::vector<i64> nonzero;
    for (i64 v : coeffs_)
        if (v != 0) nonzero.push_back(v);
    if (nonzero.back() != 1) return false;
    for (size_t i = 0; i + 1 < nonzero.size(); ++i)
        if ((nonzero[i] > 0) == (nonzero[i + 1] > 0)) return false;
    return true;
}

std::string AlexanderPoly::to_string() const {
    std::string out;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(coeffs_[i]);
    }
    return out;
}

long long VSequence::at(long long k) const {
    if (k < 0) throw std::logic_error("VSequence: negative index; read H_k as V_{-k}");
    if (k >= static_cast<i64>(values.size())) return 0;
    return values[static_cast<size_t>(k)];
}

AlexanderPoly torus_knot_alexander(long long a, long long b) {
    return AlexanderPoly::torus_knot(a, b);
}

VSequence torsion_coefficients(const AlexanderPoly& poly) {
    if (!poly.is_lspace_pattern())
        throw NotLSpacePatternError(
            "torsion_coefficients: coefficients do not alternate with top +1 "
            "(not an L-space knot pattern): " + poly.to_string());
    const i64 g = poly.genus();
    VSequence v;
    v.values.resize(static_cast<size_t>(g + 1));
    for (i64 k = 0; k <= g; ++k) {
        i64 t = 0;
        for (i64 j = 1; k + j <= g; ++j) t += j * poly.coeff(k + j);
        v.values[static_cast<size_t>(k)] = t;
    }
    if (v.values.back() != 0)
        throw InvariantViolationError("V_g != 0 for " + poly.to_string());
    for (i64 k = 0; k <= g; ++k) {
        i64 cur = v.values[static_cast<size_t>(k)];
        i64 next = v.at(k + 1);
        if (cur < 0 || next > cur || next < cur - 1)
            throw InvariantViolationError("V-sequence laws violated at k=" + std::to_string(k) +
                                          " for " + poly.to_string());
    }
    return v;
}

CorrectionTerms surgery_d(long long p, const VSequence& v, const Rational& d_ambient) {
    if (p <= 0) throw InvalidOrderError("surgery_d: p must be positive");
    CorrectionTerms out;
    out.p = p;
    out.convention = LabelConvention::surgery_sigma;
    out.values.reserve(static_cast<size_t>(p));
    for (i64 i = 0; i < p; ++i) {
        i64 correction = std::max(v.at(i), v.at(p - i));  // max{V_i, H_{i-p}}
        out.values.push_back(d_ambient + d_closed_form_p1(p, i) - Rational(2 * correction));
    }
    return out;
}

Rational dual_theta_bound(long long p, const VSequence& v) {
    if (p <= 0) throw InvalidOrderError("dual_theta_bound: p must be positive");
    bool first = true;
    Rational best;
    for (i64 i = 0; i < p; ++i) {
        Rational term = Rational(2 * i + 1 - 2 * p, p) -
                        Rational(2 * std::max(v.at(i + 1), v.at(p - 1 - i))) +
                        Rational(2 * std::max(v.at(i), v.at(p - i)));
        if (first || term > best) {
            best = term;
            first = false;
        }
    }
    return best;
}

bool is_dual_genus_minimizer(const AlexanderPoly& poly, long long p) {
    if (p <= 0) throw InvalidOrderError("is_dual_genus_minimizer: p must be positive");
    VSequence v = torsion_coefficients(poly);
    return dual_theta_bound(p, v) == Rational(2 * poly.genus() - 1, p);
}

}  // namespace ratgenus
