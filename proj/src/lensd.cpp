#include "ratgenus/lensd.hpp"

#include <limits>
#include <map>
#include <mutex>
#include <utility>

namespace ratgenus {

namespace {

using i64 = long long;
using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Scaled-table cache. Lookup is under the mutex; computation happens outside
// it (duplicate computation on a race is idempotent). shared_ptr values keep
// published tables alive for lock-free readers.
std::mutex g_scaled_mutex;
std::map<std::pair<i64, i64>, std::shared_ptr<const ScaledDTable>> g_scaled_cache;

// Rational-table cache for parameters too large for the scaled form.
std::mutex g_exact_mutex;
std::map<std::pair<i64, i64>, std::shared_ptr<const std::vector<Rational>>> g_exact_cache;

constexpr i64 kMaxScaledP = 1'000'000;

std::shared_ptr<const ScaledDTable> compute_scaled(i64 p, i64 q);

std::shared_ptr<const ScaledDTable> scaled_lookup(i64 p, i64 q) {
    {
        std::lock_guard<std::mutex> lock(g_scaled_mutex);
        auto it = g_scaled_cache.find({p, q});
        if (it != g_scaled_cache.end()) return it->second;
    }
    auto table = compute_scaled(p, q);
    if (table) {
        std::lock_guard<std::mutex> lock(g_scaled_mutex);
        auto [it, inserted] = g_scaled_cache.emplace(std::make_pair(p, q), table);
        if (!inserted) return it->second;
    }
    return table;
}

// One recursion level in exact 64/128-bit fraction arithmetic. Every entry
// is reduced and rescaled to the common denominator 4pq; if an entry fails
// to fit (or the denominator fails to divide 4pq, which no tested input
// does) the whole table falls back to big rationals.
std::shared_ptr<const ScaledDTable> compute_scaled(i64 p, i64 q) {
    auto table = std::make_shared<ScaledDTable>();
    table->p = p;
    table->q = q;
    if (p == 1) {
        table->denom = 1;
        table->nums = {0};
        return table;
    }
    auto child = scaled_lookup(q, p % q);
    if (!child) return nullptr;
    if (p > kMaxScaledP) return nullptr;
    const i64 denom = 4 * p * q;
    table->denom = denom;
    table->nums.resize(static_cast<size_t>(p));
    const i64 cd = child->denom;
    for (i64 i = 0; i < p; ++i) {
        const i64 a = 2 * i + 1 - p - q;
        const i64 cnum = a * a - p * q;
        const i64 childnum = child->nums[static_cast<size_t>(i % q)];
        i128 num = static_cast<i128>(cnum) * cd - static_cast<i128>(childnum) * denom;
        i128 den = static_cast<i128>(denom) * cd;
        i128 g = gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (den > denom || denom % static_cast<i64>(den) != 0) return nullptr;
        i128 scaled = num * (denom / static_cast<i64>(den));
        if (scaled > std::numeric_limits<i64>::max() / 4 ||
            scaled < std::numeric_limits<i64>::min() / 4)
            return nullptr;
        table->nums[static_cast<size_t>(i)] = static_cast<i64>(scaled);
    }
    return table;
}

// Reference path: the same recursion over exact big rationals. Used when the
// scaled form is unavailable and as an independent route in tests.
std::shared_ptr<const std::vector<Rational>> exact_table(i64 p, i64 q) {
    {
        std::lock_guard<std::mutex> lock(g_exact_mutex);
        auto it = g_exact_cache.find({p, q});
        if (it != g_exact_cache.end()) return it->second;
    }
    auto values = std::make_shared<std::vector<Rational>>();
    if (p == 1) {
        values->push_back(Rational(0));
    } else {
        auto child = exact_table(q, p % q);
        values->reserve(static_cast<size_t>(p));
        for (i64 i = 0; i < p; ++i) {
            BigInt a(2 * i + 1 - p - q);
            Rational head(a * a - BigInt(p) * BigInt(q), BigInt(4) * BigInt(p) * BigInt(q));
            values->push_back(head - (*child)[static_cast<size_t>(i % q)]);
        }
    }
    std::lock_guard<std::mutex> lock(g_exact_mutex);
    auto [it, inserted] = g_exact_cache.emplace(std::make_pair(p, q), values);
    return it->second;
}

}  // namespace

Rational d_closed_form_p1(long long p, long long i) {
    if (p <= 0) throw InvalidOrderError("d(L(p,1),i): p must be positive");
    long long r = mod_reduce(i, p);
    BigInt t(2 * r - p);
    return Rational(t * t - BigInt(p), BigInt(4) * BigInt(p));
}

std::shared_ptr<const ScaledDTable> scaled_d_table(long long p, long long q) {
    LensSpaceId L = normalize_lens(p, q);
    return scaled_lookup(L.p, L.q);
}

Rational d_lens(const LensSpaceId& L, long long i) {
    LensSpaceId n = normalize_lens(L.p, L.q);
    long long r = mod_reduce(i, n.p);
    if (auto t = scaled_lookup(n.p, n.q))
        return Rational(t->nums[static_cast<size_t>(r)], t->denom);
    return (*exact_table(n.p, n.q))[static_cast<size_t>(r)];
}

CorrectionTerms d_all(const LensSpaceId& L) {
    LensSpaceId n = normalize_lens(L.p, L.q);
    CorrectionTerms out;
    out.p = n.p;
    out.convention = LabelConvention::recursion;
    if (auto t = scaled_lookup(n.p, n.q)) {
        out.values.reserve(static_cast<size_t>(n.p));
        for (long long num : t->nums) out.values.push_back(Rational(num, t->denom));
    } else {
        out.values = *exact_table(n.p, n.q);
    }
    return out;
}

std::vector<Rational> d_table_reference(long long p, long long q) {
    LensSpaceId n = normalize_lens(p, q);
    return *exact_table(n.p, n.q);
}

std::optional<long long> find_conjugation(const CorrectionTerms& table) {
    const long long p = table.p;
    for (long long c = 0; c < p; ++c) {
        bool ok = true;
        for (long long i = 0; i < p && ok; ++i)
            ok = table.values[static_cast<size_t>(i)] ==
                 table.values[static_cast<size_t>(mod_reduce(c - i, p))];
        if (ok) return c;
    }
    return std::nullopt;
}

}  // namespace ratgenus
