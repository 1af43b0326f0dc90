/**
 * @file atlas.hpp
 * @brief Batch generation of simple-knot genus data over all lens spaces
 *        L(p,q) with p <= p_max, and bit-exact JSON/CSV serialization.
 *
 * One record per (p,q,k), sorted lexicographically; output bytes are
 * identical across runs and worker counts. Rationals serialize as "num/den"
 * strings, CSV uses the fixed header
 *
 *     p,q,k,order,theta_lb,raw_bound,exact,chi,rational_norm,fibered,maximizers
 *
 * with empty cells for absent optionals and ';'-joined maximizer labels.
 * Newlines are LF, encoding UTF-8.
 */
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ratgenus/theta.hpp"

namespace ratgenus {

enum class AtlasFormat { json, csv };

struct AtlasRecord {
    long long p = 0;
    long long q = 0;
    long long k = 0;
    long long order_m = 1;
    Rational theta_lb;
    Rational raw_bound;
    bool exact = true;
    std::optional<long long> chi;
    std::optional<Rational> rational_norm;
    std::optional<bool> fibered;
    std::vector<long long> maximizers;

    friend bool operator==(const AtlasRecord&, const AtlasRecord&) = default;
};

AtlasRecord make_atlas_record(long long p, long long q, long long k, const ThetaReport& report);

/// All records for 2 <= p <= p_max, coprime 1 <= q < p, 0 <= k < p, in
/// (p,q,k) order. Content is independent of the worker count.
std::vector<AtlasRecord> generate_atlas(long long p_max, int jobs = 1);

/// Serializes records; JSON yields one object
/// {"schema":"ratgenus-atlas-v1","records":[...]} and both formats end with
/// a trailing LF.
std::string emit_records(const std::vector<AtlasRecord>& records, AtlasFormat format);

/// Inverse of emit_records. Throws std::invalid_argument on malformed input.
std::vector<AtlasRecord> parse_records(std::string_view bytes, AtlasFormat format);

/// Streaming equivalent of emit_records(generate_atlas(...)): produces the
/// same bytes without materializing all records, computing (p,q) pairs on
/// `jobs` workers and draining chunks to the sink in order.
void write_atlas(long long p_max, AtlasFormat format, int jobs,
                 const std::function<void(std::string_view)>& sink);

}  // namespace ratgenus
