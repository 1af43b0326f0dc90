#include "ratgenus/atlas.hpp"

#include <atomic>
#include <charconv>
#include <condition_variable>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace ratgenus {

namespace {

using i64 = long long;

constexpr std::string_view kCsvHeader =
    "p,q,k,order,theta_lb,raw_bound,exact,chi,rational_norm,fibered,maximizers\n";
constexpr std::string_view kJsonHead = "{\"schema\":\"ratgenus-atlas-v1\",\"records\":[";
constexpr std::string_view kJsonTail = "]}\n";

void append_int(std::string& out, i64 v) {
    char buf[24];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, ptr);
}

void append_record_json(std::string& out, const AtlasRecord& r) {
    out += "{\"p\":";
    append_int(out, r.p);
    out += ",\"q\":";
    append_int(out, r.q);
    out += ",\"k\":";
    append_int(out, r.k);
    out += ",\"order\":";
    append_int(out, r.order_m);
    out += ",\"theta_lb\":\"";
    out += r.theta_lb.to_string();
    out += "\",\"raw_bound\":\"";
    out += r.raw_bound.to_string();
    out += "\",\"exact\":";
    out += r.exact ? "true" : "false";
    if (r.chi) {
        out += ",\"chi\":";
        append_int(out, *r.chi);
    }
    if (r.rational_norm) {
        out += ",\"rational_norm\":\"";
        out += r.rational_norm->to_string();
        out += "\"";
    }
    if (r.fibered) {
        out += ",\"fibered\":";
        out += *r.fibered ? "true" : "false";
    }
    out += ",\"maximizers\":[";
    for (size_t i = 0; i < r.maximizers.size(); ++i) {
        if (i) out += ",";
        append_int(out, r.maximizers[i]);
    }
    out += "]}";
}

void append_record_csv(std::string& out, const AtlasRecord& r) {
    append_int(out, r.p);
    out += ',';
    append_int(out, r.q);
    out += ',';
    append_int(out, r.k);
    out += ',';
    append_int(out, r.order_m);
    out += ',';
    out += r.theta_lb.to_string();
    out += ',';
    out += r.raw_bound.to_string();
    out += ',';
    out += r.exact ? "true" : "false";
    out += ',';
    if (r.chi) append_int(out, *r.chi);
    out += ',';
    if (r.rational_norm) out += r.rational_norm->to_string();
    out += ',';
    if (r.fibered) out += *r.fibered ? "true" : "false";
    out += ',';
    for (size_t i = 0; i < r.maximizers.size(); ++i) {
        if (i) out += ';';
        append_int(out, r.maximizers[i]);
    }
    out += '\n';
}

std::vector<std::pair<i64, i64>> coprime_pairs(i64 p_max) {
    std::vector<std::pair<i64, i64>> pairs;
    for (i64 p = 2; p <= p_max; ++p)
        for (i64 q = 1; q < p; ++q)
            if (std::gcd(p, q) == 1) pairs.emplace_back(p, q);
    return pairs;
}

std::vector<AtlasRecord> records_for_pair(i64 p, i64 q) {
    std::vector<AtlasRecord> out;
    out.reserve(static_cast<size_t>(p));
    auto scaled = scaled_d_table(p, q);
    if (scaled) {
        ThetaEngine engine(scaled);
        for (i64 k = 0; k < p; ++k)
            out.push_back(make_atlas_record(p, q, k, simple_knot_invariants(engine, {k})));
    } else {
        ThetaEngine engine(d_all({p, q}));
        for (i64 k = 0; k < p; ++k)
            out.push_back(make_atlas_record(p, q, k, simple_knot_invariants(engine, {k})));
    }
    return out;
}

// chunk of serialized records for one (p,q); lead_comma joins JSON records
// across chunk boundaries
std::string format_pair_chunk(i64 p, i64 q, AtlasFormat format, bool lead_comma) {
    std::string out;
    for (const AtlasRecord& rec : records_for_pair(p, q)) {
        if (format == AtlasFormat::json) {
            if (lead_comma) out += ',';
            lead_comma = true;
            append_record_json(out, rec);
        } else {
            append_record_csv(out, rec);
        }
    }
    return out;
}

int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

}  // namespace

AtlasRecord make_atlas_record(long long p, long long q, long long k, const ThetaReport& report) {
    AtlasRecord rec;
    rec.p = p;
    rec.q = q;
    rec.k = k;
    rec.order_m = report.order_m;
    rec.theta_lb = report.theta_lb;
    rec.raw_bound = report.raw_bound;
    rec.exact = report.exact;
    rec.chi = report.chi;
    rec.rational_norm = report.rational_norm;
    rec.fibered = report.fibered;
    rec.maximizers = report.maximizers;
    return rec;
}

std::vector<AtlasRecord> generate_atlas(long long p_max, int jobs) {
    if (p_max < 2) throw InvalidOrderError("generate_atlas: p_max must be >= 2");
    auto pairs = coprime_pairs(p_max);
    std::vector<std::vector<AtlasRecord>> slots(pairs.size());
    jobs = resolve_jobs(jobs);
    if (jobs <= 1 || pairs.size() < 2) {
        for (size_t i = 0; i < pairs.size(); ++i)
            slots[i] = records_for_pair(pairs[i].first, pairs[i].second);
    } else {
        std::atomic<size_t> next{0};
        std::atomic<bool> stop{false};
        std::mutex error_mu;
        std::exception_ptr error;
        auto work = [&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= pairs.size() || stop.load()) return;
                try {
                    slots[i] = records_for_pair(pairs[i].first, pairs[i].second);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!error) error = std::current_exception();
                    stop.store(true);
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
        if (error) std::rethrow_exception(error);
    }
    std::vector<AtlasRecord> out;
    size_t total = 0;
    for (const auto& s : slots) total += s.size();
    out.reserve(total);
    for (auto& s : slots)
        out.insert(out.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
    return out;
}

std::string emit_records(const std::vector<AtlasRecord>& records, AtlasFormat format) {
    std::string out;
    if (format == AtlasFormat::json) {
        out += kJsonHead;
        for (size_t i = 0; i < records.size(); ++i) {
            if (i) out += ',';
            append_record_json(out, records[i]);
        }
        out += kJsonTail;
    } else {
        out += kCsvHeader;
        for (const auto& rec : records) append_record_csv(out, rec);
    }
    return out;
}

void write_atlas(long long p_max, AtlasFormat format, int jobs,
                 const std::function<void(std::string_view)>& sink) {
    if (p_max < 2) throw InvalidOrderError("write_atlas: p_max must be >= 2");
    auto pairs = coprime_pairs(p_max);
    jobs = resolve_jobs(jobs);
    sink(format == AtlasFormat::json ? kJsonHead : kCsvHeader);
    if (jobs <= 1 || pairs.size() < 2) {
        for (size_t i = 0; i < pairs.size(); ++i)
            sink(format_pair_chunk(pairs[i].first, pairs[i].second, format, i != 0));
    } else {
        // workers claim pairs in order; chunks drain to the sink in order,
        // with a bounded reorder window so memory stays flat
        const size_t window = static_cast<size_t>(jobs) * 4 + 8;
        std::mutex mu;
        std::condition_variable ready_cv, space_cv;
        std::map<size_t, std::string> ready;
        size_t next_write = 0;
        bool stop = false;
        std::exception_ptr error;
        std::atomic<size_t> next_claim{0};
        auto work = [&] {
            for (;;) {
                size_t i = next_claim.fetch_add(1);
                if (i >= pairs.size()) return;
                {
                    std::unique_lock<std::mutex> lock(mu);
                    space_cv.wait(lock, [&] { return stop || i < next_write + window; });
                    if (stop) return;
                }
                std::string chunk;
                try {
                    chunk = format_pair_chunk(pairs[i].first, pairs[i].second, format, i != 0);
                } catch (...) {
                    {
                        std::lock_guard<std::mutex> lock(mu);
                        if (!error) error = std::current_exception();
                        stop = true;
                    }
                    ready_cv.notify_all();
                    space_cv.notify_all();
                    return;
                }
                {
                    std::lock_guard<std::mutex> lock(mu);
                    ready.emplace(i, std::move(chunk));
                }
                ready_cv.notify_all();
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
        bool aborted = false;
        while (!aborted && next_write < pairs.size()) {
            std::string chunk;
            {
                std::unique_lock<std::mutex> lock(mu);
                ready_cv.wait(lock, [&] { return stop || ready.count(next_write) != 0; });
                auto it = ready.find(next_write);
                if (it == ready.end()) {
                    aborted = true;  // a worker failed before producing this chunk
                } else {
                    chunk = std::move(it->second);
                    ready.erase(it);
                    ++next_write;
                }
            }
            space_cv.notify_all();
            if (!aborted) sink(chunk);
        }
        for (auto& t : pool) t.join();
        if (error) std::rethrow_exception(error);
    }
    if (format == AtlasFormat::json) sink(kJsonTail);
}

namespace {

std::vector<AtlasRecord> parse_records_json(std::string_view bytes) {
    nlohmann::json doc = nlohmann::json::parse(bytes);
    if (!doc.is_object() || doc.value("schema", "") != "ratgenus-atlas-v1")
        throw std::invalid_argument("atlas JSON: missing schema ratgenus-atlas-v1");
    std::vector<AtlasRecord> out;
    for (const auto& j : doc.at("records")) {
        AtlasRecord r;
        r.p = j.at("p").get<i64>();
        r.q = j.at("q").get<i64>();
        r.k = j.at("k").get<i64>();
        r.order_m = j.at("order").get<i64>();
        r.theta_lb = Rational::parse(j.at("theta_lb").get<std::string>());
        r.raw_bound = Rational::parse(j.at("raw_bound").get<std::string>());
        r.exact = j.at("exact").get<bool>();
        if (j.contains("chi")) r.chi = j.at("chi").get<i64>();
        if (j.contains("rational_norm"))
            r.rational_norm = Rational::parse(j.at("rational_norm").get<std::string>());
        if (j.contains("fibered")) r.fibered = j.at("fibered").get<bool>();
        for (const auto& m : j.at("maximizers")) r.maximizers.push_back(m.get<i64>());
        out.push_back(std::move(r));
    }
    return out;
}

i64 parse_int_field(std::string_view s) {
    i64 v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("atlas CSV: bad integer '" + std::string(s) + "'");
    return v;
}

bool parse_bool_field(std::string_view s) {
    if (s == "true") return true;
    if (s == "false") return false;
    throw std::invalid_argument("atlas CSV: bad boolean '" + std::string(s) + "'");
}

std::vector<AtlasRecord> parse_records_csv(std::string_view bytes) {
    std::vector<AtlasRecord> out;
    size_t pos = 0;
    bool header = true;
    while (pos < bytes.size()) {
        size_t eol = bytes.find('\n', pos);
        std::string_view line =
            bytes.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? bytes.size() : eol + 1;
        if (line.empty()) continue;
        if (header) {
            if (line != kCsvHeader.substr(0, kCsvHeader.size() - 1))
                throw std::invalid_argument("atlas CSV: unexpected header");
            header = false;
            continue;
        }
        std::vector<std::string_view> cells;
        size_t cell = 0;
        while (cell <= line.size()) {
            size_t comma = line.find(',', cell);
            cells.push_back(line.substr(
                cell, comma == std::string_view::npos ? std::string_view::npos : comma - cell));
            if (comma == std::string_view::npos) break;
            cell = comma + 1;
        }
        if (cells.size() != 11) throw std::invalid_argument("atlas CSV: expected 11 cells");
        AtlasRecord r;
        r.p = parse_int_field(cells[0]);
        r.q = parse_int_field(cells[1]);
        r.k = parse_int_field(cells[2]);
        r.order_m = parse_int_field(cells[3]);
        r.theta_lb = Rational::parse(cells[4]);
        r.raw_bound = Rational::parse(cells[5]);
        r.exact = parse_bool_field(cells[6]);
        if (!cells[7].empty()) r.chi = parse_int_field(cells[7]);
        if (!cells[8].empty()) r.rational_norm = Rational::parse(cells[8]);
        if (!cells[9].empty()) r.fibered = parse_bool_field(cells[9]);
        std::string_view ms = cells[10];
        size_t mpos = 0;
        while (!ms.empty() && mpos <= ms.size()) {
            size_t semi = ms.find(';', mpos);
            r.maximizers.push_back(parse_int_field(ms.substr(
                mpos, semi == std::string_view::npos ? std::string_view::npos : semi - mpos)));
            if (semi == std::string_view::npos) break;
            mpos = semi + 1;
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

std::vector<AtlasRecord> parse_records(std::string_view bytes, AtlasFormat format) {
    return format == AtlasFormat::json ? parse_records_json(bytes) : parse_records_csv(bytes);
}

}  // namespace ratgenus
