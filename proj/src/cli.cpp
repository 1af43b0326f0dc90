#include "ratgenus/cli.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "ratgenus/atlas.hpp"
#include "ratgenus/lensd.hpp"
#include "ratgenus/oracle.hpp"
#include "ratgenus/surgery.hpp"
#include "ratgenus/theta.hpp"

namespace ratgenus {

namespace {

using i64 = long long;
using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr const char* kUsage =
    "usage: ratgenus <command> [args]\n"
    "\n"
    "commands:\n"
    "  dinv <p> <q>                     correction terms d(L(p,q), i) for all i\n"
    "  theta <p> <q> <k>                lower bound for Theta of class k in L(p,q)\n"
    "  simple <p> <q> <k>               exact simple-knot genus report for class k\n"
    "  surgery (--knot T(a,b) | --alex c,...,c) --p N\n"
    "                                   p-surgery d-table, dual-knot bound, minimizer verdict\n"
    "  atlas --pmax N [--out PATH] [--format json|csv] [--jobs J]\n"
    "                                   records for every L(p,q), p <= N, every class\n"
    "  verify --pmax N                  run the verification suite up to p = N\n";

i64 parse_i64(std::string_view s, const char* what) {
    i64 v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw UsageError(std::string("expected an integer for ") + what + ", got '" +
                         std::string(s) + "'");
    return v;
}

// flags of the form --name value; no combined or repeated flags
std::map<std::string, std::string> parse_flags(const std::vector<std::string>& args, size_t from) {
    std::map<std::string, std::string> flags;
    for (size_t i = from; i < args.size(); i += 2) {
        const std::string& name = args[i];
        if (name.size() < 3 || name.substr(0, 2) != "--")
            throw UsageError("unexpected argument '" + name + "'");
        if (i + 1 >= args.size()) throw UsageError("flag " + name + " needs a value");
        if (!flags.emplace(name.substr(2), args[i + 1]).second)
            throw UsageError("flag " + name + " given twice");
    }
    return flags;
}

std::optional<std::pair<i64, i64>> parse_torus_spec(std::string_view s) {
    if (s.size() < 6 || (s[0] != 'T' && s[0] != 't') || s[1] != '(' || s.back() != ')')
        return std::nullopt;
    std::string_view inner = s.substr(2, s.size() - 3);
    size_t comma = inner.find(',');
    if (comma == std::string_view::npos) return std::nullopt;
    i64 a = 0, b = 0;
    auto [p1, e1] = std::from_chars(inner.data(), inner.data() + comma, a);
    auto [p2, e2] = std::from_chars(inner.data() + comma + 1, inner.data() + inner.size(), b);
    if (e1 != std::errc() || p1 != inner.data() + comma || e2 != std::errc() ||
        p2 != inner.data() + inner.size())
        return std::nullopt;
    return std::make_pair(a, b);
}

json report_to_json(i64 p, i64 q, i64 k, const ThetaReport& rep, bool include_exact_fields) {
    json j;
    j["p"] = p;
    j["q"] = q;
    j["k"] = k;
    j["order"] = rep.order_m;
    j["raw_bound"] = rep.raw_bound.to_string();
    j["theta_lb"] = rep.theta_lb.to_string();
    j["exact"] = rep.exact;
    if (include_exact_fields) {
        if (rep.chi) j["chi"] = *rep.chi;
        if (rep.rational_norm) j["rational_norm"] = rep.rational_norm->to_string();
        if (rep.fibered) j["fibered"] = *rep.fibered;
        if (rep.degenerate) j["degenerate"] = true;
    }
    j["maximizers"] = rep.maximizers;
    return j;
}

int cmd_dinv(const std::vector<std::string>& args, std::ostream& out) {
    if (args.size() != 3) throw UsageError("dinv expects: dinv <p> <q>");
    LensSpaceId L = normalize_lens(parse_i64(args[1], "p"), parse_i64(args[2], "q"));
    CorrectionTerms table = d_all(L);
    json j;
    j["p"] = L.p;
    j["q"] = L.q;
    json d = json::array();
    for (const auto& v : table.values) d.push_back(v.to_string());
    j["d"] = d;
    out << j.dump() << "\n";
    return 0;
}

int cmd_theta(const std::vector<std::string>& args, std::ostream& out) {
    if (args.size() != 4) throw UsageError("theta expects: theta <p> <q> <k>");
    LensSpaceId L = normalize_lens(parse_i64(args[1], "p"), parse_i64(args[2], "q"));
    i64 k = mod_reduce(parse_i64(args[3], "k"), L.p);
    ThetaReport rep = theta_lower_bound(d_all(L), {k});
    out << report_to_json(L.p, L.q, k, rep, false).dump() << "\n";
    return 0;
}

int cmd_simple(const std::vector<std::string>& args, std::ostream& out) {
    if (args.size() != 4) throw UsageError("simple expects: simple <p> <q> <k>");
    LensSpaceId L = normalize_lens(parse_i64(args[1], "p"), parse_i64(args[2], "q"));
    i64 k = mod_reduce(parse_i64(args[3], "k"), L.p);
    ThetaReport rep = simple_knot_invariants(L, {k});
    out << report_to_json(L.p, L.q, k, rep, true).dump() << "\n";
    return 0;
}

int cmd_surgery(const std::vector<std::string>& args, std::ostream& out) {
    auto flags = parse_flags(args, 1);
    auto knot_it = flags.find("knot");
    auto alex_it = flags.find("alex");
    auto p_it = flags.find("p");
    if (p_it == flags.end()) throw UsageError("surgery needs --p N");
    if ((knot_it == flags.end()) == (alex_it == flags.end()))
        throw UsageError("surgery needs exactly one of --knot T(a,b) or --alex c,...,c");
    i64 p = parse_i64(p_it->second, "--p");

    AlexanderPoly poly = AlexanderPoly::unknot();
    std::string name;
    if (knot_it != flags.end()) {
        auto spec = parse_torus_spec(knot_it->second);
        if (!spec) throw UsageError("--knot expects the form T(a,b)");
        poly = AlexanderPoly::torus_knot(spec->first, spec->second);
        name = "T(" + std::to_string(spec->first) + "," + std::to_string(spec->second) + ")";
    } else {
        try {
            poly = AlexanderPoly::parse(alex_it->second);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        name = "alex(" + poly.to_string() + ")";
    }

    VSequence v = torsion_coefficients(poly);
    CorrectionTerms table = surgery_d(p, v);
    Rational bound = dual_theta_bound(p, v);
    Rational target(2 * poly.genus() - 1, p);

    json j;
    j["knot"] = name;
    j["alexander"] = poly.ascending_coeffs();
    j["genus"] = poly.genus();
    j["V"] = v.values;
    j["p"] = p;
    json d = json::array();
    for (const auto& val : table.values) d.push_back(val.to_string());
    j["d"] = d;
    j["dual_theta_bound"] = bound.to_string();
    j["theta_upper_bound"] = target.to_string();
    j["is_genus_minimizer"] = (bound == target);
    out << j.dump() << "\n";
    return 0;
}

int cmd_atlas(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    auto flags = parse_flags(args, 1);
    auto pmax_it = flags.find("pmax");
    if (pmax_it == flags.end()) throw UsageError("atlas needs --pmax N");
    i64 p_max = parse_i64(pmax_it->second, "--pmax");
    AtlasFormat format = AtlasFormat::json;
    if (auto it = flags.find("format"); it != flags.end()) {
        if (it->second == "json")
            format = AtlasFormat::json;
        else if (it->second == "csv")
            format = AtlasFormat::csv;
        else
            throw UsageError("--format must be json or csv");
    }
    int jobs = 0;
    if (auto it = flags.find("jobs"); it != flags.end()) {
        jobs = static_cast<int>(parse_i64(it->second, "--jobs"));
        if (jobs < 1) throw UsageError("--jobs must be >= 1");
    }
    for (const auto& [name, value] : flags)
        if (name != "pmax" && name != "out" && name != "format" && name != "jobs")
            throw UsageError("unknown flag --" + name);

    if (auto it = flags.find("out"); it != flags.end()) {
        std::ofstream file(it->second, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << it->second << " for writing\n";
            return 1;
        }
        write_atlas(p_max, format, jobs, [&](std::string_view chunk) {
            file.write(chunk.data(), static_cast<std::streamsize>(chunk.size()));
        });
        if (!file) {
            err << "error: write failed for " << it->second << "\n";
            return 1;
        }
        return 0;
    }
    write_atlas(p_max, format, jobs, [&](std::string_view chunk) { out << chunk; });
    return 0;
}

int cmd_verify(const std::vector<std::string>& args, std::ostream& out) {
    auto flags = parse_flags(args, 1);
    auto pmax_it = flags.find("pmax");
    if (pmax_it == flags.end()) throw UsageError("verify needs --pmax N");
    i64 p_max = parse_i64(pmax_it->second, "--pmax");
    if (p_max < 1) throw UsageError("--pmax must be >= 1");
    for (const auto& [name, value] : flags)
        if (name != "pmax") throw UsageError("unknown flag --" + name);

    auto reports = verify_all(p_max);
    bool ok = true;
    json j;
    j["schema"] = "ratgenus-verify-v1";
    j["pmax"] = p_max;
    json checks = json::array();
    for (const auto& rep : reports) {
        ok = ok && rep.ok();
        json c;
        c["name"] = rep.name;
        c["cases"] = rep.cases;
        json failures = json::array();
        for (const auto& f : rep.failures) {
            json fj;
            fj["p"] = f.p;
            fj["q"] = f.q;
            if (f.i >= 0) fj["i"] = f.i;
            fj["detail"] = f.detail;
            failures.push_back(fj);
        }
        c["failures"] = failures;
        checks.push_back(c);
    }
    j["ok"] = ok;
    j["checks"] = checks;
    out << j.dump() << "\n";
    return ok ? 0 : 2;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        if (args.empty()) {
            err << kUsage;
            return 64;
        }
        if (args[0] == "help" || args[0] == "--help" || args[0] == "-h") {
            out << kUsage;
            return 0;
        }
        const std::string& cmd = args[0];
        if (cmd == "dinv") return cmd_dinv(args, out);
        if (cmd == "theta") return cmd_theta(args, out);
        if (cmd == "simple") return cmd_simple(args, out);
        if (cmd == "surgery") return cmd_surgery(args, out);
        if (cmd == "atlas") return cmd_atlas(args, out, err);
        if (cmd == "verify") return cmd_verify(args, out);
        throw UsageError("unknown command '" + cmd + "'");
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n" << kUsage;
        return 64;
    } catch (const InternalInvariantError& e) {
        err << "internal invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace ratgenus
