#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "mzv/mzv.hpp"
#include "parallel.hpp"

namespace mzv::cli {

namespace {

using Json = nlohmann::ordered_json;

// Thrown for any parameter problem detected after CLI11 parsing; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint32_t parse_uint(const std::string& text, const char* what) {
    std::size_t used = 0;
    unsigned long value = 0;
    try {
        if (text.empty() || text.front() == '-') {
            throw std::invalid_argument(what);
        }
        value = std::stoul(text, &used);
    } catch (const std::logic_error&) {
        throw std::invalid_argument(std::string("malformed ") + what + ": '" + text + "'");
    }
    if (used != text.size() || value > UINT32_MAX) {
        throw std::invalid_argument(std::string("malformed ") + what + ": '" + text + "'");
    }
    return static_cast<std::uint32_t>(value);
}

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

Json word_json(const Word& w) { return Json(w); }

// Coefficient rule off by one everywhere; drives the exit-code-1 path in tests.
BigInt corrupted_coefficient(const IdentityTerm& term) { return identity_coefficient(term) + 1; }

struct CaseResult {
    Json json;
    std::vector<std::string> csv;
    bool equal = false;
};

struct VerifyOptions {
    std::string kind;
    std::string abc = "3,1,2";
    std::string p = "0..2";
    std::string q = "0..2";
    std::string m = "0..10";
    std::string bounds = "4,4";
    std::string format = "json";
    std::uint64_t seed = 20240101;
    std::uint32_t count = 200;
    bool corrupt = false;
};

struct EvalOptions {
    std::string kind;
    std::string abc = "3,1,2";
    std::string index;
    std::uint32_t m = 0;
    std::uint32_t p = 0;
    std::uint32_t q = 0;
    std::uint32_t n = 0;
    std::uint32_t r = 0;
    std::string closed_kind = "s";
};

struct ConvergeOptions {
    std::string abc = "3,1,2";
    std::uint32_t p = 0;
    std::uint32_t q = 0;
    std::string m;
};

AbcParams parse_params(const std::string& text) {
    try {
        return AbcParams::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

Range checked_range(const std::string& text, const char* name) {
    try {
        return parse_range(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--") + name + ": " + e.what());
    }
}

Bounds parse_bounds(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw UsageError("--bounds expects bx,by");
    }
    try {
        return {parse_uint(text.substr(0, comma), "bound"), parse_uint(text.substr(comma + 1), "bound")};
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--bounds: ") + e.what());
    }
}

Json range_json(const Range& r) { return Json::array({r.lo, r.hi}); }

// ----------------------------------------------------------------------------------------------
// verify

std::vector<std::string> csv_header(const std::string& kind) {
    if (kind == "s-identity" || kind == "t-identity") return {"p", "q", "m", "lhs", "rhs", "equal"};
    if (kind == "gen" || kind == "symmetric")
        return {"m", "bounds_x", "bounds_y", "compared_terms", "mismatches", "equal"};
    if (kind == "frs" || kind == "frt") return {"p", "q", "lhs_terms", "rhs_terms", "mismatches", "equal"};
    return {"instance", "m", "u", "v", "lhs", "rhs", "equal"};
}

CaseResult scalar_case(const IdentityReport& r) {
    CaseResult out;
    out.equal = r.equal;
    out.json = Json{{"p", r.p},
                    {"q", r.q},
                    {"m", r.m},
                    {"lhs", to_fraction_string(r.lhs)},
                    {"rhs", to_fraction_string(r.rhs)},
                    {"equal", r.equal}};
    out.csv = {std::to_string(r.p), std::to_string(r.q), std::to_string(r.m), to_fraction_string(r.lhs),
               to_fraction_string(r.rhs), r.equal ? "true" : "false"};
    return out;
}

CaseResult poly_case(const PolyIdentityReport& r) {
    CaseResult out;
    out.equal = r.equal;
    Json mismatches = Json::array();
    for (const auto& mm : r.mismatches) {
        mismatches.push_back(Json{{"dx", mm.dx},
                                  {"dy", mm.dy},
                                  {"lhs", to_fraction_string(mm.lhs)},
                                  {"rhs", to_fraction_string(mm.rhs)}});
    }
    out.json = Json{{"m", r.m},
                    {"bounds", Json::array({r.bounds.x, r.bounds.y})},
                    {"compared_terms", r.compared_terms},
                    {"mismatches", mismatches},
                    {"equal", r.equal}};
    out.csv = {std::to_string(r.m),           std::to_string(r.bounds.x),         std::to_string(r.bounds.y),
               std::to_string(r.compared_terms), std::to_string(r.mismatches.size()), r.equal ? "true" : "false"};
    return out;
}

CaseResult harmonic_case(const HarmonicIdentityReport& r) {
    CaseResult out;
    out.equal = r.equal;
    Json mismatches = Json::array();
    for (const auto& mm : r.mismatches) {
        mismatches.push_back(Json{{"word", word_json(mm.word)},
                                  {"lhs", to_fraction_string(mm.lhs)},
                                  {"rhs", to_fraction_string(mm.rhs)}});
    }
    out.json = Json{{"p", r.p},
                    {"q", r.q},
                    {"lhs_terms", r.lhs_terms},
                    {"rhs_terms", r.rhs_terms},
                    {"mismatches", mismatches},
                    {"equal", r.equal}};
    out.csv = {std::to_string(r.p),           std::to_string(r.q),
               std::to_string(r.lhs_terms),   std::to_string(r.rhs_terms),
               std::to_string(r.mismatches.size()), r.equal ? "true" : "false"};
    return out;
}

HPoly random_word(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> length(0, 4);
    std::uniform_int_distribution<std::uint32_t> letter(1, 5);
    Word w(length(rng));
    for (auto& k : w) {
        k = letter(rng);
    }
    return HPoly::word(w);
}

std::vector<CaseResult> run_verify_cases(const VerifyOptions& opt, const AbcParams& params, Json& params_json) {
    const unsigned threads = thread_budget();
    const std::string& kind = opt.kind;
    const CoefficientFn coefficient = opt.corrupt ? corrupted_coefficient : identity_coefficient;
    const Range pr = checked_range(opt.p, "p");
    const Range qr = checked_range(opt.q, "q");
    const Range mr = checked_range(opt.m, "m");

    if (opt.corrupt && kind != "s-identity" && kind != "t-identity" && kind != "frs" && kind != "frt") {
        throw UsageError("coefficient corruption applies only to s-identity, t-identity, frs and frt");
    }

    if (kind == "s-identity" || kind == "t-identity") {
        params_json["p"] = range_json(pr);
        params_json["q"] = range_json(qr);
        params_json["m"] = range_json(mr);
        struct Point {
            std::uint32_t p, q, m;
        };
        std::vector<Point> grid;
        for (std::uint32_t p = pr.lo; p <= pr.hi; ++p)
            for (std::uint32_t q = qr.lo; q <= qr.hi; ++q)
                for (std::uint32_t m = mr.lo; m <= mr.hi; ++m) grid.push_back({p, q, m});
        const bool t_kind = kind == "t-identity";
        return parallel_map<CaseResult>(grid.size(), threads, [&](std::size_t i) {
            const auto& g = grid[i];
            return scalar_case(t_kind ? verify_identity_t(g.p, g.q, g.m, params, coefficient)
                                      : verify_identity_s(g.p, g.q, g.m, params, coefficient));
        });
    }
    if (kind == "gen" || kind == "symmetric") {
        const Bounds bounds = parse_bounds(opt.bounds);
        params_json["m"] = range_json(mr);
        params_json["bounds"] = Json::array({bounds.x, bounds.y});
        const bool symmetric = kind == "symmetric";
        return parallel_map<CaseResult>(mr.hi - mr.lo + 1, threads, [&](std::size_t i) {
            const auto m = static_cast<std::uint32_t>(mr.lo + i);
            return poly_case(symmetric ? check_symmetric_form(m, params, bounds) : check_gen_identity(m, params, bounds));
        });
    }
    if (kind == "frs" || kind == "frt") {
        params_json["p"] = range_json(pr);
        params_json["q"] = range_json(qr);
        std::vector<std::pair<std::uint32_t, std::uint32_t>> grid;
        for (std::uint32_t p = pr.lo; p <= pr.hi; ++p)
            for (std::uint32_t q = qr.lo; q <= qr.hi; ++q) grid.emplace_back(p, q);
        const bool t_kind = kind == "frt";
        return parallel_map<CaseResult>(grid.size(), threads, [&](std::size_t i) {
            const auto [p, q] = grid[i];
            return harmonic_case(t_kind ? verify_frt_symbolic(p, q, params, coefficient)
                                        : verify_frs_symbolic(p, q, params, coefficient));
        });
    }
    if (kind == "homomorphism") {
        params_json["m"] = range_json(mr);
        params_json["count"] = opt.count;
        params_json["seed"] = opt.seed;
        std::mt19937_64 rng(opt.seed);
        std::vector<std::pair<HPoly, HPoly>> instances;
        for (std::uint32_t i = 0; i < opt.count; ++i) {
            HPoly u = random_word(rng);
            HPoly v = random_word(rng);
            instances.emplace_back(std::move(u), std::move(v));
        }
        const std::size_t per_instance = mr.hi - mr.lo + 1;
        return parallel_map<CaseResult>(instances.size() * per_instance, threads, [&](std::size_t i) {
            const auto& [u, v] = instances[i / per_instance];
            const auto m = static_cast<std::uint32_t>(mr.lo + i % per_instance);
            const BigRational lhs = Z_m_eval(harmonic_mul(u, v), m);
            const BigRational rhs = Z_m_eval(u, m) * Z_m_eval(v, m);
            CaseResult out;
            out.equal = lhs == rhs;
            const Word& wu = u.terms().begin()->first;
            const Word& wv = v.terms().begin()->first;
            out.json = Json{{"instance", i / per_instance},
                            {"m", m},
                            {"u", word_json(wu)},
                            {"v", word_json(wv)},
                            {"lhs", to_fraction_string(lhs)},
                            {"rhs", to_fraction_string(rhs)},
                            {"equal", out.equal}};
            out.csv = {std::to_string(i / per_instance), std::to_string(m), word_to_string(wu), word_to_string(wv),
                       to_fraction_string(lhs), to_fraction_string(rhs), out.equal ? "true" : "false"};
            return out;
        });
    }
    throw UsageError("unknown verify kind: " + kind);
}

int run_verify(const VerifyOptions& opt, std::ostream& out) {
    const auto started = std::chrono::steady_clock::now();
    const AbcParams params = parse_params(opt.abc);
    if (opt.format != "json" && opt.format != "csv") {
        throw UsageError("--format must be json or csv");
    }
    Json params_json{{"a", params.a()}, {"b", params.b()}, {"c", params.c()}};
    const auto cases = run_verify_cases(opt, params, params_json);
    const bool all_passed = std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.equal; });
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();

    if (opt.format == "csv") {
        const auto header = csv_header(opt.kind);
        for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
        out << '\n';
        for (const auto& c : cases) {
            for (std::size_t i = 0; i < c.csv.size(); ++i) out << (i ? "," : "") << c.csv[i];
            out << '\n';
        }
    } else {
        Json report{{"command", "verify " + opt.kind},
                    {"params", params_json},
                    {"cases", Json::array()},
                    {"all_passed", all_passed},
                    {"elapsed_ms", static_cast<std::int64_t>(elapsed)}};
        for (const auto& c : cases) report["cases"].push_back(c.json);
        out << report.dump(2) << '\n';
    }
    return all_passed ? kAllPassed : kMismatch;
}

// ----------------------------------------------------------------------------------------------
// eval

void print_value(std::ostream& out, const BigRational& value) {
    out << to_fraction_string(value) << '\n' << format_double(to_double(value)) << '\n';
}

int run_eval(const EvalOptions& opt, ZetaCache* cache, std::ostream& out) {
    const std::string& kind = opt.kind;
    if (kind == "zeta" || kind == "zeta-star") {
        Index index;
        try {
            index = Index::parse(opt.index);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--index: ") + e.what());
        }
        print_value(out, zeta_value(kind == "zeta" ? ZetaKind::strict : ZetaKind::star, index, opt.m, cache));
        return kAllPassed;
    }
    if (kind == "s" || kind == "s-star" || kind == "t" || kind == "t-star") {
        const AbcParams params = parse_params(opt.abc);
        BigRational value;
        if (kind == "s") value = s_direct(opt.p, opt.q, opt.m, params, cache);
        if (kind == "s-star") value = s_star_direct(opt.p, opt.q, opt.m, params, cache);
        if (kind == "t") value = t_direct(opt.p, opt.q, opt.m, params, cache);
        if (kind == "t-star") value = t_star_direct(opt.p, opt.q, opt.m, params, cache);
        print_value(out, value);
        return kAllPassed;
    }
    if (kind == "bernoulli") {
        print_value(out, bernoulli(opt.n));
        return kAllPassed;
    }
    if (kind == "beta") {
        print_value(out, beta(opt.r));
        return kAllPassed;
    }
    if (kind == "closed") {
        PiCoefficient value;
        if (opt.closed_kind == "s") {
            value = s_closed(opt.p, opt.q);
        } else if (opt.closed_kind == "s-star") {
            value = s_star_closed(opt.p, opt.q);
        } else {
            throw UsageError("--kind must be s or s-star");
        }
        out << to_fraction_string(value.rational) << " * pi^" << value.pi_power << '\n'
            << format_double(to_double(value.rational) *
                             std::pow(std::numbers::pi, static_cast<double>(value.pi_power)))
            << '\n';
        return kAllPassed;
    }
    throw UsageError("unknown eval kind: " + kind);
}

// ----------------------------------------------------------------------------------------------
// converge

int run_converge(const ConvergeOptions& opt, ZetaCache* cache, std::ostream& out) {
    const AbcParams params = parse_params(opt.abc);
    if (!(params == classical_params())) {
        throw UsageError("converge requires --abc 3,1,2");
    }
    std::vector<std::uint32_t> schedule;
    try {
        schedule = parse_schedule(opt.m);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--m: ") + e.what());
    }
    const ConvergenceReport report = converge_report(opt.p, opt.q, params, schedule, cache);
    out << "m,truncated_over_pi_power,closed_form,abs_error\n";
    for (const auto& row : report.rows) {
        out << row.m << ',' << format_double(row.truncated_over_pi_power) << ',' << format_double(row.closed_form)
            << ',' << format_double(row.abs_error) << '\n';
    }
    return kAllPassed;
}

}  // namespace

Range parse_range(const std::string& text) {
    const auto dots = text.find("..");
    Range r;
    if (dots == std::string::npos) {
        r.lo = r.hi = parse_uint(text, "range");
    } else {
        r.lo = parse_uint(text.substr(0, dots), "range");
        r.hi = parse_uint(text.substr(dots + 2), "range");
    }
    if (r.lo > r.hi) {
        throw std::invalid_argument("range '" + text + "' is empty (lo > hi)");
    }
    return r;
}

std::vector<std::uint32_t> parse_schedule(const std::string& text) {
    std::vector<std::uint32_t> schedule;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        schedule.push_back(parse_uint(item, "schedule entry"));
    }
    if (schedule.empty()) {
        throw std::invalid_argument("empty m schedule");
    }
    for (std::size_t i = 1; i < schedule.size(); ++i) {
        if (schedule[i] <= schedule[i - 1]) {
            throw std::invalid_argument("m schedule must be strictly increasing");
        }
    }
    return schedule;
}

unsigned thread_budget() {
    if (const char* env = std::getenv("MZV_THREADS")) {
        try {
            const auto value = parse_uint(env, "MZV_THREADS");
            if (value >= 1) {
                return value;
            }
        } catch (const std::invalid_argument&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact truncated multiple zeta(-star) values and identity verification"};
    app.require_subcommand(1);
    std::string cache_path;
    app.add_option("--cache", cache_path, "Persist truncated-value tables in this file");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run an identity sweep; JSON report to stdout");
    verify_cmd->add_option("kind", verify.kind, "s-identity | t-identity | gen | symmetric | frs | frt | homomorphism")
        ->required()
        ->check(CLI::IsMember({"s-identity", "t-identity", "gen", "symmetric", "frs", "frt", "homomorphism"}));
    verify_cmd->add_option("--abc", verify.abc, "a,b,c with a+b=2c, a>=2")->capture_default_str();
    verify_cmd->add_option("--p", verify.p, "p range lo..hi")->capture_default_str();
    verify_cmd->add_option("--q", verify.q, "q range lo..hi")->capture_default_str();
    verify_cmd->add_option("--m", verify.m, "m range lo..hi")->capture_default_str();
    verify_cmd->add_option("--bounds", verify.bounds, "series truncation bx,by")->capture_default_str();
    verify_cmd->add_option("--format", verify.format, "json | csv")->capture_default_str();
    verify_cmd->add_option("--seed", verify.seed, "RNG seed (homomorphism)")->capture_default_str();
    verify_cmd->add_option("--count", verify.count, "random instances (homomorphism)")->capture_default_str();
    verify_cmd->add_flag("--corrupt-coefficient", verify.corrupt)->group("");

    EvalOptions eval;
    auto* eval_cmd = app.add_subcommand("eval", "Print one exact value");
    eval_cmd->add_option("quantity", eval.kind, "zeta | zeta-star | s | s-star | t | t-star | bernoulli | beta | closed")
        ->required()
        ->check(CLI::IsMember({"zeta", "zeta-star", "s", "s-star", "t", "t-star", "bernoulli", "beta", "closed"}));
    eval_cmd->add_option("--abc", eval.abc, "a,b,c")->capture_default_str();
    eval_cmd->add_option("--index", eval.index, "comma-separated exponents");
    eval_cmd->add_option("--m", eval.m, "truncation");
    eval_cmd->add_option("--p", eval.p);
    eval_cmd->add_option("--q", eval.q);
    eval_cmd->add_option("--n", eval.n, "Bernoulli index");
    eval_cmd->add_option("--r", eval.r, "beta index");
    eval_cmd->add_option("--kind", eval.closed_kind, "closed form: s | s-star")->capture_default_str();

    ConvergeOptions converge;
    auto* converge_cmd = app.add_subcommand("converge", "CSV of s*_m(p,q)/pi^(4p+2q) against its limit");
    converge_cmd->add_option("--abc", converge.abc, "must be 3,1,2")->capture_default_str();
    converge_cmd->add_option("--p", converge.p);
    converge_cmd->add_option("--q", converge.q);
    converge_cmd->add_option("--m", converge.m, "strictly increasing schedule, e.g. 10,100,1000")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kAllPassed;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        ZetaCache cache;
        ZetaCache* active_cache = nullptr;
        if (!cache_path.empty()) {
            cache.load(cache_path);
            active_cache = &cache;
        }
        int code = kAllPassed;
        if (*verify_cmd) {
            code = run_verify(verify, out);
        } else if (*eval_cmd) {
            code = run_eval(eval, active_cache, out);
        } else {
            code = run_converge(converge, active_cache, out);
        }
        if (active_cache != nullptr) {
            cache.save(cache_path);
        }
        return code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
}

}  // namespace mzv::cli
