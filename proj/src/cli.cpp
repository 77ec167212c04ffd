#include <dpcolor/cli.hpp>

#include <dpcolor/error.hpp>
#include <dpcolor/io.hpp>
#include <dpcolor/verify.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace dpcolor::cli {

namespace {

using io::Json;
namespace fs = std::filesystem;

[[noreturn]] void config_error(const std::string& msg) { throw Error(ErrorCode::InvalidConfig, msg); }

std::string hex64(std::uint64_t x) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

Json opt_big(const std::optional<BigInt>& x) { return x ? Json(x->str()) : Json(nullptr); }

Json split_json(const ProfileSplit& s) {
    return Json{{"uniform", s.uniform}, {"t1", opt_big(s.t1)}, {"t2", opt_big(s.t2)}};
}

unsigned need_k(const RunConfig& c) {
    if (!c.k) config_error(c.command + " needs --k");
    return *c.k;
}

std::pair<unsigned, unsigned> need_range(const RunConfig& c) {
    if (!c.kmin || !c.kmax) config_error(c.command + " needs --kmin and --kmax");
    if (*c.kmin > *c.kmax) config_error("--kmin exceeds --kmax");
    return {*c.kmin, *c.kmax};
}

Hypergraph load_instance(const RunConfig& c) {
    if (c.input.has_value() == c.gen.has_value())
        config_error("give exactly one instance source: --input or --family");
    if (c.gen) return generate(*c.gen);
    std::ifstream in(*c.input);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + *c.input);
    std::ostringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    // A JSON object naming a family is a generator spec rather than a hypergraph.
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        const Json j = Json::parse(text, nullptr, false);
        if (j.is_object() && j.contains("family")) return generate(io::genspec_from_json(j));
    }
    return io::parse_hypergraph(text);
}

// Parameters that determine a report. Workers and budget do not.
Json cache_key(const RunConfig& c, const Hypergraph& h) {
    Json key{{"command", c.command}, {"hypergraph", io::to_json(h)}};
    if (c.k) key["k"] = *c.k;
    if (c.kmin) key["kmin"] = *c.kmin;
    if (c.kmax) key["kmax"] = *c.kmax;
    if (c.edge) key["edge"] = *c.edge;
    if (c.command == "mc") {
        key["trials"] = c.trials;
        key["seed"] = c.seed;
    }
    if (c.command == "dpexact") key["pruning"] = c.pruning;
    return key;
}

class Cache {
public:
    Cache(const std::optional<std::string>& dir, const RunConfig& c, const Hypergraph& h) {
        if (!dir || dir->empty()) return;
        dir_ = *dir;
        key_ = cache_key(c, h);
        file_ = dir_ / (hex64(h.hash()) + "-" + hex64(fnv1a(key_.dump())) + ".json");
    }

    std::optional<Json> load() const {
        if (dir_.empty()) return std::nullopt;
        std::ifstream in(file_);
        if (!in) return std::nullopt;
        const Json j = Json::parse(in, nullptr, false);
        if (!j.is_object() || j.value("schema", -1) != kCacheSchema || !j.contains("key") || j["key"] != key_ ||
            !j.contains("report"))
            return std::nullopt;
        return j["report"];
    }

    void store(const Json& report) const {
        if (dir_.empty()) return;
        std::error_code ec;
        fs::create_directories(dir_, ec);
        if (ec) config_error("cannot create cache directory " + dir_.string());
        const fs::path tmp = file_.string() + ".tmp";
        {
            std::ofstream out(tmp, std::ios::trunc);
            if (!out) config_error("cannot write cache entry in " + dir_.string());
            out << Json{{"schema", kCacheSchema}, {"key", key_}, {"report", report}}.dump();
        }
        fs::rename(tmp, file_, ec);
        if (ec) config_error("cannot write cache entry in " + dir_.string());
    }

private:
    fs::path dir_;
    fs::path file_;
    Json key_;
};

Json report_for(const RunConfig& c, const Hypergraph& h) {
    DpOptions opts;
    opts.budget.limit = c.budget;
    opts.workers = c.workers;
    opts.conjugacy_pruning = c.pruning;
    const Budget& budget = opts.budget;

    const std::string& cmd = c.command;
    if (cmd == "classify") {
        Json j = io::to_json(classify(h));
        j["n"] = h.vertex_count();
        j["m"] = h.edge_count();
        return j;
    }
    if (cmd == "chrompoly") {
        const Polynomial p = chromatic_polynomial(h, budget);
        Json coeffs = io::to_json(p);
        return Json{{"degree", p.degree()}, {"coefficients", std::move(coeffs)}};
    }
    if (cmd == "count") {
        const unsigned k = need_k(c);
        const std::string count = count_proper(h, k, budget).str();
        return Json{{"k", k}, {"count", count}};
    }
    if (cmd == "dpbound") {
        const unsigned k = need_k(c);
        const std::string bound = to_fraction(dp_upper_bound(h, k));
        return Json{{"k", k}, {"bound", bound}};
    }
    if (cmd == "dpexact") {
        const unsigned k = need_k(c);
        Json j = io::to_json(dp_exact(h, k, opts));
        j["k"] = k;
        return j;
    }
    if (cmd == "dpclosed") {
        const unsigned k = need_k(c);
        const auto closed = dp_closed(h, k);
        return Json{{"k", k},
                    {"value", closed ? Json(closed->value.str()) : Json(nullptr)},
                    {"provenance", closed ? Json(closed->provenance) : Json(nullptr)}};
    }
    if (cmd == "profile") {
        const unsigned k = need_k(c);
        if (!c.edge) config_error("profile needs --edge");
        if (*c.edge >= h.edge_count()) throw Error(ErrorCode::IndexOutOfRange, "no edge " + std::to_string(*c.edge));
        const BoundaryProfile p = boundary_profile(h, static_cast<EdgeIndex>(*c.edge), k, budget);
        Json j = io::to_json(p);
        j["constant_split"] = split_json(split_constant(p));
        j["leading_pair_split"] = split_json(split_leading_pair(p));
        return j;
    }
    if (cmd == "mc") {
        const unsigned k = need_k(c);
        if (c.trials == 0) config_error("--trials must be positive");
        const SampleStats s = monte_carlo_mean(h, k, c.trials, c.seed, opts);
        Json hist = Json::object();
        for (const auto& [v, n] : s.histogram) hist[v.str()] = n;
        Json j{{"k", k},        {"trials", c.trials}, {"seed", c.seed},   {"mean", to_fraction(s.mean)},
               {"min", s.min.str()}, {"max", s.max.str()}, {"histogram", hist}};
        if (k >= 1 && (h.uniform_size() || h.edge_count() == 0))
            j["bound"] = to_fraction(dp_upper_bound(h, k));
        else
            j["bound"] = nullptr;
        return j;
    }
    if (cmd == "gap") {
        const auto [lo, hi] = need_range(c);
        Json rows = io::to_json(gap_profile(h, lo, hi, opts));
        return Json{{"rows", std::move(rows)}};
    }
    if (cmd == "chidp") {
        if (!c.kmax) config_error("chidp needs --kmax");
        const auto chi = dp_chromatic_number(h, *c.kmax, opts);
        return Json{{"kmax", *c.kmax}, {"chi_dp", chi ? Json(*chi) : Json(nullptr)}};
    }
    if (cmd == "gen") return io::to_json(h);
    config_error("unknown command '" + cmd + "'");
}

std::string csv_cell(const Json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string csv_for(const std::string& cmd, const Json& r, const Hypergraph* h) {
    std::string out;
    auto row = [&](std::initializer_list<std::string> cells) {
        bool first = true;
        for (const std::string& s : cells) {
            out += (first ? "" : ",") + s;
            first = false;
        }
        out += "\n";
    };
    if (cmd == "classify") {
        row({"n", "m", "classification", "connected", "components", "linear", "uniform_r", "incidence_rank",
             "cycle_length"});
        row({csv_cell(r["n"]), csv_cell(r["m"]), csv_cell(r["classification"]), csv_cell(r["connected"]),
             csv_cell(r["component_count"]), csv_cell(r["linear"]), csv_cell(r["uniform_r"]),
             csv_cell(r["incidence_rank"]), csv_cell(r["cycle_length"])});
    } else if (cmd == "chrompoly") {
        row({"power", "coefficient"});
        for (std::size_t i = 0; i < r["coefficients"].size(); ++i)
            row({std::to_string(i), csv_cell(r["coefficients"][i])});
    } else if (cmd == "count") {
        row({"k", "count"});
        row({csv_cell(r["k"]), csv_cell(r["count"])});
    } else if (cmd == "dpbound") {
        row({"k", "bound"});
        row({csv_cell(r["k"]), csv_cell(r["bound"])});
    } else if (cmd == "dpexact") {
        row({"k", "value", "covers_examined", "free_slots"});
        row({csv_cell(r["k"]), csv_cell(r["value"]), csv_cell(r["covers_examined"]), csv_cell(r["free_slots"])});
    } else if (cmd == "dpclosed") {
        row({"k", "value", "provenance"});
        row({csv_cell(r["k"]), csv_cell(r["value"]), csv_cell(r["provenance"])});
    } else if (cmd == "profile") {
        std::string header;
        for (const Json& v : r["order"]) header += "v" + v.dump() + ",";
        out += header + "count\n";
        for (const auto& [key, count] : r["counts"].items()) out += key + "," + count.get<std::string>() + "\n";
    } else if (cmd == "mc") {
        row({"value", "frequency"});
        for (const auto& [value, n] : r["histogram"].items()) row({value, n.dump()});
    } else if (cmd == "gap") {
        row({"k", "P", "P_DP", "gap", "normalized_gap"});
        for (const Json& g : r["rows"])
            row({csv_cell(g["k"]), csv_cell(g["P"]), csv_cell(g["P_DP"]), csv_cell(g["gap"]),
                 csv_cell(g["normalized_gap"])});
    } else if (cmd == "chidp") {
        row({"kmax", "chi_dp"});
        row({csv_cell(r["kmax"]), csv_cell(r["chi_dp"])});
    } else if (cmd == "gen") {
        out = io::to_terse(*h);
    }
    return out;
}

int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::ResourceLimit:
        return kExitBudget;
    case ErrorCode::ConsistencyFailure:
        return kExitVerification;
    default:
        return kExitInput;
    }
}

std::string error_json(const std::string& code, const std::string& message) {
    return Json{{"error", code}, {"message", message}}.dump() + "\n";
}

RunOutput run_verify(const RunConfig& c) {
    DpOptions opts;
    opts.budget.limit = c.budget;
    opts.workers = c.workers;
    const std::vector<ClaimResult> results = run_theorem_suite(opts);
    const bool ok = std::all_of(results.begin(), results.end(), [](const ClaimResult& r) { return r.passed; });
    RunOutput o;
    o.exit_code = ok ? kExitOk : kExitVerification;
    if (c.format == "csv") {
        o.out = "claim,passed,detail\n";
        for (const ClaimResult& r : results)
            o.out += r.claim + "," + (r.passed ? "true" : "false") + "," + r.detail + "\n";
    } else {
        Json claims = Json::array();
        for (const ClaimResult& r : results)
            claims.push_back(Json{{"claim", r.claim}, {"passed", r.passed}, {"detail", r.detail}});
        o.out = Json{{"passed", ok}, {"claims", claims}}.dump(2) + "\n";
    }
    return o;
}

} // namespace

RunOutput run(const RunConfig& config) {
    RunOutput o;
    try {
        if (config.format != "json" && config.format != "csv") config_error("--format must be json or csv");
        if (config.budget == 0) config_error("--budget must be positive");
        if (config.workers == 0) config_error("--workers must be positive");
        if (config.command == "verify") return run_verify(config);

        const Hypergraph h = load_instance(config);
        const Cache cache(config.command == "gen" ? std::nullopt : config.cache_dir, config, h);
        Json report;
        if (auto hit = cache.load()) {
            report = std::move(*hit);
        } else {
            report = report_for(config, h);
            cache.store(report);
        }
        if (config.format == "csv") {
            o.out = csv_for(config.command, report, &h);
        } else {
            if (config.command != "gen") {
                report["command"] = config.command;
                report["hypergraph_hash"] = hex64(h.hash());
            }
            o.out = report.dump(2) + "\n";
        }
    } catch (const Error& e) {
        o.exit_code = exit_code_for(e.code());
        o.err = error_json(std::string(to_string(e.code())), e.what());
    } catch (const Json::exception& e) {
        o.exit_code = kExitInput;
        o.err = error_json("ParseError", e.what());
    } catch (const std::exception& e) {
        o.exit_code = kExitInput;
        o.err = error_json("InternalError", e.what());
    }
    return o;
}

RunOutput run_args(const std::vector<std::string>& args) {
    RunConfig cfg;
    CLI::App app{"Exact DP color functions of hypergraphs", "dpcolor"};
    app.require_subcommand(1, 1);

    std::optional<std::string> family;
    GenSpec gen;
    std::optional<std::size_t> gen_n;

    const std::vector<std::pair<std::string, std::string>> commands{
        {"classify", "structural report"},
        {"chrompoly", "chromatic polynomial"},
        {"count", "proper colorings at --k"},
        {"dpbound", "average-cover upper bound at --k"},
        {"dpexact", "exact DP color function at --k with a witness cover"},
        {"dpclosed", "closed-form DP color function where one is known"},
        {"profile", "boundary color profile of --edge at --k"},
        {"mc", "coloring counts of random covers"},
        {"gap", "P - P_DP for --kmin..--kmax"},
        {"chidp", "DP chromatic number up to --kmax"},
        {"gen", "emit a generated instance"},
        {"verify", "check the closed forms and inequalities on a built-in catalog"},
    };
    std::vector<CLI::App*> subs;
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        subs.push_back(sub);
        sub->callback([&cfg, n = name] { cfg.command = n; });
        if (name == "verify") continue;
        sub->add_option("--input,-i", cfg.input, "hypergraph file (JSON or n=/e= text) or generator spec JSON");
        sub->add_option("--family", family, "generator family instead of --input");
        sub->add_option("--r", gen.r, "edge size for generators");
        sub->add_option("--m", gen.m, "edge count (paths, trees) or pendant edges (unicyclic)");
        sub->add_option("--p", gen.p, "cycle length");
        sub->add_option("--n", gen_n, "vertex count for edgeless");
        sub->add_option("--gen-seed", gen.seed, "generator seed");
        if (name == "gen") continue;
        sub->add_option("--k", cfg.k, "number of colors");
        sub->add_option("--kmin", cfg.kmin);
        sub->add_option("--kmax", cfg.kmax);
        sub->add_option("--edge", cfg.edge, "edge index (profile)");
        sub->add_option("--trials", cfg.trials, "Monte Carlo samples")->capture_default_str();
        sub->add_option("--seed", cfg.seed, "Monte Carlo seed")->capture_default_str();
        sub->add_flag("--pruning", cfg.pruning, "conjugacy-class pruning with one free slot");
        sub->add_option("--cache-dir", cfg.cache_dir, "reuse reports stored in this directory");
    }
    for (CLI::App* sub : subs) {
        sub->add_option("--budget", cfg.budget, "maximum estimated edge checks")->capture_default_str();
        sub->add_option("--format", cfg.format, "json or csv")->capture_default_str();
        sub->add_option("--workers", cfg.workers, "counting threads")->capture_default_str();
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        const int code = app.exit(e, out, err);
        RunOutput o;
        o.exit_code = code == 0 ? kExitOk : kExitInput;
        o.out = out.str();
        o.err = err.str();
        return o;
    }
    if (family) {
        try {
            gen.family = family_from_string(*family);
        } catch (const Error& e) {
            return RunOutput{kExitInput, "", error_json(std::string(to_string(e.code())), e.what())};
        }
        if (gen_n) gen.n = *gen_n;
        cfg.gen = gen;
    }
    if (!cfg.cache_dir)
        if (const char* env = std::getenv(kCacheEnv); env && *env) cfg.cache_dir = env;
    return run(cfg);
}

} // namespace dpcolor::cli
