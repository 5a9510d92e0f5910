#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "sympair/io.hpp"

using namespace sympair;

namespace {

// ---- shared argument plumbing ----------------------------------------------

struct SpecArgs {
    std::uint32_t q = 0, p = 0, e = 0;
    int k = 0, m = 0;
    int beta1 = -1, beta2 = -1;
    std::vector<int> alphas;
};

FieldPtr resolve_field(std::uint32_t q, std::uint32_t p, std::uint32_t e) {
    if (p != 0) {
        auto F = field_new(p, e == 0 ? 1 : e);
        if (q != 0 && F->q() != q) {
            throw Error("q = " + std::to_string(q) + " does not match p^e = " +
                        std::to_string(F->q()));
        }
        return F;
    }
    if (q != 0) return field_from_order(q);
    throw Error("field not specified: give --q or --p (with optional --e)");
}

std::vector<elem_t> to_elems(const std::vector<int>& xs, const char* what) {
    std::vector<elem_t> out;
    out.reserve(xs.size());
    for (int v : xs) {
        if (v < 0 || v > 0xFFFF) throw Error(std::string(what) + ": value out of range");
        out.push_back(elem_t(v));
    }
    return out;
}

CodeSpec spec_from_args(const SpecArgs& a) {
    auto F = resolve_field(a.q, a.p, a.e);
    bool custom = a.beta1 >= 0 || a.beta2 >= 0 || !a.alphas.empty();
    if (!custom) return CodeSpec(F, a.k, a.m);
    if (a.beta1 < 0 || a.beta2 < 0 || a.alphas.empty()) {
        throw Error("--beta1, --beta2 and --alphas must be given together");
    }
    if (a.beta1 > 0xFFFF || a.beta2 > 0xFFFF) throw Error("beta out of range");
    return CodeSpec(F, a.k, a.m, elem_t(a.beta1), elem_t(a.beta2),
                    to_elems(a.alphas, "--alphas"));
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw Error("cannot open output file " + out_path);
    f << text;
}

const char* tag_name(EvalPoint::Tag t) {
    switch (t) {
        case EvalPoint::Tag::alpha: return "alpha";
        case EvalPoint::Tag::beta1: return "beta1";
        default: return "beta2";
    }
}

ordered_json layout_to_json(const CodeSpec& spec) {
    ordered_json arr = ordered_json::array();
    for (const EvalPoint& pt : spec.layout()) {
        ordered_json e;
        e["tag"] = tag_name(pt.tag);
        e["index"] = pt.alpha_index;
        e["value"] = pt.value;
        arr.push_back(std::move(e));
    }
    return arr;
}

ordered_json witness_to_json(const EnumWitness& w) {
    ordered_json j;
    j["index"] = w.index;
    j["coeffs"] = w.coeffs;
    j["entries"] = w.entries;
    j["weight"] = w.weight;
    return j;
}

// ---- subcommand handlers ----------------------------------------------------

int cmd_construct(const SpecArgs& args, const std::string& out) {
    CodeSpec spec = spec_from_args(args);
    ordered_json j;
    j["spec"] = spec_to_json(spec);
    j["layout"] = layout_to_json(spec);
    j["generator"] = generator_matrix(spec);
    emit(j.dump(2) + "\n", out);
    return 0;
}

int cmd_verify(const SpecArgs& args, const EnumOptions& opts, const std::string& out) {
    CodeSpec spec = spec_from_args(args);
    int dp_enum = brute_min_pair_distance(spec, opts);
    int dp_formula = theoretical_dp(spec);
    int rank = matrix_rank(*spec.field(), generator_matrix(spec));
    bool mds = dp_enum > 1 && is_mds_pair(spec, dp_enum);
    bool pass = dp_enum == dp_formula && dp_enum == spec.n() - spec.k() + 2 &&
                rank == spec.k() && mds;

    ordered_json j;
    j["spec"] = spec_to_json(spec);
    j["dp_enumerated"] = dp_enum;
    j["dp_formula"] = dp_formula;
    j["rank"] = rank;
    j["mds"] = mds;
    j["pass"] = pass;
    if (!pass && dp_enum > 0) {
        auto witnesses = find_weight_witnesses(spec, {dp_enum}, opts);
        if (witnesses.count(dp_enum)) {
            j["witness"] = witness_to_json(witnesses.at(dp_enum));
        }
    }
    emit(j.dump(2) + "\n", out);

    if (pass) {
        std::cerr << "d_p=" << dp_enum << " = theory=" << dp_formula
                  << " = n-k+2 ✓ MDS\n";
    } else {
        std::cerr << "d_p=" << dp_enum << " vs theory=" << dp_formula
                  << " ✗ mismatch\n";
    }
    return pass ? 0 : 1;
}

// Sanity facts for dimensions without a closed form: the spectrum must
// account for every message, have the zero codeword alone at weight 0, and
// show nothing between 0 and the promised minimum distance.
struct SanityFacts {
    bool total_ok = false;
    bool zero_ok = false;
    bool gap_ok = false;
    bool pass() const { return total_ok && zero_ok && gap_ok; }
};

SanityFacts spectrum_sanity(const CodeSpec& spec, const WeightDistribution& wd,
                            std::uint64_t messages) {
    SanityFacts facts;
    facts.total_ok = wd.total == messages;
    facts.zero_ok = wd.counts.count(0) == 1 && wd.counts.at(0) == 1;
    facts.gap_ok = true;
    for (int w = 1; w < theoretical_dp(spec); ++w) {
        if (wd.counts.count(w)) facts.gap_ok = false;
    }
    return facts;
}

ordered_json sanity_to_json(const SanityFacts& facts) {
    ordered_json j;
    j["total_matches_message_count"] = facts.total_ok;
    j["only_zero_codeword_at_weight_0"] = facts.zero_ok;
    j["no_weight_below_formula_dp"] = facts.gap_ok;
    j["pass"] = facts.pass();
    return j;
}

int cmd_spectrum(const SpecArgs& args, const EnumOptions& opts, const std::string& format,
                 const std::string& out) {
    CodeSpec spec = spec_from_args(args);
    std::uint64_t messages = message_count_checked(spec, opts.ceiling);
    auto wd = pair_weight_distribution(spec, opts);

    if (spec.k() == 3 || spec.k() == 4) {
        auto closed = spec.k() == 3 ? closed_form_a3(spec.field()->q(), spec.m())
                                    : closed_form_a4(spec.field()->q(), spec.m());
        auto diff = compare_distributions(wd, closed);
        if (format == "csv") {
            emit(diff_to_csv(diff), out);
        } else {
            ordered_json j;
            j["spec"] = spec_to_json(spec);
            j["distribution"] = distribution_to_json(wd);
            j["closed_form"] = distribution_to_json(closed);
            j["diff"] = diff_to_json(diff);
            emit(j.dump(2) + "\n", out);
        }
        return diff.match ? 0 : 1;
    }

    SanityFacts facts = spectrum_sanity(spec, wd, messages);
    if (format == "csv") {
        emit(distribution_to_csv(wd), out);
    } else {
        ordered_json j;
        j["spec"] = spec_to_json(spec);
        j["distribution"] = distribution_to_json(wd);
        j["sanity"] = sanity_to_json(facts);
        emit(j.dump(2) + "\n", out);
    }
    return facts.pass() ? 0 : 1;
}

int cmd_census(const SpecArgs& args, const std::string& format, const std::string& out) {
    auto F = resolve_field(args.q, args.p, args.e);
    bool custom = args.beta1 >= 0 || args.beta2 >= 0 || !args.alphas.empty();
    CensusTable table;
    if (custom) {
        if (args.beta1 < 0 || args.beta2 < 0 || args.alphas.empty()) {
            throw Error("--beta1, --beta2 and --alphas must be given together");
        }
        table = root_class_census(F, args.m, elem_t(args.beta1), elem_t(args.beta2),
                                  to_elems(args.alphas, "--alphas"));
    } else {
        table = root_class_census(F, args.m);
    }
    if (format == "csv") {
        emit(census_to_csv(table), out);
    } else {
        emit(census_to_json(table).dump(2) + "\n", out);
    }
    return table.all_match() ? 0 : 1;
}

// ---- sweep ------------------------------------------------------------------

struct SweepConfig {
    std::vector<std::uint32_t> qs{5, 7, 8, 9, 11, 13};
    std::vector<int> ks{3, 4};
    bool m_all = true;
    std::vector<int> ms;
    std::uint64_t ceiling = 100'000'000;
    int jobs = 0;
    std::string format = "json";
    std::string out;
};

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::istringstream in(s);
    std::string part;
    while (std::getline(in, part, sep)) parts.push_back(trim(part));
    return parts;
}

long long parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw Error("");
        return v;
    } catch (...) {
        throw Error(what + ": not an integer: '" + s + "'");
    }
}

// "3..5" (inclusive range) or "3,4,5".
std::vector<int> parse_range_or_list(const std::string& s, const std::string& what) {
    std::size_t dots = s.find("..");
    std::vector<int> out;
    if (dots != std::string::npos) {
        long long lo = parse_int(trim(s.substr(0, dots)), what);
        long long hi = parse_int(trim(s.substr(dots + 2)), what);
        if (lo > hi) throw Error(what + ": empty range " + s);
        for (long long v = lo; v <= hi; ++v) out.push_back(int(v));
        return out;
    }
    for (const auto& part : split(s, ',')) out.push_back(int(parse_int(part, what)));
    return out;
}

void apply_sweep_key(SweepConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "q") {
        cfg.qs.clear();
        for (int v : parse_range_or_list(value, "q")) cfg.qs.push_back(std::uint32_t(v));
    } else if (key == "k") {
        cfg.ks = parse_range_or_list(value, "k");
    } else if (key == "m") {
        if (value == "all") {
            cfg.m_all = true;
            cfg.ms.clear();
        } else {
            cfg.m_all = false;
            cfg.ms = parse_range_or_list(value, "m");
        }
    } else if (key == "ceiling") {
        cfg.ceiling = std::uint64_t(parse_int(value, "ceiling"));
    } else if (key == "jobs") {
        cfg.jobs = int(parse_int(value, "jobs"));
    } else if (key == "format") {
        if (value != "json" && value != "csv") throw Error("format: expected json or csv");
        cfg.format = value;
    } else if (key == "out") {
        cfg.out = value;
    } else {
        throw Error("unknown sweep config key '" + key + "'");
    }
}

void load_sweep_config(SweepConfig& cfg, const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("cannot read config file " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw Error(path + ":" + std::to_string(lineno) + ": expected key = value");
        }
        apply_sweep_key(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
}

int cmd_sweep(const SweepConfig& cfg) {
    struct Case {
        std::uint32_t q;
        int k, m;
    };
    std::vector<Case> cases;
    for (std::uint32_t q : cfg.qs) {
        for (int k : cfg.ks) {
            if (k < 3) continue;
            std::vector<int> ms;
            if (cfg.m_all) {
                for (int m = k + 1; m <= int(q) - 2; ++m) ms.push_back(m);
            } else {
                ms = cfg.ms;
            }
            for (int m : ms) {
                if (k < m && m <= int(q) - 2) cases.push_back({q, k, m});
            }
        }
    }
    if (cases.empty()) {
        throw Error("sweep grid is empty after applying 3 <= k < m <= q-2");
    }

    EnumOptions opts;
    opts.jobs = cfg.jobs;
    opts.ceiling = cfg.ceiling;

    // Refuse the whole run up front if any case is out of budget.
    std::map<std::uint32_t, FieldPtr> fields;
    for (const Case& c : cases) {
        if (!fields.count(c.q)) fields[c.q] = field_from_order(c.q);
        message_count_checked(CodeSpec(fields[c.q], c.k, c.m), cfg.ceiling);
    }

    struct Row {
        Case c;
        int n, dp_enum, dp_formula, rank;
        bool mds;
        std::string spectrum, census;
        bool ok;
    };
    std::vector<Row> rows;
    std::map<std::pair<std::uint32_t, int>, bool> census_cache;
    bool pass = true;

    for (const Case& c : cases) {
        CodeSpec spec(fields[c.q], c.k, c.m);
        Row r{c, spec.n(), 0, 0, 0, false, "", "", false};
        r.dp_enum = brute_min_pair_distance(spec, opts);
        r.dp_formula = theoretical_dp(spec);
        r.rank = matrix_rank(*spec.field(), generator_matrix(spec));
        r.mds = r.dp_enum > 1 && is_mds_pair(spec, r.dp_enum);

        bool spectrum_ok = false;
        auto wd = pair_weight_distribution(spec, opts);
        if (c.k == 3 || c.k == 4) {
            auto closed = c.k == 3 ? closed_form_a3(c.q, c.m) : closed_form_a4(c.q, c.m);
            spectrum_ok = compare_distributions(wd, closed).match;
            r.spectrum = spectrum_ok ? "match" : "mismatch";
        } else {
            spectrum_ok =
                spectrum_sanity(spec, wd, message_count_checked(spec, cfg.ceiling)).pass();
            r.spectrum = spectrum_ok ? "sanity" : "sanity-fail";
        }

        auto key = std::make_pair(c.q, c.m);
        if (!census_cache.count(key)) {
            census_cache[key] = root_class_census(spec).all_match();
        }
        bool census_ok = census_cache[key];
        r.census = census_ok ? "ok" : "fail";

        r.ok = r.dp_enum == r.dp_formula && r.dp_enum == r.n - c.k + 2 &&
               r.rank == c.k && r.mds && spectrum_ok && census_ok;
        pass = pass && r.ok;
        std::cerr << "q=" << c.q << " k=" << c.k << " m=" << c.m << " "
                  << (r.ok ? "ok" : "FAIL") << "\n";
        rows.push_back(std::move(r));
    }

    if (cfg.format == "csv") {
        std::ostringstream outbuf;
        outbuf << "q,k,m,n,dp_enumerated,dp_formula,rank,mds,spectrum,census\n";
        for (const Row& r : rows) {
            outbuf << r.c.q << ',' << r.c.k << ',' << r.c.m << ',' << r.n << ','
                   << r.dp_enum << ',' << r.dp_formula << ',' << r.rank << ','
                   << (r.mds ? "true" : "false") << ',' << r.spectrum << ','
                   << r.census << '\n';
        }
        emit(outbuf.str(), cfg.out);
    } else {
        ordered_json grid;
        grid["q"] = cfg.qs;
        grid["k"] = cfg.ks;
        if (cfg.m_all) {
            grid["m"] = "all";
        } else {
            grid["m"] = cfg.ms;
        }
        ordered_json case_rows = ordered_json::array();
        for (const Row& r : rows) {
            ordered_json j;
            j["q"] = r.c.q;
            j["k"] = r.c.k;
            j["m"] = r.c.m;
            j["n"] = r.n;
            j["dp_enumerated"] = r.dp_enum;
            j["dp_formula"] = r.dp_formula;
            j["rank"] = r.rank;
            j["mds"] = r.mds;
            j["spectrum"] = r.spectrum;
            j["census"] = r.census;
            case_rows.push_back(std::move(j));
        }
        ordered_json censuses = ordered_json::array();
        for (const auto& [key, ok] : census_cache) {
            ordered_json j;
            j["q"] = key.first;
            j["m"] = key.second;
            j["all_match"] = ok;
            censuses.push_back(std::move(j));
        }
        ordered_json top;
        top["grid"] = std::move(grid);
        top["cases"] = std::move(case_rows);
        top["censuses"] = std::move(censuses);
        top["pass"] = pass;
        emit(top.dump(2) + "\n", cfg.out);
    }

    if (!pass) {
        std::cerr << "failing cases:";
        for (const Row& r : rows) {
            if (!r.ok) std::cerr << " (" << r.c.q << "," << r.c.k << "," << r.c.m << ")";
        }
        std::cerr << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"evaluation codes under the symbol-pair metric: construction, "
                 "exhaustive verification, weight spectra, root-class census"};
    app.require_subcommand(1);

    SpecArgs args;
    std::string format = "json";
    std::string out_path;
    std::string config_path;
    std::string sweep_q, sweep_k, sweep_m;
    int jobs = 0;
    std::uint64_t ceiling = 100'000'000;

    auto add_field_opts = [&](CLI::App* sub) {
        sub->add_option("--q", args.q, "field order (prime power)");
        sub->add_option("--p", args.p, "field characteristic (alternative to --q)");
        sub->add_option("--e", args.e, "extension degree (with --p, default 1)");
    };
    auto add_point_opts = [&](CLI::App* sub) {
        sub->add_option("--beta1", args.beta1, "first marked evaluation point");
        sub->add_option("--beta2", args.beta2, "second marked evaluation point");
        sub->add_option("--alphas", args.alphas, "comma-separated evaluation points")
            ->delimiter(',');
    };

    CLI::App* construct = app.add_subcommand(
        "construct", "build a code and print its spec, layout and generator matrix");
    add_field_opts(construct);
    construct->add_option("--k", args.k, "dimension")->required();
    construct->add_option("--m", args.m, "number of alpha points")->required();
    add_point_opts(construct);
    construct->add_option("--out", out_path, "write output to this file");

    CLI::App* verify = app.add_subcommand(
        "verify", "check the enumerated minimum pair distance against the formula");
    add_field_opts(verify);
    verify->add_option("--k", args.k, "dimension")->required();
    verify->add_option("--m", args.m, "number of alpha points")->required();
    add_point_opts(verify);
    verify->add_option("--jobs", jobs, "worker threads (0 = hardware)");
    verify->add_option("--ceiling", ceiling, "largest allowed message count");
    verify->add_option("--out", out_path, "write output to this file");

    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "exhaustive pair-weight distribution, with closed form for k in {3,4}");
    add_field_opts(spectrum);
    spectrum->add_option("--k", args.k, "dimension")->required();
    spectrum->add_option("--m", args.m, "number of alpha points")->required();
    add_point_opts(spectrum);
    spectrum->add_option("--jobs", jobs, "worker threads (0 = hardware)");
    spectrum->add_option("--ceiling", ceiling, "largest allowed message count");
    spectrum->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    spectrum->add_option("--out", out_path, "write output to this file");

    CLI::App* census = app.add_subcommand(
        "census", "enumerate the root-structure classes and check their cardinalities");
    add_field_opts(census);
    census->add_option("--m", args.m, "number of alpha points")->required();
    add_point_opts(census);
    census->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    census->add_option("--out", out_path, "write output to this file");

    CLI::App* sweep = app.add_subcommand(
        "sweep", "verify + spectrum + census over a parameter grid");
    sweep->add_option("--config", config_path, "key = value grid file");
    sweep->add_option("--q", sweep_q, "field orders (comma list)");
    sweep->add_option("--k", sweep_k, "dimensions (comma list or lo..hi)");
    sweep->add_option("--m", sweep_m, "alpha counts (comma list, lo..hi, or 'all')");
    sweep->add_option("--jobs", jobs, "worker threads (0 = hardware)");
    sweep->add_option("--ceiling", ceiling, "largest allowed message count");
    sweep->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sweep->add_option("--out", out_path, "write output to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*construct) return cmd_construct(args, out_path);
        EnumOptions opts;
        opts.jobs = jobs;
        opts.ceiling = ceiling;
        if (*verify) return cmd_verify(args, opts, out_path);
        if (*spectrum) return cmd_spectrum(args, opts, format, out_path);
        if (*census) return cmd_census(args, format, out_path);
        if (*sweep) {
            SweepConfig cfg;
            if (!config_path.empty()) load_sweep_config(cfg, config_path);
            if (!sweep_q.empty()) apply_sweep_key(cfg, "q", sweep_q);
            if (!sweep_k.empty()) apply_sweep_key(cfg, "k", sweep_k);
            if (!sweep_m.empty()) apply_sweep_key(cfg, "m", sweep_m);
            if (sweep->count("--jobs")) cfg.jobs = jobs;
            if (sweep->count("--ceiling")) cfg.ceiling = ceiling;
            if (sweep->count("--format")) apply_sweep_key(cfg, "format", format);
            if (!out_path.empty()) cfg.out = out_path;
            return cmd_sweep(cfg);
        }
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
