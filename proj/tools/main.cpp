#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stringy/arithfns.hpp"
#include "stringy/batch.hpp"
#include "stringy/conjecture.hpp"
#include "stringy/farey.hpp"
#include "stringy/json_io.hpp"
#include "stringy/mst.hpp"
#include "stringy/strata.hpp"

namespace {

using nlohmann::json;
using namespace stringy;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct SpecOptions {
    int64_t p = 0;
    std::vector<int64_t> d;
    std::vector<int64_t> d_plus;
};

void add_spec_options(CLI::App* cmd, SpecOptions& opts) {
    cmd->add_option("--p", opts.p, "prime p")->required();
    auto* d = cmd->add_option("--d", opts.d, "block vector d (comma separated)")
                  ->delimiter(',');
    auto* dp = cmd->add_option("--d-plus", opts.d_plus,
                               "block vector in the d+ convention (comma separated)")
                   ->delimiter(',');
    d->excludes(dp);
}

RepSpec make_spec(const SpecOptions& opts) {
    if (!opts.d_plus.empty())
        return RepSpec::from_plus(opts.p, opts.d_plus);
    if (opts.d.empty())
        raise(ErrorCode::OutOfDomain, "one of --d or --d-plus is required");
    return RepSpec(opts.p, opts.d);
}

json report_to_json(const ConjectureReport& report) {
    json diff = json::object();
    for (const auto& [value, delta] : report.diff)
        diff[std::to_string(value)] = delta;
    json runs = json::array();
    for (const auto& [a, b] : report.blocks.runs)
        runs.push_back(json::array({a, b}));
    return json{{"spec", spec_to_json(report.spec)},
                {"lhs", ms_to_json(report.lhs)},
                {"rhs", ms_to_json(report.rhs)},
                {"equal", report.equal},
                {"diff", diff},
                {"blocks", {{"trivial", report.blocks.trivial}, {"runs", runs}}}};
}

int run_verify(const SpecOptions& opts, bool as_json) {
    RepSpec spec = make_spec(opts);
    ConjectureReport report = verify_conjecture(spec);
    if (as_json) {
        std::cout << report_to_json(report).dump(2) << "\n";
    } else {
        std::cout << spec.to_string() << "  gamma=" << spec.gamma() << "\n";
        std::cout << "lhs = " << report.lhs.to_string() << "\n";
        std::cout << "rhs = " << report.rhs.to_string() << "\n";
        std::cout << (report.equal ? "multisets equal" : "MULTISETS DIFFER") << "\n";
        if (!report.equal) {
            std::cout << "diff (lhs minus rhs):";
            for (const auto& [value, delta] : report.diff)
                std::cout << " " << value << ":" << (delta > 0 ? "+" : "") << delta;
            std::cout << "\n";
        }
    }
    return report.equal ? kExitOk : kExitVerificationFailure;
}

int run_mst(const SpecOptions& opts, const std::string& variant, bool with_euler,
            bool with_origin, int64_t subset_cap) {
    RepSpec spec = make_spec(opts);
    json out;
    bool equal = true;
    if (variant == "alpha") {
        out = rf_to_json(compute_mst(spec, MstVariant::alpha_closed).value);
    } else if (variant == "zp") {
        out = rf_to_json(compute_mst(spec, MstVariant::zp_closed).value);
    } else if (variant == "subsets") {
        out = rf_to_json(compute_mst(spec, MstVariant::alpha_subsets, subset_cap).value);
    } else { // all
        RatFunc alpha = mst_alpha(spec);
        RatFunc zp = mst_zp(spec);
        RatFunc subsets = mst_alpha_subsets(spec, subset_cap);
        equal = rf_eq(alpha, zp) && rf_eq(alpha, subsets);
        out = json{{"alpha", rf_to_json(alpha)},
                   {"zp", rf_to_json(zp)},
                   {"subsets", rf_to_json(subsets)},
                   {"equal", equal}};
    }
    if (with_euler)
        out["euler"] = stringy_euler(spec).to_string();
    if (with_origin) {
        RatFunc base = variant == "zp" ? mst_zp(spec) : mst_alpha(spec);
        out["origin"] = rf_to_json(mst_at_origin(spec, base));
    }
    std::cout << out.dump(2) << "\n";
    return equal ? kExitOk : kExitVerificationFailure;
}

int run_farey(int64_t order, int64_t buckets_p) {
    FareySeq f = farey_seq(order);
    json elems = json::array();
    for (const Fraction& y : f.elems)
        elems.push_back(y.to_string());
    json out{{"order", order}, {"elems", elems}};
    if (buckets_p > 0) {
        auto buckets = farey_buckets(f, buckets_p);
        json jb = json::array();
        for (const auto& bucket : buckets) {
            json one = json::array();
            for (const Fraction& y : bucket)
                one.push_back(y.to_string());
            jb.push_back(std::move(one));
        }
        out["p"] = buckets_p;
        out["buckets"] = jb;
        if (order > 1) {
            BlockSequences blocks = block_sequences(f, buckets_p);
            out["blocks"] = json{{"a", blocks.a}, {"b", blocks.b}};
        } else {
            out["blocks"] = json{{"trivial", true}};
        }
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

std::vector<std::pair<int64_t, int64_t>> parse_subset(const std::string& text) {
    std::vector<std::pair<int64_t, int64_t>> pairs;
    std::string token;
    std::istringstream stream(text);
    while (std::getline(stream, token, ',')) {
        auto colon = token.find(':');
        if (colon == std::string::npos)
            raise(ErrorCode::OutOfDomain, "subset entries look like sigma:i, got " + token);
        pairs.emplace_back(std::stoll(token.substr(0, colon)),
                           std::stoll(token.substr(colon + 1)));
    }
    if (pairs.empty())
        raise(ErrorCode::EmptySubset, "empty subset");
    return pairs;
}

int run_strata(const SpecOptions& opts, const std::string& subset_text) {
    RepSpec spec = make_spec(opts);
    json out{{"spec", spec_to_json(spec)}};
    Discrepancies disc = discrepancies(spec);
    out["discrepancy"] = json{{"upstairs", disc.upstairs}, {"quotient", disc.quotient}};

    if (!subset_text.empty()) {
        StratumSpec st;
        st.subset = parse_subset(subset_text);
        st.anchor = st.subset.front();
        int64_t g = subset_gcd(st);
        out["subset_gcd"] = g;
        out["class"] = lp_to_json(stratum_class(spec, st));
        auto type = stratum_type(spec, st);
        if (!type.has_value()) {
            out["type"] = "regular";
        } else {
            json coeffs = json::array();
            for (const Fraction& a : type->coeffs)
                coeffs.push_back(a.to_string());
            out["type"] = json{{"n", type->n}, {"weights", type->weights}, {"coeffs", coeffs}};
            out["local_mst"] = rf_to_json(batyrev_local(*type));
            out["local_mst_closed"] = rf_to_json(local_mst_closed(spec, g));
        }
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int run_oracle(const SpecOptions& opts, int64_t subset_cap) {
    RepSpec spec = make_spec(opts);
    bool all_ok = true;
    auto check = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "[ok]   " : "[FAIL] ") << name << "\n";
        all_ok = all_ok && ok;
    };

    RatFunc alpha = mst_alpha(spec);
    check("mst_alpha = mst_zp", rf_eq(alpha, mst_zp(spec)));
    if (spec.n_r(1) <= subset_cap)
        check("mst_alpha = mst_alpha_subsets", rf_eq(alpha, mst_alpha_subsets(spec, subset_cap)));
    else
        std::cout << "[skip] subset oracle (|I*| = " << spec.n_r(1) << " > cap "
                  << subset_cap << ")\n";

    ConjectureReport report = verify_conjecture(spec);
    check("multiset identity", report.equal);
    check("euler number", stringy_euler(spec, alpha) ==
                              Fraction(mpz_class(spec.bold_d()), mpz_class(spec.gamma() + 1)));

    // Batyrev vs closed form on one stratum per achievable gcd >= 2.
    for (int64_t sigma = 1; sigma <= spec.block_count(); ++sigma) {
        for (int64_t i = 2; i <= spec.parts()[static_cast<size_t>(sigma - 1)]; ++i) {
            StratumSpec st{{{sigma, i}}, {sigma, i}};
            auto type = stratum_type(spec, st);
            if (!type.has_value())
                continue;
            bool ok = rf_eq(batyrev_local(*type), local_mst_closed(spec, i));
            check("batyrev vs closed form, S = {(" + std::to_string(sigma) + "," +
                      std::to_string(i) + ")}",
                  ok);
        }
    }
    return all_ok ? kExitOk : kExitVerificationFailure;
}

int run_batch_cmd(BatchConfig cfg) {
    BatchResult result = run_batch(cfg);
    if (!cfg.output_path.empty())
        write_report(cfg, result);
    else
        std::cout << (cfg.format == ReportFormat::csv ? render_csv(result)
                                                      : render_json(cfg, result));
    std::cerr << "rows=" << result.rows.size() << " failures=" << result.failures
              << " elapsed_ms=" << result.elapsed_ms << "\n";
    return result.failures == 0 ? kExitOk : kExitVerificationFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"stringy motivic invariants of linear quotient singularities"};
    app.require_subcommand(1);

    SpecOptions verify_opts;
    std::string verify_report;
    auto* verify = app.add_subcommand("verify", "check the multiset identity for one spec");
    add_spec_options(verify, verify_opts);
    verify->add_option("--report", verify_report, "emit the full report (json)")
        ->check(CLI::IsMember({"json"}));

    SpecOptions mst_opts;
    std::string mst_variant = "alpha";
    bool mst_euler = false;
    bool mst_origin = false;
    int64_t subset_cap = 20;
    auto* mst_cmd = app.add_subcommand("mst", "compute the stringy motivic invariant");
    add_spec_options(mst_cmd, mst_opts);
    mst_cmd->add_option("--variant", mst_variant, "alpha | zp | subsets | all")
        ->check(CLI::IsMember({"alpha", "zp", "subsets", "all"}));
    mst_cmd->add_flag("--euler", mst_euler, "also print the stringy Euler number");
    mst_cmd->add_flag("--origin", mst_origin, "also print the invariant at the origin");
    mst_cmd->add_option("--subset-cap", subset_cap, "cap on |I*| for the subset oracle");

    SpecOptions euler_opts;
    auto* euler_cmd = app.add_subcommand("euler", "print the stringy Euler number");
    add_spec_options(euler_cmd, euler_opts);

    SpecOptions classify_opts;
    auto* classify_cmd = app.add_subcommand("classify", "MMP singularity class");
    add_spec_options(classify_cmd, classify_opts);

    SpecOptions strata_opts;
    std::string subset_text;
    auto* strata_cmd = app.add_subcommand("strata", "stratum types and local invariants");
    add_spec_options(strata_cmd, strata_opts);
    strata_cmd->add_option("--subset", subset_text, "stratum subset, e.g. \"1:2,1:4\"");

    int64_t farey_order = 0;
    int64_t farey_p = 0;
    auto* farey_cmd = app.add_subcommand("farey", "Farey sequence and bucket decomposition");
    farey_cmd->add_option("--order", farey_order, "Farey order m")->required();
    farey_cmd->add_option("--buckets", farey_p, "bucket the sequence by this prime");

    SpecOptions theta_opts;
    std::string theta_y;
    auto* theta_cmd = app.add_subcommand("theta", "evaluate the exponent function theta");
    add_spec_options(theta_cmd, theta_opts);
    theta_cmd->add_option("--y", theta_y, "argument in (0,1], e.g. 1/2")->required();

    SpecOptions sht_opts;
    int64_t sht_j = 0;
    auto* sht_cmd = app.add_subcommand("sht", "evaluate the shift function sht");
    add_spec_options(sht_cmd, sht_opts);
    sht_cmd->add_option("--j", sht_j, "argument j >= 1")->required();

    SpecOptions oracle_opts;
    int64_t oracle_cap = 20;
    auto* oracle_cmd = app.add_subcommand("oracle", "run all per-spec cross-checks");
    add_spec_options(oracle_cmd, oracle_opts);
    oracle_cmd->add_option("--subset-cap", oracle_cap, "cap on |I*| for the subset oracle");

    BatchConfig batch_cfg;
    std::string batch_format = "auto";
    auto* batch_cmd = app.add_subcommand("batch", "sweep primes and partitions");
    batch_cmd->add_option("--prime-max", batch_cfg.prime_max, "largest prime to test");
    batch_cmd->add_option("--dim-max", batch_cfg.total_dim_max, "largest |d+| to test");
    batch_cmd->add_flag("--indecomposable-only", batch_cfg.indecomposable_only,
                        "only single-block specs with 3 <= d+ <= p");
    batch_cmd->add_option("--workers", batch_cfg.worker_count, "worker thread count");
    batch_cmd->add_option("--out", batch_cfg.output_path, "report file path");
    batch_cmd->add_option("--format", batch_format, "csv | json (default: from extension)")
        ->check(CLI::IsMember({"auto", "csv", "json"}));
    batch_cmd->add_flag("--timings", batch_cfg.record_timings,
                        "record per-row runtimes (makes reports non-reproducible)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(verify))
            return run_verify(verify_opts, verify_report == "json");
        if (app.got_subcommand(mst_cmd))
            return run_mst(mst_opts, mst_variant, mst_euler, mst_origin, subset_cap);
        if (app.got_subcommand(euler_cmd)) {
            std::cout << stringy_euler(make_spec(euler_opts)).to_string() << "\n";
            return kExitOk;
        }
        if (app.got_subcommand(classify_cmd)) {
            std::cout << to_string(classify_mmp(make_spec(classify_opts))) << "\n";
            return kExitOk;
        }
        if (app.got_subcommand(strata_cmd))
            return run_strata(strata_opts, subset_text);
        if (app.got_subcommand(farey_cmd))
            return run_farey(farey_order, farey_p);
        if (app.got_subcommand(theta_cmd)) {
            std::cout << theta(make_spec(theta_opts), Fraction::parse(theta_y)) << "\n";
            return kExitOk;
        }
        if (app.got_subcommand(sht_cmd)) {
            std::cout << sht(make_spec(sht_opts), sht_j) << "\n";
            return kExitOk;
        }
        if (app.got_subcommand(oracle_cmd))
            return run_oracle(oracle_opts, oracle_cap);
        if (app.got_subcommand(batch_cmd)) {
            if (batch_format == "json" ||
                (batch_format == "auto" && batch_cfg.output_path.ends_with(".json")))
                batch_cfg.format = ReportFormat::json;
            else
                batch_cfg.format = ReportFormat::csv;
            return run_batch_cmd(batch_cfg);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
