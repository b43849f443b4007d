#include "stringy/batch.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "stringy/conjecture.hpp"
#include "stringy/mst.hpp"

namespace stringy {

namespace {

int64_t plus_bold_d(const std::vector<int64_t>& d_plus) {
    int64_t sum = 0;
    for (int64_t dp : d_plus)
        sum += dp * (dp - 1) / 2;
    return sum;
}

void descend(int64_t remaining, int64_t max_part, std::vector<int64_t>& current,
             int64_t p, std::vector<std::vector<int64_t>>& out) {
    if (remaining == 0) {
        if (plus_bold_d(current) >= p)
            out.push_back(current);
        return;
    }
    for (int64_t part = std::min(remaining, max_part); part >= 2; --part) {
        current.push_back(part);
        descend(remaining - part, part, current, p, out);
        current.pop_back();
    }
}

BatchRow evaluate_unit(int64_t p, const std::vector<int64_t>& d_plus, bool record_timing) {
    auto started = std::chrono::steady_clock::now();

    RepSpec spec = RepSpec::from_plus(p, d_plus);
    BatchRow row;
    row.p = p;
    row.d_plus = d_plus;
    row.bold_d = spec.bold_d();
    row.gamma = spec.gamma();

    ConjectureReport report = verify_conjecture(spec);
    row.conjecture_ok = report.equal;
    if (!report.equal)
        row.diff = report.diff;

    RatFunc alpha = mst_alpha(spec);
    row.mst_eq_ok = rf_eq(alpha, mst_zp(spec));
    row.euler = stringy_euler(spec, alpha);
    row.mmp = classify_mmp(spec);

    if (record_timing) {
        auto elapsed = std::chrono::steady_clock::now() - started;
        row.micros = std::chrono::duration_cast<std::chrono::microseconds>(elapsed).count();
    }
    return row;
}

std::string join_plus(const std::vector<int64_t>& parts) {
    std::ostringstream out;
    for (size_t i = 0; i < parts.size(); ++i)
        out << (i ? "+" : "") << parts[i];
    return out.str();
}

} // namespace

std::vector<std::vector<int64_t>> valid_partitions(int64_t p, int64_t total) {
    std::vector<std::vector<int64_t>> out;
    if (total < 2)
        return out;
    std::vector<int64_t> current;
    descend(total, std::min(total, p), current, p, out);
    return out;
}

int effective_worker_count(const BatchConfig& cfg) {
    if (const char* env = std::getenv("STRINGY_WORKERS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1)
            return static_cast<int>(v);
    }
    return std::max(1, cfg.worker_count);
}

BatchResult run_batch(const BatchConfig& cfg) {
    if (cfg.prime_max < 2)
        raise(ErrorCode::OutOfDomain, "prime_max must be >= 2");
    if (!cfg.indecomposable_only && cfg.total_dim_max < 2)
        raise(ErrorCode::OutOfDomain, "total_dim_max must be >= 2");

    auto started = std::chrono::steady_clock::now();

    // Work units in canonical order: p ascending, then partition lex.
    std::vector<std::pair<int64_t, std::vector<int64_t>>> units;
    for (int64_t p = 2; p <= cfg.prime_max; ++p) {
        if (!is_prime(p))
            continue;
        if (cfg.indecomposable_only) {
            for (int64_t dp = 3; dp <= p; ++dp)
                if (dp * (dp - 1) / 2 >= p)
                    units.emplace_back(p, std::vector<int64_t>{dp});
        } else {
            std::vector<std::vector<int64_t>> parts;
            for (int64_t total = 2; total <= cfg.total_dim_max; ++total)
                for (auto& partition : valid_partitions(p, total))
                    parts.push_back(std::move(partition));
            std::sort(parts.begin(), parts.end());
            for (auto& partition : parts)
                units.emplace_back(p, std::move(partition));
        }
    }

    BatchResult result;
    result.rows.resize(units.size());

    const int workers =
        std::min<int>(effective_worker_count(cfg), std::max<size_t>(units.size(), 1));
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (;;) {
            size_t idx = next.fetch_add(1);
            if (idx >= units.size())
                break;
            result.rows[idx] =
                evaluate_unit(units[idx].first, units[idx].second, cfg.record_timings);
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(work);
        for (auto& t : pool)
            t.join();
    }

    for (const BatchRow& row : result.rows)
        if (!row.conjecture_ok || !row.mst_eq_ok)
            ++result.failures;

    auto elapsed = std::chrono::steady_clock::now() - started;
    result.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    return result;
}

std::string render_csv(const BatchResult& result) {
    std::ostringstream out;
    out << "p,d_plus,D,gamma,conjecture_ok,mst_eq_ok,euler_num,euler_den,mmp_class,micros\n";
    for (const BatchRow& row : result.rows) {
        out << row.p << ',' << join_plus(row.d_plus) << ',' << row.bold_d << ',' << row.gamma
            << ',' << (row.conjecture_ok ? "true" : "false") << ','
            << (row.mst_eq_ok ? "true" : "false") << ',' << row.euler.num().get_str() << ','
            << row.euler.den().get_str() << ',' << to_string(row.mmp) << ',' << row.micros
            << '\n';
    }
    return out.str();
}

std::string render_json(const BatchConfig& cfg, const BatchResult& result) {
    nlohmann::json rows = nlohmann::json::array();
    for (const BatchRow& row : result.rows) {
        nlohmann::json j{{"p", row.p},
                         {"d_plus", row.d_plus},
                         {"D", row.bold_d},
                         {"gamma", row.gamma},
                         {"conjecture_ok", row.conjecture_ok},
                         {"mst_eq_ok", row.mst_eq_ok},
                         {"euler", row.euler.to_string()},
                         {"mmp_class", to_string(row.mmp)},
                         {"micros", row.micros}};
        if (!row.diff.empty()) {
            nlohmann::json diff = nlohmann::json::object();
            for (const auto& [value, delta] : row.diff)
                diff[std::to_string(value)] = delta;
            j["diff"] = diff;
        }
        rows.push_back(std::move(j));
    }
    nlohmann::json doc{{"schema", 1},
                       {"prime_max", cfg.prime_max},
                       {"total_dim_max", cfg.total_dim_max},
                       {"indecomposable_only", cfg.indecomposable_only},
                       {"rows", rows},
                       {"summary",
                        {{"rows", result.rows.size()}, {"failures", result.failures}}}};
    return doc.dump(2) + "\n";
}

void write_report(const BatchConfig& cfg, const BatchResult& result) {
    if (cfg.output_path.empty())
        return;
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out)
        raise(ErrorCode::IoError, "cannot open " + cfg.output_path);
    out << (cfg.format == ReportFormat::csv ? render_csv(result)
                                            : render_json(cfg, result));
    if (!out)
        raise(ErrorCode::IoError, "failed writing " + cfg.output_path);
}

} // namespace stringy
