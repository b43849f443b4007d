#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stringy/fraction.hpp"
#include "stringy/repspec.hpp"
#include "stringy/strata.hpp"

namespace stringy {

enum class ReportFormat { csv, json };

struct BatchConfig {
    int64_t prime_max = 31;
    int64_t total_dim_max = 12; // bound on |d⁺| for the partition sweep
    bool indecomposable_only = false;
    int worker_count = 4; // STRINGY_WORKERS overrides when set
    std::string output_path;  // empty: no file written
    ReportFormat format = ReportFormat::csv;
    // Measured per-row runtimes make reports non-reproducible, so they are
    // opt-in; the micros column reads 0 by default.
    bool record_timings = false;
};

struct BatchRow {
    int64_t p = 0;
    std::vector<int64_t> d_plus;
    int64_t bold_d = 0;
    int64_t gamma = 0;
    bool conjecture_ok = false;
    bool mst_eq_ok = false;
    Fraction euler;
    MmpClass mmp = MmpClass::regular;
    int64_t micros = 0;
    std::map<int64_t, int64_t> diff; // nonempty only on failure
};

struct BatchResult {
    std::vector<BatchRow> rows;
    int64_t failures = 0;
    int64_t elapsed_ms = 0;
};

/// Non-increasing partitions of `total` with parts in [2, p] and
/// D_{d⁺} ≥ p. Parts equal to 1 are omitted: they are trivial summands.
std::vector<std::vector<int64_t>> valid_partitions(int64_t p, int64_t total);

/// Effective worker count: config value unless STRINGY_WORKERS is set.
int effective_worker_count(const BatchConfig& cfg);

/// Runs the sweep. Scheduling is dynamic across workers but rows are
/// emitted in lexicographic (p, partition) order, so reports do not depend
/// on the worker count.
BatchResult run_batch(const BatchConfig& cfg);

std::string render_csv(const BatchResult& result);
std::string render_json(const BatchConfig& cfg, const BatchResult& result);

/// Writes the report to cfg.output_path in cfg.format.
void write_report(const BatchConfig& cfg, const BatchResult& result);

} // namespace stringy
