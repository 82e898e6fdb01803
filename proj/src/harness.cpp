#include "primesum/harness.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "primesum/convert.hpp"
#include "primesum/expansion.hpp"

namespace primesum {

std::vector<long long> default_sweep_grid() {
    return {10000, 30000, 100000, 300000, 1000000, 3000000, 10000000};
}

std::vector<ErrorRecord> run_error_sweep(const std::vector<long long>& n_grid,
                                         const std::vector<int>& orders,
                                         const CipollaCoeffs& coeffs, const SweepConfig& cfg) {
    long long prev = 0;
    for (long long n : n_grid) {
        if (n <= prev) throw std::invalid_argument("sweep: grid must be strictly increasing");
        if (n < 3) throw std::invalid_argument("sweep: every grid point must be >= 3");
        prev = n;
    }
    if (orders.empty()) throw std::invalid_argument("sweep: need at least one order");

    std::map<int, Expansion> expansions;
    for (int m : orders) {
        if (m < 1 || m > coeffs.order)
            throw std::invalid_argument("sweep: order " + std::to_string(m) +
                                        " not covered by the coefficient set (max " +
                                        std::to_string(coeffs.order) + ")");
        expansions.emplace(m, assemble_expansion(coeffs, m));
    }

    std::vector<PrimeSumCheckpoint> checkpoints = checkpoint_stream(n_grid, cfg.sieve);

    std::vector<ErrorRecord> records;
    records.reserve(checkpoints.size());
    for (const PrimeSumCheckpoint& cp : checkpoints) {
        ErrorRecord rec;
        rec.n = cp.count;
        rec.exact_sum = cp.sum;
        Real exact = to_real(rec.exact_sum);
        Real rn = static_cast<Real>(rec.n);
        for (const auto& [m, expansion] : expansions) {
            OrderMetrics metrics;
            metrics.approx = eval_sum_approx(expansion, rec.n, cfg.eval);
            metrics.abs_error = rabs(metrics.approx - exact);
            metrics.rel_error = metrics.abs_error / exact;
            metrics.normalized_error = metrics.abs_error / (rn * eval_c_m(rn, m, cfg.eval));
            rec.by_order.emplace(m, metrics);
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::string emit_report(const std::vector<ErrorRecord>& records, ReportFormat format) {
    static const char* kColumns[] = {"n",         "exact_sum", "m",       "approx",
                                     "abs_error", "rel_error", "normalized_error"};

    std::vector<std::vector<std::string>> rows;
    for (const ErrorRecord& rec : records)
        for (const auto& [m, metrics] : rec.by_order)
            rows.push_back({std::to_string(rec.n), rec.exact_sum.get_str(), std::to_string(m),
                            format_real(metrics.approx), format_real(metrics.abs_error),
                            format_real(metrics.rel_error),
                            format_real(metrics.normalized_error)});

    std::ostringstream os;
    if (format == ReportFormat::csv) {
        for (std::size_t c = 0; c < 7; ++c) os << (c ? "," : "") << kColumns[c];
        os << "\n";
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < 7; ++c) os << (c ? "," : "") << row[c];
            os << "\n";
        }
        return os.str();
    }

    std::size_t width[7];
    for (std::size_t c = 0; c < 7; ++c) {
        width[c] = std::string(kColumns[c]).size();
        for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
    }
    for (std::size_t c = 0; c < 7; ++c)
        os << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << kColumns[c];
    os << "\n";
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < 7; ++c)
            os << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << row[c];
        os << "\n";
    }
    return os.str();
}

}  // namespace primesum
