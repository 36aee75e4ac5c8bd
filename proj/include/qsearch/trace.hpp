#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace qsearch {

// Success probability P_t(q) for q = 0..q_max (q_max + 1 entries; the value
// is recorded before each step and once after the last).
struct Trace {
    std::string engine;              // predicted | secular | iterated | lattice | dense
    std::vector<double> probs;
    std::vector<double> site_probs;  // lattice engine only: target-site probability
    std::size_t q_peak = 0;
    double p_peak = 0.0;
    std::size_t q_first_peak = 0;    // first local maximum, for quasi-periodic curves
};

struct Peak {
    std::size_t q_peak = 0;
    double p_peak = 0.0;
    std::size_t q_first_peak = 0;
};

// Global maximum plus the first local maximum of the curve.
// Throws PeakError on an empty or identically-zero curve.
Peak find_peak(const Trace& trace);

// Fill the peak fields of the trace in place.
void finalize_peaks(Trace& trace);

// CSV layout: '#'-prefixed comment lines (engine tag plus caller-provided
// lines), a column header, then one row per iteration. Floating point is
// printed with 17 significant digits so re-runs are byte-identical.
void write_trace_csv(std::ostream& os, const Trace& trace,
                     const std::vector<std::string>& extra_comments = {});

// "%.17g" formatting used for every float the tools emit.
std::string format_g17(double v);

} // namespace qsearch
