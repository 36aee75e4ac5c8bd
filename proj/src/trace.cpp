#include "qsearch/trace.hpp"

#include <cstdio>
#include <ostream>

#include "qsearch/errors.hpp"

namespace qsearch {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Peak find_peak(const Trace& trace) {
    if (trace.probs.empty())
        throw PeakError("empty trace");

    Peak pk;
    bool any = false;
    for (std::size_t q = 0; q < trace.probs.size(); ++q) {
        if (trace.probs[q] > 0.0) any = true;
        if (trace.probs[q] > pk.p_peak) {
            pk.p_peak = trace.probs[q];
            pk.q_peak = q;
        }
    }
    if (!any)
        throw PeakError("trace is identically zero");

    // First local maximum (plateaus count once the curve turns down).
    pk.q_first_peak = pk.q_peak;
    for (std::size_t q = 0; q + 1 < trace.probs.size(); ++q) {
        bool rose = q == 0 || trace.probs[q] >= trace.probs[q - 1];
        if (rose && trace.probs[q] > trace.probs[q + 1] && trace.probs[q] > 0.0) {
            pk.q_first_peak = q;
            break;
        }
    }
    return pk;
}

void finalize_peaks(Trace& trace) {
    Peak pk = find_peak(trace);
    trace.q_peak = pk.q_peak;
    trace.p_peak = pk.p_peak;
    trace.q_first_peak = pk.q_first_peak;
}

void write_trace_csv(std::ostream& os, const Trace& trace,
                     const std::vector<std::string>& extra_comments) {
    os << "# engine=" << trace.engine << "\n";
    for (const std::string& line : extra_comments)
        os << "# " << line << "\n";
    bool site = !trace.site_probs.empty();
    os << (site ? "q,prob,site_prob" : "q,prob") << "\n";
    for (std::size_t q = 0; q < trace.probs.size(); ++q) {
        os << q << ',' << format_g17(trace.probs[q]);
        if (site) os << ',' << format_g17(trace.site_probs[q]);
        os << "\n";
    }
}

} // namespace qsearch
