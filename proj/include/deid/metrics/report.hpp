#pragma once

#include <map>
#include <string>

#include "deid/core.hpp"

namespace deid::metrics {

struct Scores {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

struct ReportRow {
    ConfusionCounts counts;
    Scores scores;

    static ReportRow from_counts(const ConfusionCounts& c);
};

// Per-type rows, the micro-averaged total and the no-type-error row. A
// time-domain (pipeline) report has no typed rows.
struct EvalReport {
    bool typed = true;
    std::map<EntityType, ReportRow> per_type;
    ReportRow total;
    ReportRow nte;
};

// Total sums the per-type counts before scoring.
EvalReport build_report(const std::map<EntityType, ConfusionCounts>& per_type, const ConfusionCounts& nte);
EvalReport build_nte_report(const ConfusionCounts& nte);

std::string render_table(const EvalReport& report);
std::string render_json(const EvalReport& report);

} // namespace deid::metrics
