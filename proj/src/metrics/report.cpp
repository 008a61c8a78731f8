#include "deid/metrics/report.hpp"

#include <cstdio>

#include <json.hpp>

#include "deid/metrics/ner.hpp"

namespace deid::metrics {

namespace {

std::string row_line(const std::string& name, const ReportRow& r) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-14s %9.3f %9.3f %9.3f %7zu %7zu %7zu\n", name.c_str(), r.scores.precision,
                  r.scores.recall, r.scores.f1, r.counts.tp, r.counts.fp, r.counts.fn);
    return buf;
}

nlohmann::json row_json(const ReportRow& r) {
    return {{"precision", r.scores.precision}, {"recall", r.scores.recall}, {"f1", r.scores.f1},
            {"tp", r.counts.tp},               {"fp", r.counts.fp},         {"fn", r.counts.fn}};
}

} // namespace

ReportRow ReportRow::from_counts(const ConfusionCounts& c) {
    const double p = precision(c);
    const double r = recall(c);
    return {c, {p, r, f1(p, r)}};
}

EvalReport build_report(const std::map<EntityType, ConfusionCounts>& per_type, const ConfusionCounts& nte) {
    EvalReport report;
    ConfusionCounts total;
    for (const auto& [type, counts] : per_type) {
        report.per_type[type] = ReportRow::from_counts(counts);
        total += counts;
    }
    report.total = ReportRow::from_counts(total);
    report.nte = ReportRow::from_counts(nte);
    return report;
}

EvalReport build_nte_report(const ConfusionCounts& nte) {
    EvalReport report;
    report.typed = false;
    report.nte = ReportRow::from_counts(nte);
    return report;
}

std::string render_table(const EvalReport& report) {
    char header[160];
    std::snprintf(header, sizeof header, "%-14s %9s %9s %9s %7s %7s %7s\n", "Entity Type", "Precision", "Recall",
                  "F1 Score", "TP", "FP", "FN");
    std::string out = header;
    if (report.typed) {
        for (const auto& [type, row] : report.per_type) out += row_line(std::string(entity_name(type)), row);
        out += row_line("Total", report.total);
    }
    out += row_line("NTE", report.nte);
    return out;
}

std::string render_json(const EvalReport& report) {
    nlohmann::json doc;
    if (report.typed) {
        nlohmann::json per_type = nlohmann::json::object();
        for (const auto& [type, row] : report.per_type) per_type[std::string(entity_code(type))] = row_json(row);
        doc["per_type"] = std::move(per_type);
        doc["total"] = row_json(report.total);
    }
    doc["nte"] = row_json(report.nte);
    return doc.dump(2) + "\n";
}

} // namespace deid::metrics
