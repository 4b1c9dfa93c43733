#include "bchsynth/report_io.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace bchsynth {

namespace {

std::string fixed6(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

nlohmann::json candidate_json(const CandidateEntry& e)
{
    nlohmann::json j;
    j["poly_octal"] = e.poly.to_octal();
    j["poly"] = e.poly.to_term_string();
    j["degree"] = e.degree;
    j["score"] = e.score;
    j["normalized"] = e.normalized;
    j["valid"] = e.valid;
    j["est_k"] = e.est_k;
    j["est_d"] = e.est_d;
    j["est_t"] = e.est_t;
    return j;
}

nlohmann::json config_json(const DetectorConfig& cfg)
{
    nlohmann::json j;
    j["pair_cap"] = cfg.pair_cap;
    j["divisor_cap"] = cfg.divisor_cap;
    j["seed"] = cfg.seed;
    j["max_blocks"] = cfg.max_blocks;
    j["offset"] = cfg.offset;
    j["allow_non_bch_n"] = cfg.allow_non_bch_n;
    j["threads"] = cfg.threads;
    return j;
}

}  // namespace

ReportFormat parse_report_format(std::string_view name)
{
    if (name == "human")
        return ReportFormat::Human;
    if (name == "json")
        return ReportFormat::Json;
    if (name == "csv")
        return ReportFormat::Csv;
    throw std::invalid_argument("report: unknown output format '" + std::string(name) + "'");
}

std::string report_csv(const DetectionReport& report, std::uint32_t seed)
{
    std::string out = "# seed=" + std::to_string(seed) + "\n";
    out += "n,poly_octal,degree,score,normalized,valid,est_k,est_t\n";
    for (const CandidateEntry& e : report.candidates) {
        out += std::to_string(report.n) + ',' + e.poly.to_octal() + ',' +
               std::to_string(e.degree) + ',' + std::to_string(e.score) + ',' +
               fixed6(e.normalized) + ',' + (e.valid ? "1" : "0") + ',' +
               std::to_string(e.est_k) + ',' + std::to_string(e.est_t) + '\n';
    }
    return out;
}

std::string report_json(const DetectionReport& report, const DetectorConfig& cfg)
{
    nlohmann::json j;
    j["n"] = report.n;
    j["pairs_considered"] = report.pairs_considered;
    j["usable_blocks"] = report.usable_blocks;
    j["skipped_zero_blocks"] = report.skipped_zero;
    j["pairs_sampled"] = report.sampled;
    j["divisor_truncations"] = report.truncation_events;
    j["config"] = config_json(cfg);
    j["candidates"] = nlohmann::json::array();
    for (const CandidateEntry& e : report.candidates)
        j["candidates"].push_back(candidate_json(e));
    j["winner"] = report.winner ? candidate_json(*report.winner) : nlohmann::json(nullptr);
    if (!report.diagnostic.empty())
        j["diagnostic"] = report.diagnostic;
    return j.dump(2) + "\n";
}

std::string report_human(const DetectionReport& report)
{
    std::string out;
    out += "block length n = " + std::to_string(report.n) + ", pairs = " +
           std::to_string(report.pairs_considered) + ", usable blocks = " +
           std::to_string(report.usable_blocks) + "\n";
    if (report.sampled)
        out += "note: pair budget exceeded, scores based on a seeded sample\n";
    if (report.winner) {
        const CandidateEntry& w = *report.winner;
        out += "winner: g(X) = " + w.poly.to_term_string() + " = " + w.poly.to_octal() +
               " (oct), score " + std::to_string(w.score) + "/" +
               std::to_string(report.pairs_considered) + " (" + fixed6(w.normalized) + ")\n";
        out += "estimated code: (" + std::to_string(report.n) + "," + std::to_string(w.est_k) +
               "," + std::to_string(w.est_t) + "), d_min >= " + std::to_string(w.est_d) + "\n";
    } else {
        out += "no valid generator candidate";
        if (!report.diagnostic.empty())
            out += " (" + report.diagnostic + ")";
        out += "\n";
    }
    out += "rank octal          degree score     normalized valid\n";
    std::size_t shown = 0;
    for (const CandidateEntry& e : report.candidates) {
        if (++shown > 20) {
            out += "... " + std::to_string(report.candidates.size() - 20) + " more\n";
            break;
        }
        char line[128];
        std::snprintf(line, sizeof(line), "%4zu %-15s %6d %9llu %10s %s\n", shown,
                      e.poly.to_octal().c_str(), e.degree,
                      static_cast<unsigned long long>(e.score), fixed6(e.normalized).c_str(),
                      e.valid ? "yes" : "no");
        out += line;
    }
    return out;
}

std::string sweep_csv(const SweepReport& report, std::uint32_t seed)
{
    std::string out = "# seed=" + std::to_string(seed) + "\n";
    out += "n,best_poly_octal,normalized,valid,chosen\n";
    for (const SweepEntry& e : report.entries) {
        const bool chosen = report.chosen_n && *report.chosen_n == e.n;
        out += std::to_string(e.n) + ',';
        if (e.best) {
            out += e.best->poly.to_octal() + ',' + fixed6(e.best->normalized) + ",1,";
        } else {
            out += ",0.000000,0,";
        }
        out += chosen ? "1\n" : "0\n";
    }
    return out;
}

std::string sweep_json(const SweepReport& report, const DetectorConfig& cfg)
{
    nlohmann::json j;
    j["config"] = config_json(cfg);
    j["entries"] = nlohmann::json::array();
    for (const SweepEntry& e : report.entries) {
        nlohmann::json entry;
        entry["n"] = e.n;
        entry["degraded"] = e.degraded;
        entry["best"] = e.best ? candidate_json(*e.best) : nlohmann::json(nullptr);
        entry["chosen"] = report.chosen_n && *report.chosen_n == e.n;
        j["entries"].push_back(std::move(entry));
    }
    j["chosen_n"] = report.chosen_n ? nlohmann::json(*report.chosen_n) : nlohmann::json(nullptr);
    j["chosen_g_octal"] =
        report.chosen_g ? nlohmann::json(report.chosen_g->to_octal()) : nlohmann::json(nullptr);
    return j.dump(2) + "\n";
}

std::string sweep_human(const SweepReport& report)
{
    std::string out = "   n best (oct)      normalized chosen\n";
    for (const SweepEntry& e : report.entries) {
        char line[128];
        const bool chosen = report.chosen_n && *report.chosen_n == e.n;
        if (e.best)
            std::snprintf(line, sizeof(line), "%4u %-15s %10s %s\n", e.n,
                          e.best->poly.to_octal().c_str(), fixed6(e.best->normalized).c_str(),
                          chosen ? "  <==" : "");
        else
            std::snprintf(line, sizeof(line), "%4u %-15s %10s %s\n", e.n,
                          e.degraded ? "(short)" : "-", "-", "");
        out += line;
    }
    if (report.chosen_n && report.chosen_g)
        out += "chosen block length " + std::to_string(*report.chosen_n) + " with g(X) = " +
               report.chosen_g->to_term_string() + " = " + report.chosen_g->to_octal() +
               " (oct)\n";
    else
        out += "no block length produced a valid generator candidate\n";
    return out;
}

}  // namespace bchsynth
