#include "lyn/report.hpp"

#include <sstream>

#include <json.hpp>

namespace lyn {
namespace {

using nlohmann::json;

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos)
        return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"')
            quoted += "\"\"";
        else
            quoted += c;
    }
    quoted += '"';
    return quoted;
}

json greedy_to_json(const GreedyEntry& g) {
    return json{{"permutation", g.permutation},
                {"factor_count", g.factor_count},
                {"rank", g.rank},
                {"backtracking", g.backtracking}};
}

GreedyEntry greedy_from_json(const json& j) {
    GreedyEntry g;
    g.permutation = j.at("permutation").get<std::string>();
    g.factor_count = j.at("factor_count").get<std::size_t>();
    g.rank = j.at("rank").get<std::size_t>();
    g.backtracking = j.at("backtracking").get<bool>();
    return g;
}

} // namespace

RankingReport run_rank_experiment(const Text& text, std::size_t sigma_limit, unsigned threads) {
    RankingReport report = exhaustive_search(text, SearchObjective::minimize, sigma_limit, threads);
    const GreedyResult with = greedy_order(text, SearchObjective::minimize, true);
    const GreedyResult without = greedy_order(text, SearchObjective::minimize, false);
    report.greedy = GreedyEntry{with.order.letters(), with.factorization.count(),
                                report.rank_of_count(with.factorization.count()), true};
    report.greedy_no_backtrack =
        GreedyEntry{without.order.letters(), without.factorization.count(),
                    report.rank_of_count(without.factorization.count()), false};
    return report;
}

std::string emit_report(const RankingReport& report, ReportFormat format) {
    switch (format) {
    case ReportFormat::csv: {
        std::string out = "permutation,factor_count,rank\n";
        for (const RankEntry& e : report.entries) {
            out += csv_field(e.permutation);
            out += ',';
            out += std::to_string(e.factor_count);
            out += ',';
            out += std::to_string(e.rank);
            out += '\n';
        }
        return out;
    }
    case ReportFormat::json: {
        json j;
        j["objective"] = report.objective == SearchObjective::minimize ? "minimize" : "maximize";
        j["entries"] = json::array();
        for (const RankEntry& e : report.entries)
            j["entries"].push_back(json{{"permutation", e.permutation},
                                        {"factor_count", e.factor_count},
                                        {"rank", e.rank}});
        j["greedy"] = report.greedy ? greedy_to_json(*report.greedy) : json(nullptr);
        j["greedy_no_backtrack"] =
            report.greedy_no_backtrack ? greedy_to_json(*report.greedy_no_backtrack) : json(nullptr);
        return j.dump(2) + "\n";
    }
    case ReportFormat::human: {
        std::ostringstream os;
        os << "permutations evaluated: " << report.entries.size() << "\n";
        if (!report.entries.empty()) {
            const RankEntry& b = report.best();
            os << "best ordering: " << b.permutation << " (" << b.factor_count << " factors)\n";
        }
        const auto describe = [&](const char* label, const GreedyEntry& g) {
            os << label << ": " << g.permutation << " (" << g.factor_count << " factors), rank "
               << g.rank << "/" << report.entries.size() << "\n";
        };
        if (report.greedy)
            describe("greedy with backtracking", *report.greedy);
        if (report.greedy_no_backtrack)
            describe("greedy without backtracking", *report.greedy_no_backtrack);
        return os.str();
    }
    }
    return {};
}

RankingReport parse_report_json(std::string_view json_text) {
    const json j = json::parse(json_text);
    RankingReport report;
    report.objective = j.at("objective").get<std::string>() == "maximize"
                           ? SearchObjective::maximize
                           : SearchObjective::minimize;
    for (const json& e : j.at("entries"))
        report.entries.push_back(RankEntry{e.at("permutation").get<std::string>(),
                                           e.at("factor_count").get<std::size_t>(),
                                           e.at("rank").get<std::size_t>()});
    if (!j.at("greedy").is_null())
        report.greedy = greedy_from_json(j.at("greedy"));
    if (!j.at("greedy_no_backtrack").is_null())
        report.greedy_no_backtrack = greedy_from_json(j.at("greedy_no_backtrack"));
    return report;
}

std::map<std::size_t, std::size_t> greedy_rank_histogram(const std::vector<RankingReport>& reports,
                                                         bool backtracking) {
    std::map<std::size_t, std::size_t> histogram;
    for (const RankingReport& r : reports) {
        const auto& entry = backtracking ? r.greedy : r.greedy_no_backtrack;
        if (entry)
            ++histogram[entry->rank];
    }
    return histogram;
}

} // namespace lyn
