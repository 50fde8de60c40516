#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lyn/search.hpp"
#include "lyn/text.hpp"

namespace lyn {

enum class ReportFormat { csv, json, human };

// The full ranking experiment for one text: exhaustive minimize sweep plus
// the greedy ordering with and without backtracking, each ranked against the
// sweep.
RankingReport run_rank_experiment(const Text& text, std::size_t sigma_limit = 8,
                                  unsigned threads = 0);

// CSV columns are exactly permutation,factor_count,rank. JSON carries
// entries, greedy, greedy_no_backtrack. Output ends with a newline.
std::string emit_report(const RankingReport& report, ReportFormat format);

// Inverse of emit_report for the JSON format.
RankingReport parse_report_json(std::string_view json_text);

// rank -> number of reports whose greedy entry achieved it.
std::map<std::size_t, std::size_t> greedy_rank_histogram(const std::vector<RankingReport>& reports,
                                                         bool backtracking);

} // namespace lyn
