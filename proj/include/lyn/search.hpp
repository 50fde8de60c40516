#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lyn/alphabet.hpp"
#include "lyn/factorization.hpp"
#include "lyn/text.hpp"

namespace lyn {

enum class SearchObjective { minimize, maximize };

// Directed precedence constraints among letters: an edge u -> v means u must
// rank below v. Consistent exactly when acyclic.
class ConstraintGraph {
public:
    // Throws std::invalid_argument when u == v. Idempotent.
    void add_edge(Symbol u, Symbol v);
    void remove_edge(Symbol u, Symbol v);
    bool has_edge(Symbol u, Symbol v) const;
    bool consistent() const;

    const std::map<Symbol, std::set<Symbol>>& adjacency() const noexcept { return adj_; }
    std::set<Symbol> nodes() const;
    std::size_t edge_count() const;

    bool operator==(const ConstraintGraph& other) const { return adj_ == other.adj_; }

private:
    std::map<Symbol, std::set<Symbol>> adj_;
    std::set<Symbol> nodes_;
};

// Functional edge insertion: returns g with u -> v added.
ConstraintGraph assert_precedes(ConstraintGraph g, Symbol u, Symbol v);

// Total order extending every edge. Letters without forcing edges are placed
// by their position in `tie_break` (first-occurrence order, lowest first).
// Throws inconsistency_error on a cyclic graph.
OrderedAlphabet linearize(const ConstraintGraph& g, std::string_view tie_break);

struct RankEntry {
    std::string permutation; // letters in ascending rank order
    std::size_t factor_count = 0;
    std::size_t rank = 0; // 1-based; ties share the first equal position
    bool operator==(const RankEntry&) const = default;
};

struct GreedyEntry {
    std::string permutation;
    std::size_t factor_count = 0;
    std::size_t rank = 0;
    bool backtracking = true;
    bool operator==(const GreedyEntry&) const = default;
};

// Per-permutation factor counts, sorted ascending by count then by
// permutation string, with optional greedy results alongside.
struct RankingReport {
    SearchObjective objective = SearchObjective::minimize;
    std::vector<RankEntry> entries;
    std::optional<GreedyEntry> greedy;
    std::optional<GreedyEntry> greedy_no_backtrack;

    const RankEntry& best() const;
    std::size_t rank_of_count(std::size_t factor_count) const;

    bool operator==(const RankingReport&) const = default;
};

struct GreedyDiagnostics {
    struct CandidateTrace {
        char letter;
        bool accepted = false;
        std::string note;
    };
    std::vector<CandidateTrace> candidates;
    bool backtracking = true;
    bool used_fallback = false;
    std::size_t factor_count = 0;
    ConstraintGraph constraints; // as recorded by the run that produced the order
};

struct GreedyResult {
    OrderedAlphabet order;
    Factorization factorization;
    GreedyDiagnostics diagnostics;
};

// Factor counts under every permutation of the text's distinct letters.
// Refuses when the distinct-letter count exceeds sigma_limit. `threads` 0
// picks the hardware count; the report is identical either way.
RankingReport exhaustive_search(const Text& text, SearchObjective objective,
                                std::size_t sigma_limit = 8, unsigned threads = 0);

// Greedy alphabet ordering from run-length exponent structure. For the
// minimize direction: pick the leftmost letter whose exponent string
// factorizes into the fewest factors, give it the least rank, then propagate
// precedence constraints through the substrings between its runs, retrying
// with the next candidate on inconsistency when `backtrack` is set.
GreedyResult greedy_order(const Text& text,
                          SearchObjective objective = SearchObjective::minimize,
                          bool backtrack = true);

// Maximize-direction heuristic built on the same machinery; the returned
// count is never below the minimize-direction greedy count for the text.
std::pair<OrderedAlphabet, Factorization> greedy_order_maximize(const Text& text);

} // namespace lyn
