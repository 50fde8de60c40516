#include "lyn/search.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <thread>

#include "lyn/ep.hpp"
#include "lyn/errors.hpp"
#include "lyn/factorize.hpp"

namespace lyn {

void ConstraintGraph::add_edge(Symbol u, Symbol v) {
    if (u == v)
        throw std::invalid_argument("a letter cannot precede itself");
    adj_[u].insert(v);
    nodes_.insert(u);
    nodes_.insert(v);
}

void ConstraintGraph::remove_edge(Symbol u, Symbol v) {
    auto it = adj_.find(u);
    if (it != adj_.end())
        it->second.erase(v);
}

bool ConstraintGraph::has_edge(Symbol u, Symbol v) const {
    auto it = adj_.find(u);
    return it != adj_.end() && it->second.count(v) > 0;
}

bool ConstraintGraph::consistent() const {
    std::map<Symbol, std::size_t> indeg;
    for (Symbol s : nodes_)
        indeg[s] = 0;
    for (const auto& [u, vs] : adj_)
        for (Symbol v : vs)
            ++indeg[v];
    std::vector<Symbol> ready;
    for (const auto& [s, d] : indeg)
        if (d == 0)
            ready.push_back(s);
    std::size_t seen = 0;
    while (!ready.empty()) {
        const Symbol u = ready.back();
        ready.pop_back();
        ++seen;
        auto it = adj_.find(u);
        if (it == adj_.end())
            continue;
        for (Symbol v : it->second)
            if (--indeg[v] == 0)
                ready.push_back(v);
    }
    return seen == indeg.size();
}

std::set<Symbol> ConstraintGraph::nodes() const {
    return nodes_;
}

std::size_t ConstraintGraph::edge_count() const {
    std::size_t n = 0;
    for (const auto& [u, vs] : adj_)
        n += vs.size();
    return n;
}

ConstraintGraph assert_precedes(ConstraintGraph g, Symbol u, Symbol v) {
    g.add_edge(u, v);
    return g;
}

OrderedAlphabet linearize(const ConstraintGraph& g, std::string_view tie_break) {
    std::array<int, 256> prio;
    prio.fill(-1);
    std::string universe;
    auto include = [&](Symbol s) {
        if (prio[s] < 0) {
            prio[s] = static_cast<int>(universe.size());
            universe.push_back(static_cast<char>(s));
        }
    };
    for (char c : tie_break)
        include(static_cast<Symbol>(c));
    for (Symbol s : g.nodes())
        include(s);

    std::array<std::size_t, 256> indeg{};
    for (const auto& [u, vs] : g.adjacency())
        for (Symbol v : vs)
            ++indeg[v];

    using Slot = std::pair<int, Symbol>;
    std::priority_queue<Slot, std::vector<Slot>, std::greater<>> ready;
    for (char c : universe) {
        const auto s = static_cast<Symbol>(c);
        if (indeg[s] == 0)
            ready.push({prio[s], s});
    }
    std::string ranked;
    while (!ready.empty()) {
        const auto [p, u] = ready.top();
        ready.pop();
        ranked.push_back(static_cast<char>(u));
        auto it = g.adjacency().find(u);
        if (it == g.adjacency().end())
            continue;
        for (Symbol v : it->second)
            if (--indeg[v] == 0)
                ready.push({prio[v], v});
    }
    if (ranked.size() != universe.size())
        throw inconsistency_error("precedence constraints contain a cycle");
    return OrderedAlphabet::from_letters(ranked);
}

const RankEntry& RankingReport::best() const {
    if (entries.empty())
        throw std::logic_error("empty report");
    if (objective == SearchObjective::minimize)
        return entries.front();
    const std::size_t top = entries.back().factor_count;
    const auto it = std::partition_point(entries.begin(), entries.end(),
                                         [&](const RankEntry& e) { return e.factor_count < top; });
    return *it;
}

std::size_t RankingReport::rank_of_count(std::size_t factor_count) const {
    std::size_t better = 0;
    for (const RankEntry& e : entries) {
        if (objective == SearchObjective::minimize ? e.factor_count < factor_count
                                                   : e.factor_count > factor_count)
            ++better;
    }
    return better + 1;
}

RankingReport exhaustive_search(const Text& text, SearchObjective objective,
                                std::size_t sigma_limit, unsigned threads) {
    const auto byte_less = [](char a, char b) {
        return static_cast<Symbol>(a) < static_cast<Symbol>(b);
    };
    std::string letters = text.letters();
    std::sort(letters.begin(), letters.end(), byte_less);
    if (letters.size() > sigma_limit)
        throw factorial_blowup_error("factorial blow-up: " + std::to_string(letters.size()) +
                                     " distinct letters exceed the limit of " +
                                     std::to_string(sigma_limit) + " (" +
                                     std::to_string(letters.size()) + "! permutations)");

    std::vector<std::string> perms;
    std::string p = letters;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end(), byte_less));

    std::vector<std::size_t> counts(perms.size());
    auto evaluate = [&](unsigned worker, unsigned stride) {
        for (std::size_t i = worker; i < perms.size(); i += stride)
            counts[i] = duval_factorize(text, OrderedAlphabet::from_letters(perms[i])).count();
    };
    unsigned n_threads = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
    n_threads = static_cast<unsigned>(
        std::min<std::size_t>(n_threads, perms.size()));
    if (n_threads <= 1) {
        evaluate(0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads - 1);
        for (unsigned t = 1; t < n_threads; ++t)
            pool.emplace_back(evaluate, t, n_threads);
        evaluate(0, n_threads);
        for (auto& th : pool)
            th.join();
    }

    RankingReport report;
    report.objective = objective;
    report.entries.resize(perms.size());
    for (std::size_t i = 0; i < perms.size(); ++i)
        report.entries[i] = RankEntry{std::move(perms[i]), counts[i], 0};
    std::sort(report.entries.begin(), report.entries.end(),
              [](const RankEntry& a, const RankEntry& b) {
                  return std::tie(a.factor_count, a.permutation) <
                         std::tie(b.factor_count, b.permutation);
              });
    // Competition ranks in one pass; equal counts share the rank of the first
    // (minimize) or last (maximize) entry of their block.
    auto& entries = report.entries;
    if (objective == SearchObjective::minimize) {
        for (std::size_t i = 0; i < entries.size(); ++i)
            entries[i].rank = i > 0 && entries[i].factor_count == entries[i - 1].factor_count
                                  ? entries[i - 1].rank
                                  : i + 1;
    } else {
        for (std::size_t i = entries.size(); i-- > 0;)
            entries[i].rank =
                i + 1 < entries.size() && entries[i].factor_count == entries[i + 1].factor_count
                    ? entries[i + 1].rank
                    : entries.size() - i;
    }
    return report;
}

namespace {

// Working state of a greedy run. Letters assigned "successively" form a
// chain, encoded as precedence edges between consecutive assignments, so a
// single linearize call at the end sees both the chain and the pairwise
// constraints.
struct AssignState {
    ConstraintGraph graph;
    std::string chain;
    std::array<bool, 256> in_chain{};

    // Append s to the chain. Fails when the chain edge would contradict an
    // earlier pairwise constraint; orderings must stay cycle-free.
    bool assign(Symbol s) {
        if (in_chain[s])
            return true;
        if (!chain.empty()) {
            const auto tail = static_cast<Symbol>(chain.back());
            if (!graph.has_edge(tail, s)) {
                graph.add_edge(tail, s);
                if (!graph.consistent()) {
                    graph.remove_edge(tail, s);
                    return false;
                }
            }
        }
        chain.push_back(static_cast<char>(s));
        in_chain[s] = true;
        return true;
    }

    // Tentative edge u -> v; rolled back when it closes a cycle.
    bool constrain(Symbol u, Symbol v) {
        if (u == v)
            return false;
        if (graph.has_edge(u, v))
            return true;
        graph.add_edge(u, v);
        if (graph.consistent())
            return true;
        graph.remove_edge(u, v);
        return false;
    }

    // Re-assignment for a prefix whose letters never recur later: its chain
    // takes the lowest ranks, ours follows. Letter sets are disjoint, so the
    // merge cannot create a cycle.
    void prepend(const AssignState& prefix) {
        for (const auto& [u, vs] : prefix.graph.adjacency())
            for (Symbol v : vs)
                graph.add_edge(u, v);
        if (!prefix.chain.empty() && !chain.empty())
            graph.add_edge(static_cast<Symbol>(prefix.chain.back()),
                           static_cast<Symbol>(chain.front()));
        chain = prefix.chain + chain;
        for (char c : prefix.chain)
            in_chain[static_cast<Symbol>(c)] = true;
    }
};

constexpr int kEndOfScope = -1;

// Candidate letters ordered by exponent-factorization count, ties by first
// occurrence (EP letters already come in first-occurrence order).
std::vector<std::size_t> candidate_order(const EPVector& ep) {
    std::vector<std::size_t> idx(ep.letters.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<std::size_t> factors(ep.letters.size());
    for (std::size_t i = 0; i < ep.letters.size(); ++i)
        factors[i] = factorize_exponents(ep.exponents(i)).count();
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return factors[a] < factors[b]; });
    return idx;
}

// One factor of the candidate's exponent factorization, as a region of the
// scope: runs [rb, re) of `alpha` and the alpha-free gaps after each run.
// With a single run, gap letters are assigned successive ranks. With several,
// each later run carrying the leading exponent is compared against the
// leading gap position by position. Reading past a gap continues into the
// alpha run that follows it, or ends with the scope.
bool process_region(AssignState& st, std::string_view scope, const RunList& runs,
                    std::size_t rb, std::size_t re, Symbol alpha, std::string* note) {
    const std::size_t q = re - rb;
    const std::size_t region_end = re < runs.size() ? runs[re].start : scope.size();
    const auto gap_begin = [&](std::size_t g) {
        return runs[rb + g].start + static_cast<std::size_t>(runs[rb + g].length);
    };
    const auto gap_end = [&](std::size_t g) {
        return g + 1 < q ? runs[rb + g + 1].start : region_end;
    };
    const auto gap_symbol = [&](std::size_t g, std::size_t d) -> int {
        const std::size_t pos = gap_begin(g) + d;
        if (pos < gap_end(g))
            return static_cast<Symbol>(scope[pos]);
        if (pos == gap_end(g) && gap_end(g) < scope.size())
            return alpha; // the run after this gap
        return kEndOfScope;
    };

    if (q == 1) {
        for (std::size_t pos = gap_begin(0); pos < gap_end(0); ++pos) {
            if (!st.assign(static_cast<Symbol>(scope[pos]))) {
                if (note)
                    *note = "successive assignment closes a cycle";
                return false;
            }
        }
        return true;
    }

    const std::uint64_t lead_exponent = runs[rb].length;
    for (std::size_t g = 1; g < q; ++g) {
        if (runs[rb + g].length != lead_exponent)
            continue;
        for (std::size_t d = 0;; ++d) {
            const int s1 = gap_symbol(0, d);
            const int sh = gap_symbol(g, d);
            if (s1 == kEndOfScope && sh == kEndOfScope)
                break;
            if (sh == kEndOfScope) {
                // The suffix starting at run g ends the scope while matching a
                // proper prefix of the leading run's continuation, so it
                // compares below the region: not a single factor.
                if (note)
                    *note = "trailing run is a proper prefix of the region";
                return false;
            }
            if (s1 == kEndOfScope)
                break; // gaps are alpha-free; not reachable, but harmless
            if (s1 == sh) {
                if (static_cast<Symbol>(s1) != alpha &&
                    !st.assign(static_cast<Symbol>(s1))) {
                    if (note)
                        *note = "successive assignment closes a cycle";
                    return false;
                }
                continue;
            }
            if (static_cast<Symbol>(s1) == alpha) {
                if (!st.assign(static_cast<Symbol>(sh))) {
                    if (note)
                        *note = "successive assignment closes a cycle";
                    return false;
                }
            } else if (static_cast<Symbol>(sh) == alpha) {
                if (note)
                    *note = "later gap falls back to the candidate letter";
                return false;
            } else if (!st.constrain(static_cast<Symbol>(s1), static_cast<Symbol>(sh))) {
                if (note)
                    *note = "precedence constraint closes a cycle";
                return false;
            }
            break;
        }
    }
    return true;
}

bool process_scope(AssignState& st, std::string_view scope);

// Run the candidate letter over a scope: least rank for the candidate, then
// every factor region of its exponent factorization, then the scope prefix
// in front of its first run.
bool try_candidate(AssignState& st, std::string_view scope, const EPVector& ep,
                   std::size_t letter_index, std::string* note) {
    const auto alpha = static_cast<Symbol>(ep.letters[letter_index]);
    const RunList& runs = ep.runs[letter_index];
    if (!st.assign(alpha)) {
        if (note)
            *note = "candidate letter cannot take the next rank";
        return false;
    }

    const Factorization fac = factorize_exponents(ep.exponents(letter_index));
    for (std::size_t f = 0; f < fac.count(); ++f) {
        const auto [rb, re] = fac.bounds(f);
        if (!process_region(st, scope, runs, rb, re, alpha, note))
            return false;
    }

    const std::size_t split = runs.front().start;
    if (split > 0) {
        const std::string_view prefix = scope.substr(0, split);
        const std::string_view suffix = scope.substr(split);
        std::array<bool, 256> in_suffix{};
        for (char c : suffix)
            in_suffix[static_cast<Symbol>(c)] = true;
        // Re-assignment from the prefix needs its letters untouched so far:
        // absent from the suffix and from any state carried in from an
        // enclosing scope.
        const auto mentioned = st.graph.nodes();
        bool fresh = true;
        for (char c : prefix) {
            const auto s = static_cast<Symbol>(c);
            if (in_suffix[s] || st.in_chain[s] || mentioned.count(s) > 0) {
                fresh = false;
                break;
            }
        }
        if (fresh) {
            // None of the prefix letters recur, so re-assign from the prefix:
            // its letters take the lowest ranks.
            AssignState before;
            if (process_scope(before, prefix))
                st.prepend(before);
        } else {
            AssignState trial = st;
            if (process_scope(trial, prefix))
                st = std::move(trial);
        }
    }
    return true;
}

// Repeat the assignment process on a sub-scope. Candidates are retried until
// one is consistent; an unplaceable scope leaves its letters to the final
// tie-break.
bool process_scope(AssignState& st, std::string_view scope) {
    if (scope.empty())
        return true;
    const EPVector ep = compute_ep(scope);
    for (std::size_t i : candidate_order(ep)) {
        AssignState trial = st;
        std::string note;
        if (try_candidate(trial, scope, ep, i, &note)) {
            st = std::move(trial);
            return true;
        }
    }
    return false;
}

struct MinimizeOutcome {
    AssignState state;
    GreedyDiagnostics diagnostics;
    char chosen = '\0';
    std::string fallback_order;
};

MinimizeOutcome run_minimize(const Text& text, bool backtrack) {
    MinimizeOutcome out;
    out.diagnostics.backtracking = backtrack;
    const std::string_view scope = text.view();
    if (scope.empty())
        return out;

    const EPVector ep = compute_ep(scope);
    const std::vector<std::size_t> order = candidate_order(ep);
    out.fallback_order.reserve(order.size());
    for (std::size_t i : order)
        out.fallback_order.push_back(ep.letters[i]);
    out.chosen = out.fallback_order.front();

    bool settled = false;
    for (std::size_t i : order) {
        AssignState trial;
        std::string note;
        if (try_candidate(trial, scope, ep, i, &note)) {
            out.diagnostics.candidates.push_back({ep.letters[i], true, "consistent"});
            out.state = std::move(trial);
            out.chosen = ep.letters[i];
            settled = true;
            break;
        }
        out.diagnostics.candidates.push_back({ep.letters[i], false, note});
        if (!backtrack) {
            // Keep the partial assignment of the first candidate; the rest of
            // the letters fall to the tie-break.
            out.state = std::move(trial);
            out.chosen = ep.letters[i];
            settled = true;
            break;
        }
    }
    if (!settled)
        out.diagnostics.used_fallback = true;
    return out;
}

GreedyResult finish(const Text& text, OrderedAlphabet order, GreedyDiagnostics diagnostics) {
    GreedyResult res;
    res.order = std::move(order);
    res.factorization = duval_factorize(text, res.order);
    diagnostics.factor_count = res.factorization.count();
    res.diagnostics = std::move(diagnostics);
    return res;
}

GreedyResult greedy_minimize(const Text& text, bool backtrack) {
    MinimizeOutcome out = run_minimize(text, backtrack);
    if (out.diagnostics.used_fallback)
        return finish(text, OrderedAlphabet::from_letters(out.fallback_order),
                      std::move(out.diagnostics));
    out.diagnostics.constraints = out.state.graph;
    return finish(text, linearize(out.state.graph, text.letters()), std::move(out.diagnostics));
}

GreedyResult greedy_maximize(const Text& text, bool backtrack) {
    GreedyResult low = greedy_minimize(text, backtrack);
    GreedyDiagnostics diagnostics;
    diagnostics.backtracking = backtrack;
    if (text.empty())
        return finish(text, OrderedAlphabet(), std::move(diagnostics));

    MinimizeOutcome outcome = run_minimize(text, backtrack);
    const auto alpha = static_cast<Symbol>(outcome.chosen);

    // Candidate letter highest, the others by decreasing first occurrence.
    std::string inverted;
    const std::string& occ = text.letters();
    for (auto it = occ.rbegin(); it != occ.rend(); ++it)
        if (static_cast<Symbol>(*it) != alpha)
            inverted.push_back(*it);
    inverted.push_back(static_cast<char>(alpha));

    std::string reversed_low(low.order.letters().rbegin(), low.order.letters().rend());
    const std::array<std::pair<std::string, const char*>, 3> options = {{
        {inverted, "inverted heuristic order"},
        {reversed_low, "reversed minimize order"},
        {low.order.letters(), "minimize order"},
    }};
    std::size_t best_count = 0;
    std::size_t best_index = 0;
    for (std::size_t i = 0; i < options.size(); ++i) {
        const auto count =
            duval_factorize(text, OrderedAlphabet::from_letters(options[i].first)).count();
        if (count > best_count) {
            best_count = count;
            best_index = i;
        }
    }
    diagnostics.candidates.push_back({static_cast<char>(alpha), true, options[best_index].second});
    return finish(text, OrderedAlphabet::from_letters(options[best_index].first),
                  std::move(diagnostics));
}

} // namespace

GreedyResult greedy_order(const Text& text, SearchObjective objective, bool backtrack) {
    return objective == SearchObjective::minimize ? greedy_minimize(text, backtrack)
                                                  : greedy_maximize(text, backtrack);
}

std::pair<OrderedAlphabet, Factorization> greedy_order_maximize(const Text& text) {
    GreedyResult res = greedy_order(text, SearchObjective::maximize, true);
    return {std::move(res.order), std::move(res.factorization)};
}

} // namespace lyn
