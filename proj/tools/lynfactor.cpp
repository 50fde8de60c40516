// lynfactor: Lyndon and co-Lyndon factorization under chosen alphabet
// orderings, exponent-structure inspection, ordering search, and the
// permutation-ranking experiment. Positions in all output are 1-based.
#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lyn/ep.hpp"
#include "lyn/errors.hpp"
#include "lyn/factorize.hpp"
#include "lyn/fasta.hpp"
#include "lyn/report.hpp"
#include "lyn/search.hpp"
#include "lyn/umff.hpp"

namespace {

using nlohmann::json;

struct IoOptions {
    std::string format = "human";
    std::string unknown = "keep";
    std::string known_symbols = "ACGT";
};

void add_io_options(CLI::App* cmd, IoOptions& io) {
    cmd->add_option("--format", io.format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "human"}))
        ->capture_default_str();
    cmd->add_option("--unknown", io.unknown, "Unknown-symbol handling during ingestion")
        ->check(CLI::IsMember({"keep", "strip", "error"}))
        ->capture_default_str();
    cmd->add_option("--known", io.known_symbols, "Known symbols for strip/error modes")
        ->capture_default_str();
}

lyn::IngestPolicy make_policy(const IoOptions& io) {
    lyn::IngestPolicy policy;
    policy.known_symbols = io.known_symbols;
    if (io.unknown == "strip")
        policy.unknown = lyn::UnknownSymbolPolicy::strip;
    else if (io.unknown == "error")
        policy.unknown = lyn::UnknownSymbolPolicy::error;
    return policy;
}

std::string slurp(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

lyn::Text ingest(const std::string& path, const IoOptions& io) {
    return lyn::parse_fasta(slurp(path), make_policy(io));
}

lyn::ReportFormat report_format(const IoOptions& io) {
    if (io.format == "csv")
        return lyn::ReportFormat::csv;
    if (io.format == "json")
        return lyn::ReportFormat::json;
    return lyn::ReportFormat::human;
}

lyn::OrderedAlphabet resolve_order(const lyn::Text& text, const std::string& order_letters) {
    if (order_letters.empty())
        return lyn::OrderedAlphabet::byte_order(text.view());
    return lyn::OrderedAlphabet::from_letters(order_letters);
}

void print_factorization(const lyn::Text& text, const lyn::OrderedAlphabet& order,
                         const lyn::Factorization& fac, const IoOptions& io) {
    if (io.format == "json") {
        json j;
        j["order"] = order.letters();
        j["count"] = fac.count();
        j["factors"] = json::array();
        j["starts"] = json::array();
        for (std::size_t k = 0; k < fac.count(); ++k) {
            const auto [b, e] = fac.bounds(k);
            j["factors"].push_back(std::string(text.view().substr(b, e - b)));
            j["starts"].push_back(b + 1);
        }
        std::cout << j.dump(2) << "\n";
    } else if (io.format == "csv") {
        std::cout << "index,start,length\n";
        for (std::size_t k = 0; k < fac.count(); ++k) {
            const auto [b, e] = fac.bounds(k);
            std::cout << k + 1 << ',' << b + 1 << ',' << e - b << "\n";
        }
    } else {
        std::cout << "order: " << order.letters() << "\n";
        std::cout << "factors: " << fac.count() << "\n";
        for (std::size_t k = 0; k < fac.count(); ++k) {
            const auto [b, e] = fac.bounds(k);
            std::cout << k + 1 << "\t" << b + 1 << "\t" << e - b << "\t"
                      << text.view().substr(b, e - b) << "\n";
        }
    }
}

void print_array(const std::vector<std::size_t>& values, const std::string& name,
                 const IoOptions& io) {
    if (io.format == "json") {
        json j;
        j["array"] = name;
        j["values"] = values;
        std::cout << j.dump(2) << "\n";
    } else if (io.format == "csv") {
        std::cout << "position,value\n";
        for (std::size_t i = 0; i < values.size(); ++i)
            std::cout << i + 1 << ',' << values[i] << "\n";
    } else {
        for (std::size_t i = 0; i < values.size(); ++i)
            std::cout << i + 1 << "\t" << values[i] << "\n";
    }
}

void print_ep(const lyn::EPVector& ep, const IoOptions& io) {
    if (io.format == "json") {
        json j;
        j["letters"] = json::array();
        j["exponents"] = json::array();
        for (std::size_t i = 0; i < ep.distinct_count(); ++i) {
            j["letters"].push_back(std::string(1, ep.letters[i]));
            j["exponents"].push_back(ep.exponents(i));
        }
        std::cout << j.dump(2) << "\n";
    } else if (io.format == "csv") {
        std::cout << "letter,exponents\n";
        for (std::size_t i = 0; i < ep.distinct_count(); ++i) {
            std::cout << ep.letters[i] << ',';
            const auto exps = ep.exponents(i);
            for (std::size_t k = 0; k < exps.size(); ++k)
                std::cout << (k ? " " : "") << exps[k];
            std::cout << "\n";
        }
    } else {
        for (std::size_t i = 0; i < ep.distinct_count(); ++i) {
            std::cout << ep.letters[i] << ":";
            for (const auto e : ep.exponents(i))
                std::cout << ' ' << e;
            std::cout << "\n";
        }
    }
}

void print_greedy(const lyn::GreedyResult& res, const IoOptions& io) {
    if (io.format == "json") {
        json j;
        j["ordering"] = res.order.letters();
        j["factor_count"] = res.factorization.count();
        j["backtracking"] = res.diagnostics.backtracking;
        j["used_fallback"] = res.diagnostics.used_fallback;
        j["candidates"] = json::array();
        for (const auto& c : res.diagnostics.candidates)
            j["candidates"].push_back(json{{"letter", std::string(1, c.letter)},
                                           {"accepted", c.accepted},
                                           {"note", c.note}});
        std::cout << j.dump(2) << "\n";
    } else if (io.format == "csv") {
        std::cout << "ordering,factor_count\n"
                  << res.order.letters() << ',' << res.factorization.count() << "\n";
    } else {
        std::cout << "ordering: " << res.order.letters() << "\n";
        std::cout << "factor count: " << res.factorization.count() << "\n";
        for (const auto& c : res.diagnostics.candidates)
            std::cout << "candidate " << c.letter << ": "
                      << (c.accepted ? "accepted" : "rejected") << " (" << c.note << ")\n";
        if (res.diagnostics.used_fallback)
            std::cout << "fallback ordering used (all candidates inconsistent)\n";
    }
}

int run_verify() {
    int failures = 0;
    const auto report = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
        if (!ok)
            ++failures;
    };

    const auto ab = lyn::OrderedAlphabet::from_letters("ab");
    const auto abc = lyn::OrderedAlphabet::from_letters("abc");

    {
        bool ok = true;
        try {
            const auto words = lyn::enumerate_family({lyn::FamilyTag::lyndon, ab}, 6);
            for (const auto& u : words)
                for (const auto& v : words)
                    lyn::check_lyndon_concat(u, v, ab);
        } catch (const lyn::property_violation_error&) {
            ok = false;
        }
        report("lyndon-concatenation-law (|u|,|v| <= 6 over 2 letters)", ok);
    }
    {
        bool ok = true;
        try {
            const auto words = lyn::enumerate_family({lyn::FamilyTag::co_lyndon, ab}, 6);
            for (const auto& u : words)
                for (const auto& v : words)
                    lyn::check_co_lyndon_concat(u, v, ab);
        } catch (const lyn::property_violation_error&) {
            ok = false;
        }
        report("co-lyndon-concatenation-law (|u|,|v| <= 6 over 2 letters)", ok);
    }
    report("family-intersection (length <= 10 over 2 letters)", lyn::check_intersection(ab, 10));
    report("family-intersection (length <= 6 over 3 letters)", lyn::check_intersection(abc, 6));
    {
        // Sorted lists of Lyndon words must verify; lists with a strictly
        // increasing adjacent pair must not.
        const lyn::WordFamily family{lyn::FamilyTag::lyndon, ab};
        const auto words = lyn::enumerate_family(family, 6);
        std::mt19937 rng(2024);
        std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
        bool ok = true;
        for (int round = 0; round < 2000 && ok; ++round) {
            std::vector<std::string> factors;
            const int m = 2 + static_cast<int>(rng() % 5);
            for (int k = 0; k < m; ++k)
                factors.push_back(words[pick(rng)]);
            std::sort(factors.begin(), factors.end(),
                      [&](const std::string& x, const std::string& y) { return ab.less(y, x); });
            if (!lyn::verify_max_factorization(factors, family))
                ok = false;
            std::vector<std::string> increasing = factors;
            std::reverse(increasing.begin(), increasing.end());
            if (increasing.front() != increasing.back() &&
                lyn::verify_max_factorization(increasing, family))
                ok = false;
        }
        report("unique-max-factorization (random sorted and unsorted lists)", ok);
    }
    {
        const auto lyndon = lyn::enumerate_family({lyn::FamilyTag::lyndon, ab}, 8);
        const auto co = lyn::enumerate_family({lyn::FamilyTag::co_lyndon, ab}, 8);
        bool ok = lyndon.size() == co.size();
        if (ok) {
            std::set<std::string> co_set(co.begin(), co.end());
            for (const auto& w : lyndon)
                if (co_set.count(std::string(w.rbegin(), w.rend())) == 0)
                    ok = false;
        }
        report("reversal-bijection (length <= 8 over 2 letters)", ok);
    }
    return failures;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lyndon factorization under alphabet orderings"};
    app.require_subcommand(1);

    IoOptions io;
    std::string input;
    std::string order_letters;
    std::vector<std::string> rank_inputs;
    std::string array_mode;
    bool co_family = false;
    bool exhaustive = false;
    bool greedy = false;
    bool no_backtrack = false;
    std::string objective = "min";
    std::size_t sigma_limit = 8;
    unsigned threads = 0;

    auto* factorize = app.add_subcommand("factorize", "Factorize into Lyndon words");
    factorize->add_option("input", input, "Input path (FASTA or raw); stdin when omitted");
    factorize->add_option("--order", order_letters,
                          "Alphabet ordering, least letter first (default: byte order)");
    factorize->add_flag("--co", co_family, "Use the co-Lyndon factorization");
    add_io_options(factorize, io);

    auto* ep = app.add_subcommand("ep", "Print the run-length exponent structure per letter");
    ep->add_option("input", input, "Input path; stdin when omitted");
    add_io_options(ep, io);

    auto* array = app.add_subcommand("array", "Per-position arrays");
    array->add_option("mode", array_mode, "lyndon: longest Lyndon prefix lengths; count: factor counts per suffix")
        ->required()
        ->check(CLI::IsMember({"lyndon", "count"}));
    array->add_option("input", input, "Input path; stdin when omitted");
    array->add_option("--order", order_letters, "Alphabet ordering, least letter first");
    add_io_options(array, io);

    auto* search = app.add_subcommand("search", "Search for an alphabet ordering");
    search->add_option("input", input, "Input path; stdin when omitted");
    search->add_flag("--exhaustive", exhaustive, "Evaluate every permutation");
    search->add_flag("--greedy", greedy, "Greedy ordering from exponent structure");
    search->add_flag("--no-backtrack", no_backtrack, "Disable candidate backtracking");
    search->add_option("--objective", objective, "min or max")
        ->check(CLI::IsMember({"min", "max"}))
        ->capture_default_str();
    search->add_option("--sigma-limit", sigma_limit, "Distinct-letter cap for exhaustive search")
        ->capture_default_str();
    search->add_option("--threads", threads, "Worker threads (0 = hardware)");
    add_io_options(search, io);

    auto* rank = app.add_subcommand("rank", "Rank every permutation and place the greedy result");
    rank->add_option("inputs", rank_inputs, "Input paths; stdin when omitted");
    rank->add_option("--sigma-limit", sigma_limit, "Distinct-letter cap")->capture_default_str();
    rank->add_option("--threads", threads, "Worker threads (0 = hardware)");
    add_io_options(rank, io);

    auto* verify = app.add_subcommand("verify", "Run the word-family law suites");

    CLI11_PARSE(app, argc, argv);

    try {
        if (factorize->parsed()) {
            const lyn::Text text = ingest(input, io);
            const auto order = resolve_order(text, order_letters);
            const auto fac = co_family ? lyn::co_lyndon_factorize(text.view(), order)
                                       : lyn::duval_factorize(text.view(), order);
            print_factorization(text, order, fac, io);
        } else if (ep->parsed()) {
            const lyn::Text text = ingest(input, io);
            print_ep(lyn::compute_ep(text.view()), io);
        } else if (array->parsed()) {
            const lyn::Text text = ingest(input, io);
            const auto order = resolve_order(text, order_letters);
            const auto values = array_mode == "lyndon"
                                    ? lyn::lyndon_array(text.view(), order)
                                    : lyn::lyndon_factorization_array(text.view(), order);
            print_array(values, array_mode == "lyndon" ? "lyndon" : "factorization-count", io);
        } else if (search->parsed()) {
            if (exhaustive == greedy)
                throw std::runtime_error("choose exactly one of --exhaustive or --greedy");
            const lyn::Text text = ingest(input, io);
            const auto obj = objective == "max" ? lyn::SearchObjective::maximize
                                                : lyn::SearchObjective::minimize;
            if (exhaustive) {
                const auto report = lyn::exhaustive_search(text, obj, sigma_limit, threads);
                std::cout << lyn::emit_report(report, report_format(io));
            } else {
                print_greedy(lyn::greedy_order(text, obj, !no_backtrack), io);
            }
        } else if (rank->parsed()) {
            if (rank_inputs.empty())
                rank_inputs.push_back("-");
            std::vector<lyn::RankingReport> reports;
            for (const auto& path : rank_inputs)
                reports.push_back(lyn::run_rank_experiment(ingest(path, io), sigma_limit, threads));
            if (reports.size() == 1) {
                std::cout << lyn::emit_report(reports.front(), report_format(io));
            } else if (io.format == "csv") {
                std::cout << "input,best_count,greedy_permutation,greedy_count,greedy_rank,"
                             "no_backtrack_permutation,no_backtrack_count,no_backtrack_rank\n";
                for (std::size_t i = 0; i < reports.size(); ++i) {
                    const auto& r = reports[i];
                    std::cout << rank_inputs[i] << ',' << r.best().factor_count << ','
                              << r.greedy->permutation << ',' << r.greedy->factor_count << ','
                              << r.greedy->rank << ',' << r.greedy_no_backtrack->permutation << ','
                              << r.greedy_no_backtrack->factor_count << ','
                              << r.greedy_no_backtrack->rank << "\n";
                }
            } else if (io.format == "json") {
                json j;
                j["reports"] = json::array();
                for (std::size_t i = 0; i < reports.size(); ++i) {
                    json jr = json::parse(lyn::emit_report(reports[i], lyn::ReportFormat::json));
                    jr["input"] = rank_inputs[i];
                    j["reports"].push_back(jr);
                }
                json hist;
                for (const bool backtracking : {true, false}) {
                    json h = json::object();
                    for (const auto& [rank_value, n] :
                         lyn::greedy_rank_histogram(reports, backtracking))
                        h[std::to_string(rank_value)] = n;
                    hist[backtracking ? "greedy" : "greedy_no_backtrack"] = h;
                }
                j["histogram"] = hist;
                std::cout << j.dump(2) << "\n";
            } else {
                for (std::size_t i = 0; i < reports.size(); ++i) {
                    const auto& r = reports[i];
                    std::cout << rank_inputs[i] << ": best " << r.best().factor_count
                              << " factors; greedy rank " << r.greedy->rank << "/"
                              << r.entries.size() << ", no-backtrack rank "
                              << r.greedy_no_backtrack->rank << "/" << r.entries.size() << "\n";
                }
                for (const bool backtracking : {true, false}) {
                    std::cout << (backtracking ? "greedy rank histogram:"
                                               : "no-backtrack rank histogram:");
                    for (const auto& [rank_value, n] :
                         lyn::greedy_rank_histogram(reports, backtracking))
                        std::cout << " " << rank_value << "x" << n;
                    std::cout << "\n";
                }
            }
        } else if (verify->parsed()) {
            return run_verify();
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
