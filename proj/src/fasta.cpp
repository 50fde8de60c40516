#include "lyn/fasta.hpp"

#include <array>
#include <cctype>
#include <vector>

#include "lyn/errors.hpp"

namespace lyn {
namespace {

void append_sequence_line(std::string& out, std::string_view line, bool uppercase) {
    for (char c : line) {
        if (std::isspace(static_cast<unsigned char>(c)))
            continue;
        out.push_back(uppercase ? static_cast<char>(std::toupper(static_cast<unsigned char>(c)))
                                : c);
    }
}

} // namespace

Text parse_fasta(std::string_view input, const IngestPolicy& policy) {
    std::vector<FastaRecord> records;
    bool has_header = false;
    std::size_t pos = 0;
    while (pos < input.size()) {
        std::size_t eol = input.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = input.size();
        std::string_view line = input.substr(pos, eol - pos);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (!line.empty() && line.front() == '>') {
            has_header = true;
            records.push_back(FastaRecord{std::string(line.substr(1)), {}});
        } else {
            if (records.empty())
                records.push_back(FastaRecord{});
            append_sequence_line(records.back().sequence, line, policy.uppercase);
        }
        pos = eol + 1;
    }
    (void)has_header;

    // Longest record; ties go to the earlier one.
    const FastaRecord* selected = nullptr;
    for (const FastaRecord& r : records)
        if (!r.sequence.empty() && (!selected || r.sequence.size() > selected->sequence.size()))
            selected = &r;
    if (!selected)
        throw empty_input_error("no sequence data in input");

    std::array<bool, 256> known{};
    for (char c : policy.known_symbols)
        known[static_cast<unsigned char>(c)] = true;

    std::string sequence;
    sequence.reserve(selected->sequence.size());
    for (std::size_t i = 0; i < selected->sequence.size(); ++i) {
        const char c = selected->sequence[i];
        if (policy.unknown == UnknownSymbolPolicy::keep || known[static_cast<unsigned char>(c)]) {
            sequence.push_back(c);
            continue;
        }
        if (policy.unknown == UnknownSymbolPolicy::error)
            throw rejected_symbol_error(std::string("rejected symbol '") + c + "' at position " +
                                            std::to_string(i + 1) + " of record '" +
                                            selected->header + "'",
                                        i + 1);
        // strip: drop the symbol
    }
    if (sequence.empty())
        throw empty_input_error("sequence is empty after applying the ingest policy");
    return Text(std::move(sequence));
}

} // namespace lyn
