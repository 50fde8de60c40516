#pragma once

#include <string>
#include <string_view>

#include "lyn/text.hpp"

namespace lyn {

struct FastaRecord {
    std::string header;   // text after '>'
    std::string sequence; // joined lines, uppercased
};

// What to do with symbols outside the known set. `keep` treats them as
// ordinary letters (enlarging the alphabet), `strip` drops them, `error`
// rejects the input naming the offending position.
enum class UnknownSymbolPolicy { keep, strip, error };

struct IngestPolicy {
    UnknownSymbolPolicy unknown = UnknownSymbolPolicy::keep;
    std::string known_symbols = "ACGT"; // consulted by strip and error only
    bool uppercase = true;
};

// Parse FASTA ('>' headers) or raw input (no header lines, one sequence).
// The longest record wins; smaller pieces are discarded. Throws
// empty_input_error when nothing remains and rejected_symbol_error in error
// mode.
Text parse_fasta(std::string_view input, const IngestPolicy& policy = {});

} // namespace lyn
