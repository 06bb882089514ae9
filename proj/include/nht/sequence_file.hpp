#pragma once

// Text format, one sequence per file:
//
//   # comment
//   name: example1
//   n: 16
//   values: 911 1821 3642 ...
//   modulus: 7283          (optional)
//
// Field names are exact; each appears at most once; blank lines and lines
// starting with '#' are ignored.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nht/integer.hpp"
#include "nht/sequence.hpp"

namespace nht {

struct SequenceFile {
    std::string name;
    std::size_t n = 0;
    std::vector<Int> values;
    std::optional<Residue> modulus;

    bool operator==(const SequenceFile&) const = default;

    GeneratorSequence generator() const;
    /// Requires a modulus; throws InvalidInput otherwise.
    ResidueSequence residues() const;
};

/// Throws ParseError with the offending line number.
SequenceFile parse_sequence_text(std::string_view text);
SequenceFile parse_sequence_file(const std::filesystem::path& path);

/// Canonical emission; parse_sequence_text(emit_sequence_text(s)) == s.
std::string emit_sequence_text(const SequenceFile& s);

}  // namespace nht
