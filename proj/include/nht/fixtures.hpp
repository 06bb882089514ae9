#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "nht/correlation.hpp"
#include "nht/sequence_file.hpp"

namespace nht::fixtures {

struct TableRow {
    SequenceFile file;
    /// Rows 5 and 6 are listed but not plotted in the source table.
    bool plotted = true;
};

/// The six published 16-value sequences, example1..example6.
std::span<const TableRow> table1();

/// Raw doubling chains (no modulus) for seeds 2, 3, 11, 13: chain-seed2, ...
std::span<const SequenceFile> raw_chains();

/// Published cross-correlation expectations for examples 1-4, (i, j)-sorted.
std::span<const TargetValue> table2();

/// Residue sequences of examples 1-4, the inputs of the pair table.
std::vector<ResidueSequence> pair_table_inputs();

/// Looks up a table row or raw chain by name.
std::optional<SequenceFile> find(std::string_view name);

}  // namespace nht::fixtures
