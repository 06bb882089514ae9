#include "nht/fixtures.hpp"

#include <array>

#include "nht/search.hpp"

namespace nht::fixtures {

namespace {

SequenceFile row(const char* name, std::vector<Int> values, Residue q) {
    const std::size_t n = values.size();
    return SequenceFile{name, n, std::move(values), q};
}

std::vector<TableRow> make_table1() {
    return {
        {row("example1", {911, 1821, 3642, 1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024, 2048, 4096}, 7283), true},
        {row("example2", {12747, 3642, 7284, 14568, 7285, 14570, 7289, 14578, 7305, 14610, 7369, 14738, 7625, 15250,
                          8649, 17298},
             21851),
         true},
        {row("example3", {3, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024, 2048, 975, 1950, 779, 1558}, 3121), true},
        {row("example4", {2, 2, 4, 8, 16, 32, 64, 128, 256, 181, 31, 62, 124, 248, 165, 330}, 331), true},
        {row("example5", {11, 2, 4, 8, 16, 32, 17, 34, 21, 42, 37, 27, 7, 14, 28, 9}, 47), false},
        {row("example6", {13, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024, 61, 122, 244, 488, 976}, 1987), false},
    };
}

std::vector<SequenceFile> make_chains() {
    std::vector<SequenceFile> out;
    for (Int seed : {2, 3, 11, 13}) {
        const auto g = doubling_chain(seed, 16);
        out.push_back(SequenceFile{"chain-seed" + to_string(seed), g.size(),
                                   std::vector<Int>(g.values().begin(), g.values().end()), std::nullopt});
    }
    return out;
}

constexpr std::array<TargetValue, 12> table2_targets{{
    {1, 2, 0.87}, {1, 3, 0.73}, {1, 4, 0.49},
    {2, 1, 0.45}, {2, 3, 0.47}, {2, 4, 0.37},
    {3, 1, 0.27}, {3, 2, 0.50}, {3, 4, 0.31},
    {4, 1, 0.25}, {4, 2, 0.74}, {4, 3, 0.28},
}};

}  // namespace

std::span<const TableRow> table1() {
    static const std::vector<TableRow> rows = make_table1();
    return rows;
}

std::span<const SequenceFile> raw_chains() {
    static const std::vector<SequenceFile> chains = make_chains();
    return chains;
}

std::span<const TargetValue> table2() { return table2_targets; }

std::vector<ResidueSequence> pair_table_inputs() {
    std::vector<ResidueSequence> out;
    for (std::size_t i = 0; i < 4; ++i) out.push_back(table1()[i].file.residues());
    return out;
}

std::optional<SequenceFile> find(std::string_view name) {
    for (const auto& r : table1()) {
        if (r.file.name == name) return r.file;
    }
    for (const auto& c : raw_chains()) {
        if (c.name == name) return c;
    }
    return std::nullopt;
}

}  // namespace nht::fixtures
