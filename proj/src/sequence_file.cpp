#include "nht/sequence_file.hpp"

#include <fstream>
#include <sstream>

namespace nht {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        const auto start = s.find_first_not_of(" \t", pos);
        if (start == std::string_view::npos) break;
        auto end = s.find_first_of(" \t", start);
        if (end == std::string_view::npos) end = s.size();
        out.push_back(s.substr(start, end - start));
        pos = end;
    }
    return out;
}

Int parse_field_int(std::string_view text, std::size_t line, const char* field) {
    try {
        return parse_int(text);
    } catch (const Error& e) {
        throw ParseError(line, std::string(field) + ": " + e.what());
    }
}

}  // namespace

GeneratorSequence SequenceFile::generator() const { return GeneratorSequence(values); }

ResidueSequence SequenceFile::residues() const {
    if (!modulus) throw InvalidInput("sequence '" + name + "' has no modulus");
    std::vector<Residue> r;
    r.reserve(values.size());
    for (Int v : values) r.push_back(mod_reduce(v, *modulus));
    return ResidueSequence(std::move(r), *modulus);
}

SequenceFile parse_sequence_text(std::string_view text) {
    SequenceFile out;
    std::size_t name_line = 0, n_line = 0, values_line = 0, modulus_line = 0;
    bool any_content = false;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view line = trim(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') {
            if (end == text.size()) break;
            continue;
        }
        any_content = true;

        const auto colon = line.find(':');
        if (colon == std::string_view::npos) throw ParseError(line_no, "expected 'field: value'");
        const std::string_view key = trim(line.substr(0, colon));
        const std::string_view value = trim(line.substr(colon + 1));

        auto claim = [&](std::size_t& seen) {
            if (seen != 0) {
                throw ParseError(line_no, "duplicate field '" + std::string(key) + "' (first on line " +
                                              std::to_string(seen) + ")");
            }
            seen = line_no;
        };

        if (key == "name") {
            claim(name_line);
            if (value.empty()) throw ParseError(line_no, "name is empty");
            out.name = std::string(value);
        } else if (key == "n") {
            claim(n_line);
            const Int n = parse_field_int(value, line_no, "n");
            if (n < 2 || n > 1'000'000) throw ParseError(line_no, "n must be in [2, 1000000], got " + to_string(n));
            out.n = static_cast<std::size_t>(n);
        } else if (key == "values") {
            claim(values_line);
            for (std::string_view tok : split_ws(value)) {
                const Int v = parse_field_int(tok, line_no, "values");
                if (v < 0) throw ParseError(line_no, "values: negative value " + to_string(v));
                out.values.push_back(v);
            }
            if (out.values.empty()) throw ParseError(line_no, "values is empty");
        } else if (key == "modulus") {
            claim(modulus_line);
            const Int q = parse_field_int(value, line_no, "modulus");
            if (q < 2 || !fits_u64(q)) throw ParseError(line_no, "modulus must be in [2, 2^64), got " + to_string(q));
            out.modulus = static_cast<Residue>(q);
        } else {
            throw ParseError(line_no, "unknown field '" + std::string(key) + "'");
        }
        if (end == text.size()) break;
    }

    if (!any_content) throw ParseError(0, "empty sequence file");
    if (name_line == 0) throw ParseError(0, "missing field 'name'");
    if (n_line == 0) throw ParseError(0, "missing field 'n'");
    if (values_line == 0) throw ParseError(0, "missing field 'values'");
    if (out.values.size() != out.n) {
        throw ParseError(values_line, "values has " + std::to_string(out.values.size()) + " entries but n is " +
                                          std::to_string(out.n));
    }
    if (out.modulus) {
        for (std::size_t i = 0; i < out.values.size(); ++i) {
            if (out.values[i] >= static_cast<Int>(*out.modulus)) {
                throw ParseError(values_line, "value " + to_string(out.values[i]) + " at index " + std::to_string(i) +
                                                  " is out of range for modulus " + std::to_string(*out.modulus));
            }
        }
    }
    return out;
}

SequenceFile parse_sequence_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_sequence_text(buf.str());
    } catch (const ParseError& e) {
        throw e.with_context(path.string());
    }
}

std::string emit_sequence_text(const SequenceFile& s) {
    std::string out = "name: " + s.name + "\n";
    out += "n: " + std::to_string(s.n) + "\n";
    out += "values:";
    for (Int v : s.values) out += " " + to_string(v);
    out += "\n";
    if (s.modulus) out += "modulus: " + std::to_string(*s.modulus) + "\n";
    return out;
}

}  // namespace nht
