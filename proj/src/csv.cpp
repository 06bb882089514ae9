#include "nht/csv.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <system_error>

namespace nht {

std::string format_fixed(Int num, Int den, int digits) {
    if (den <= 0 || num < 0) throw InvalidInput("format_fixed expects a nonnegative value");
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale = checked_mul(scale, 10);
    const Int scaled = checked_add(checked_mul(checked_mul(num, scale), 2), den) / checked_mul(den, 2);
    std::string s = to_string(scaled / scale);
    if (digits > 0) {
        std::string frac = to_string(scaled % scale);
        frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
        s += "." + frac;
    }
    return s;
}

void emit_correlation_csv(const CorrelationSeries& series, std::ostream& out) {
    out << "lag,raw_sum,residue,normalized\n";
    for (std::size_t k = 0; k < series.length; ++k) {
        out << k << ',' << to_string(series.raw_sum[k]) << ',' << series.residue[k] << ','
            << format_fixed(series.residue[k], series.modulus, 6) << '\n';
    }
}

void emit_pair_table_csv(std::span<const PairTableRow> rows, std::ostream& out) {
    out << "i,j,modulus,expectation\n";
    for (const auto& r : rows) {
        out << r.i << ',' << r.j << ',' << r.modulus << ',' << r.expectation.to_fixed2() << '\n';
    }
}

void emit_deviation_csv(const DeviationProfile& profile, std::ostream& out) {
    out << "convention,i,j,modulus,target,expectation,rational,deviation\n";
    for (const auto& e : profile.entries) {
        char target[32], dev[32];
        std::snprintf(target, sizeof target, "%.2f", e.target);
        std::snprintf(dev, sizeof dev, "%.6f", e.deviation);
        out << to_string(profile.convention) << ',' << e.i << ',' << e.j << ',' << e.modulus << ',' << target << ','
            << format_fixed(e.expectation.num, e.expectation.den, 6) << ',' << e.expectation.to_string() << ','
            << dev << '\n';
    }
}

void emit_search_csv(std::span<const SearchCandidate> candidates, std::ostream& out) {
    out << "seed,n,gcd,gcd_factors,modulus,modulus_is_prime,diagonal_residue,normalizer,valid,reduced\n";
    for (const auto& c : candidates) {
        out << to_string(c.seed) << ',' << c.n << ',' << to_string(c.gcd) << ','
            << (c.gcd_factors.empty() ? std::string() : format_factorization(c.gcd_factors)) << ',' << c.modulus << ','
            << (c.modulus_is_prime ? "true" : "false") << ',' << c.diagonal_residue << ','
            << (c.normalizer ? std::to_string(*c.normalizer) : std::string()) << ','
            << (c.valid ? "true" : "false") << ',';
        if (c.reduced) {
            for (std::size_t i = 0; i < c.reduced->size(); ++i) out << (i ? " " : "") << (*c.reduced)[i];
        }
        out << '\n';
    }
}

void emit_stem_svg(const CorrelationSeries& series, const std::string& title, std::ostream& out) {
    constexpr int width = 640, height = 320, margin = 40;
    const int plot_w = width - 2 * margin, plot_h = height - 2 * margin;
    const std::size_t n = std::max<std::size_t>(series.length, 1);
    const int base_y = margin + plot_h;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    out << "<text x=\"" << margin << "\" y=\"" << margin / 2 << "\" font-size=\"14\">" << title
        << " (mod " << series.modulus << ")</text>\n";
    out << "<line x1=\"" << margin << "\" y1=\"" << base_y << "\" x2=\"" << width - margin << "\" y2=\"" << base_y
        << "\" stroke=\"black\"/>\n";
    for (std::size_t k = 0; k < series.length; ++k) {
        const long x = margin + static_cast<long>((2 * k + 1) * plot_w / (2 * n));
        const long y = base_y - static_cast<long>(static_cast<unsigned __int128>(series.residue[k]) * plot_h /
                                                  series.modulus);
        out << "<line x1=\"" << x << "\" y1=\"" << base_y << "\" x2=\"" << x << "\" y2=\"" << y
            << "\" stroke=\"steelblue\"/>";
        out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"3\" fill=\"steelblue\"/>\n";
    }
    out << "</svg>\n";
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw Error("cannot write '" + tmp.string() + "'");
        f << content;
        f.flush();
        if (!f) throw Error("write to '" + tmp.string() + "' failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw Error("cannot rename onto '" + path.string() + "'");
    }
}

}  // namespace nht
