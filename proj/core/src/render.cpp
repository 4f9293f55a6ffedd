#include "uifs/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace uifs {

Rational monna_position(const Element& a) {
    Rational pos(0);
    for (int j = a.offset(); j < a.context().precision; ++j) {
        const std::uint32_t d = a.digit_at(j);
        if (d != 0) {
            pos += Rational(d) * rational_pow(a.context().p, -j - 1);
        }
    }
    return pos;
}

namespace {

const char* const kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                "#9467bd", "#8c564b", "#17becf", "#bcbd22"};

std::string fixed4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

} // namespace

std::string render_svg(const Ifs& system, const Ball& universe, int depth,
                       const RenderOptions& options) {
    if (depth < 0) {
        throw std::invalid_argument("depth must be >= 0");
    }
    if (universe.radius() + depth * system.radius_increment() > system.context().precision) {
        throw PrecisionError("render depth exceeds precision");
    }
    // Rows of per-word images; images of distinct words of one depth are
    // pairwise disjoint for the full systems, duplicates are dropped anyway.
    std::vector<std::vector<Ball>> rows;
    rows.push_back({universe});
    for (int d = 1; d <= depth; ++d) {
        std::vector<Ball> row;
        for (const Ball& b : rows.back()) {
            for (const IfsMap& m : system.maps()) {
                row.push_back(image_of_ball(system.context(), m, b));
            }
        }
        std::sort(row.begin(), row.end(), Ball::less);
        row.erase(std::unique(row.begin(), row.end()), row.end());
        rows.push_back(std::move(row));
    }

    const Rational origin = monna_position(universe.center());
    const Rational universe_width = rational_pow(system.context().p, -universe.radius());
    const int width = options.width;
    const int height =
        2 * options.margin + (depth + 1) * options.row_height + depth * options.row_gap;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
        << "\" fill=\"#ffffff\"/>\n";
    const double usable = static_cast<double>(width - 2 * options.margin);
    for (int d = 0; d <= depth; ++d) {
        const int y = options.margin + d * (options.row_height + options.row_gap);
        const char* fill = kPalette[static_cast<std::size_t>(d) % std::size(kPalette)];
        svg << "<g>\n";
        for (const Ball& b : rows[static_cast<std::size_t>(d)]) {
            const Rational frac = (monna_position(b.center()) - origin) / universe_width;
            const Rational bar =
                rational_pow(system.context().p, -b.radius()) / universe_width;
            const double x = options.margin + usable * frac.convert_to<double>();
            const double w = usable * bar.convert_to<double>();
            svg << "<rect x=\"" << fixed4(x) << "\" y=\"" << y << "\" width=\"" << fixed4(w)
                << "\" height=\"" << options.row_height << "\" fill=\"" << fill
                << "\" stroke=\"#ffffff\" stroke-width=\"0.5\"/>\n";
        }
        svg << "</g>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace uifs
