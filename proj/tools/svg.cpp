#include "svg.hpp"

#include <array>
#include <sstream>

#include "smhd/fv/io.hpp"

namespace smhd::cli {

namespace {

constexpr double kWidth = 640.0, kHeight = 480.0;
constexpr double kLeft = 70.0, kRight = 190.0, kTop = 20.0, kBottom = 50.0;

const char* fill(VerdictCode c)
{
    switch (c) {
    case VerdictCode::Stable: return "#4daf4a";
    case VerdictCode::Unstable: return "#e41a1c";
    case VerdictCode::Exceptional: return "#984ea3";
    case VerdictCode::Inconclusive: return "#bdbdbd";
    }
    return "#000000";
}

std::string num(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

} // namespace

std::string render_heatmap(const SweepSpec& spec, const std::vector<SweepPoint>& points,
                           const std::vector<Curve>& curves)
{
    const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
    const double cw = pw / spec.x.count, chh = ph / spec.y.count;
    const double dx = (spec.x.hi - spec.x.lo) / (spec.x.count - 1);
    const double dy = (spec.y.hi - spec.y.lo) / (spec.y.count - 1);
    const auto px = [&](double x) { return kLeft + (x - spec.x.lo + 0.5 * dx) / (dx * spec.x.count) * pw; };
    const auto py = [&](double y) { return kTop + ph - (y - spec.y.lo + 0.5 * dy) / (dy * spec.y.count) * ph; };

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
    s << "<!-- smhd sweep: verdict=" << spec.verdict << " -->\n";
    s << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" style=\"fill:#ffffff\"/>\n";
    s << "<defs><clipPath id=\"plot\"><rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << num(pw)
      << "\" height=\"" << num(ph) << "\"/></clipPath></defs>\n";

    s << "<g shape-rendering=\"crispEdges\">\n";
    for (std::size_t k = 0; k < points.size(); ++k) {
        const int i = static_cast<int>(k % spec.x.count), j = static_cast<int>(k / spec.x.count);
        s << "<rect x=\"" << num(kLeft + i * cw) << "\" y=\"" << num(kTop + ph - (j + 1) * chh) << "\" width=\""
          << num(cw) << "\" height=\"" << num(chh) << "\" style=\"fill:" << fill(points[k].code) << "\"/>\n";
    }
    s << "</g>\n";

    static const std::array<const char*, 6> strokes = {"#000000", "#377eb8", "#ff7f00", "#a65628", "#f781bf",
                                                        "#666666"};
    s << "<g clip-path=\"url(#plot)\" style=\"fill:none;stroke-width:1.2\">\n";
    for (std::size_t c = 0; c < curves.size(); ++c) {
        s << "<polyline style=\"stroke:" << strokes[(c / 2) % strokes.size()] << "\" points=\"";
        for (const auto& [x, y] : curves[c].points)
            s << num(px(x)) << ',' << num(py(y)) << ' ';
        s << "\"><title>" << curves[c].label << "</title></polyline>\n";
    }
    s << "</g>\n";

    s << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << num(pw) << "\" height=\"" << num(ph)
      << "\" style=\"fill:none;stroke:#000000\"/>\n";
    const std::string font = "font-family:sans-serif;font-size:12px";
    s << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"" << num(kHeight - 12) << "\" style=\"" << font
      << ";text-anchor:middle\">" << spec.x.name << "</text>\n";
    s << "<text x=\"16\" y=\"" << num(kTop + ph / 2) << "\" style=\"" << font
      << ";text-anchor:middle\" transform=\"rotate(-90 16 " << num(kTop + ph / 2) << ")\">" << spec.y.name
      << "</text>\n";
    s << "<text x=\"" << kLeft << "\" y=\"" << num(kTop + ph + 16) << "\" style=\"" << font << "\">"
      << num(spec.x.lo) << "</text>\n";
    s << "<text x=\"" << num(kLeft + pw) << "\" y=\"" << num(kTop + ph + 16) << "\" style=\"" << font
      << ";text-anchor:end\">" << num(spec.x.hi) << "</text>\n";
    s << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(kTop + ph) << "\" style=\"" << font
      << ";text-anchor:end\">" << num(spec.y.lo) << "</text>\n";
    s << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(kTop + 10) << "\" style=\"" << font
      << ";text-anchor:end\">" << num(spec.y.hi) << "</text>\n";

    const std::array<std::pair<VerdictCode, const char*>, 4> legend = {{{VerdictCode::Stable, "stable"},
                                                                        {VerdictCode::Unstable, "unstable"},
                                                                        {VerdictCode::Exceptional, "exceptional"},
                                                                        {VerdictCode::Inconclusive, "inconclusive"}}};
    const double lx = kWidth - kRight + 15;
    for (std::size_t k = 0; k < legend.size(); ++k) {
        const double ly = kTop + 10 + 20.0 * k;
        s << "<rect x=\"" << num(lx) << "\" y=\"" << num(ly) << "\" width=\"12\" height=\"12\" style=\"fill:"
          << fill(legend[k].first) << "\"/>\n";
        s << "<text x=\"" << num(lx + 18) << "\" y=\"" << num(ly + 10) << "\" style=\"" << font << "\">"
          << legend[k].second << "</text>\n";
    }
    if (!curves.empty())
        s << "<text x=\"" << num(lx) << "\" y=\"" << num(kTop + 100) << "\" style=\"" << font
          << "\">lines: exceptional set</text>\n";
    s << "</svg>\n";
    return s.str();
}

} // namespace smhd::cli
