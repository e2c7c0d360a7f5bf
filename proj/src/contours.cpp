// Copyright (c) 2026 the depthlab authors
// SPDX-License-Identifier: Apache-2.0

#include "depthlab/contours.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "depthlab/csv.hpp"

namespace depthlab {

namespace {

using Pt = std::pair<double, double>;

// Quantized endpoint key so segments sharing a grid-edge crossing chain up
// exactly.
struct Key {
    long long x, y;
    bool operator<(const Key& o) const { return x != o.x ? x < o.x : y < o.y; }
};

Key key_of(const Pt& p, double sx, double sy) {
    return {static_cast<long long>(std::llround(p.first * sx)),
            static_cast<long long>(std::llround(p.second * sy))};
}

Pt interp(double xa, double ya, double va, double xb, double yb, double vb, double level) {
    double t = (level - va) / (vb - va);
    if (!(t >= 0.0)) t = 0.0;
    if (!(t <= 1.0)) t = 1.0;
    return {xa + t * (xb - xa), ya + t * (yb - ya)};
}

}  // namespace

std::vector<Polyline> marching_squares(const GridSpec& grid, const std::vector<double>& values,
                                       double level) {
    grid.validate();
    if (values.size() != grid.nx * grid.ny) throw GridSpecError("marching_squares: value count");

    std::vector<std::pair<Pt, Pt>> segments;
    auto val = [&](std::size_t ix, std::size_t iy) { return values[iy * grid.nx + ix]; };

    for (std::size_t iy = 0; iy + 1 < grid.ny; ++iy) {
        for (std::size_t ix = 0; ix + 1 < grid.nx; ++ix) {
            double x0 = grid.x_at(ix), x1 = grid.x_at(ix + 1);
            double y0 = grid.y_at(iy), y1 = grid.y_at(iy + 1);
            double v00 = val(ix, iy), v10 = val(ix + 1, iy);
            double v01 = val(ix, iy + 1), v11 = val(ix + 1, iy + 1);
            int code = (v00 >= level ? 1 : 0) | (v10 >= level ? 2 : 0) | (v11 >= level ? 4 : 0) |
                       (v01 >= level ? 8 : 0);
            if (code == 0 || code == 15) continue;

            // edge crossings: bottom, right, top, left
            Pt pb = interp(x0, y0, v00, x1, y0, v10, level);
            Pt pr = interp(x1, y0, v10, x1, y1, v11, level);
            Pt pt = interp(x0, y1, v01, x1, y1, v11, level);
            Pt pl = interp(x0, y0, v00, x0, y1, v01, level);

            switch (code) {
                case 1: case 14: segments.push_back({pl, pb}); break;
                case 2: case 13: segments.push_back({pb, pr}); break;
                case 3: case 12: segments.push_back({pl, pr}); break;
                case 4: case 11: segments.push_back({pr, pt}); break;
                case 6: case 9:  segments.push_back({pb, pt}); break;
                case 7: case 8:  segments.push_back({pl, pt}); break;
                case 5: case 10: {
                    double center = 0.25 * (v00 + v10 + v01 + v11);
                    bool joined = (center >= level) == (code == 5);
                    if (code == 5) {
                        if (joined) {
                            segments.push_back({pl, pt});
                            segments.push_back({pb, pr});
                        } else {
                            segments.push_back({pl, pb});
                            segments.push_back({pr, pt});
                        }
                    } else {
                        if (joined) {
                            segments.push_back({pl, pb});
                            segments.push_back({pr, pt});
                        } else {
                            segments.push_back({pl, pt});
                            segments.push_back({pb, pr});
                        }
                    }
                    break;
                }
                default: break;
            }
        }
    }

    // Chain segments endpoint-to-endpoint.
    const double sx = 1e7 / std::max(1e-300, grid.x_max - grid.x_min);
    const double sy = 1e7 / std::max(1e-300, grid.y_max - grid.y_min);
    std::multimap<Key, std::size_t> by_end;
    std::vector<bool> used(segments.size(), false);
    for (std::size_t s = 0; s < segments.size(); ++s) {
        by_end.insert({key_of(segments[s].first, sx, sy), s});
        by_end.insert({key_of(segments[s].second, sx, sy), s});
    }

    auto take_from = [&](const Pt& p) -> long long {
        auto range = by_end.equal_range(key_of(p, sx, sy));
        for (auto it = range.first; it != range.second; ++it)
            if (!used[it->second]) return static_cast<long long>(it->second);
        return -1;
    };

    std::vector<Polyline> lines;
    for (std::size_t s = 0; s < segments.size(); ++s) {
        if (used[s]) continue;
        used[s] = true;
        Polyline line{segments[s].first, segments[s].second};
        // extend forward
        for (;;) {
            long long nxt = take_from(line.back());
            if (nxt < 0) break;
            used[nxt] = true;
            const auto& seg = segments[nxt];
            Key endk = key_of(line.back(), sx, sy);
            line.push_back(key_of(seg.first, sx, sy) < endk || endk < key_of(seg.first, sx, sy)
                               ? seg.first
                               : seg.second);
        }
        // extend backward
        for (;;) {
            long long nxt = take_from(line.front());
            if (nxt < 0) break;
            used[nxt] = true;
            const auto& seg = segments[nxt];
            Key frontk = key_of(line.front(), sx, sy);
            Pt other = key_of(seg.first, sx, sy) < frontk || frontk < key_of(seg.first, sx, sy)
                           ? seg.first
                           : seg.second;
            line.insert(line.begin(), other);
        }
        lines.push_back(std::move(line));
    }
    return lines;
}

std::string render_svg(const GridSpec& box, const std::vector<SvgLayer>& layers,
                       const std::string& title) {
    const double W = 640, H = 640, margin = 56;
    auto mx = [&](double x) {
        return margin + (x - box.x_min) / (box.x_max - box.x_min) * (W - 2 * margin);
    };
    auto my = [&](double y) {
        return H - margin - (y - box.y_min) / (box.y_max - box.y_min) * (H - 2 * margin);
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
    svg << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << W - 2 * margin
        << "\" height=\"" << H - 2 * margin << "\" fill=\"none\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" << title
        << "</text>\n";
    // axis extent labels
    svg << "<text x=\"" << margin << "\" y=\"" << H - margin + 18
        << "\" text-anchor=\"middle\" font-size=\"11\">" << format_double(box.x_min) << "</text>\n";
    svg << "<text x=\"" << W - margin << "\" y=\"" << H - margin + 18
        << "\" text-anchor=\"middle\" font-size=\"11\">" << format_double(box.x_max) << "</text>\n";
    svg << "<text x=\"" << margin - 8 << "\" y=\"" << H - margin
        << "\" text-anchor=\"end\" font-size=\"11\">" << format_double(box.y_min) << "</text>\n";
    svg << "<text x=\"" << margin - 8 << "\" y=\"" << margin
        << "\" text-anchor=\"end\" font-size=\"11\">" << format_double(box.y_max) << "</text>\n";

    double legend_y = 40;
    for (const SvgLayer& layer : layers) {
        for (const Polyline& line : layer.lines) {
            if (line.size() < 2) continue;
            svg << "<polyline fill=\"none\" stroke=\"" << layer.color << "\" stroke-width=\"1\"";
            if (layer.dashed) svg << " stroke-dasharray=\"4 3\"";
            svg << " points=\"";
            for (const auto& [x, y] : line) svg << mx(x) << ',' << my(y) << ' ';
            svg << "\"/>\n";
        }
        if (!layer.label.empty()) {
            svg << "<line x1=\"" << W - margin - 140 << "\" y1=\"" << legend_y << "\" x2=\""
                << W - margin - 110 << "\" y2=\"" << legend_y << "\" stroke=\"" << layer.color
                << "\"" << (layer.dashed ? " stroke-dasharray=\"4 3\"" : "") << "/>\n";
            svg << "<text x=\"" << W - margin - 104 << "\" y=\"" << legend_y + 4
                << "\" font-size=\"11\">" << layer.label << "</text>\n";
            legend_y += 16;
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace depthlab
