#pragma once

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "superpat/perm/board.hpp"
#include "superpat/perm/point_set.hpp"
#include "superpat/poset/drawing.hpp"

namespace superpat {

struct SvgOptions {
    double unit = 24.0;   // pixels per coordinate unit
    double margin = 24.0; // pixels around the frame
    double radius = 5.0;
    bool labels = false;
};

namespace detail {

inline std::string svg_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s(buf);
    while (s.back() == '0') {
        s.pop_back();
    }
    if (s.back() == '.') {
        s.pop_back();
    }
    return s == "-0" ? "0" : s;
}

inline const char* tag_color(const std::optional<Tag>& t) {
    if (!t) {
        return "#222222";
    }
    switch (*t) {
    case Tag::black: return "#000000";
    case Tag::red: return "#d62728";
    case Tag::blue: return "#1f77b4";
    case Tag::green: return "#2ca02c";
    case Tag::yellow: return "#e0b000";
    }
    return "#222222";
}

/// Maps point coordinates onto the canvas: x grows right, y grows up.
struct Frame {
    double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
    SvgOptions opt;

    explicit Frame(const PointSet& ps, SvgOptions o) : opt(o) {
        if (ps.empty()) {
            return;
        }
        auto d = [](const Rational& r) { return boost::rational_cast<double>(r); };
        x0 = x1 = d(ps[0].x);
        y0 = y1 = d(ps[0].y);
        for (const auto& p : ps) {
            x0 = std::min(x0, d(p.x));
            x1 = std::max(x1, d(p.x));
            y0 = std::min(y0, d(p.y));
            y1 = std::max(y1, d(p.y));
        }
    }
    double width() const { return (x1 - x0) * opt.unit + 2 * opt.margin; }
    double height() const { return (y1 - y0) * opt.unit + 2 * opt.margin; }
    double cx(const Rational& x) const { return opt.margin + (boost::rational_cast<double>(x) - x0) * opt.unit; }
    double cy(const Rational& y) const { return opt.margin + (y1 - boost::rational_cast<double>(y)) * opt.unit; }
};

inline std::string svg_open(double w, double h) {
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           num(w) + "\" height=\"" + num(h) + "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n";
}

inline std::string svg_points(const Frame& f, const PointSet& ps) {
    std::string out;
    for (const auto& p : ps) {
        out += "<circle cx=\"" + num(f.cx(p.x)) + "\" cy=\"" + num(f.cy(p.y)) + "\" r=\"" + num(f.opt.radius) +
               "\" fill=\"" + tag_color(p.tag) + "\"/>\n";
        if (f.opt.labels && p.label) {
            out += "<text x=\"" + num(f.cx(p.x) + f.opt.radius + 2) + "\" y=\"" + num(f.cy(p.y) - f.opt.radius - 2) +
                   "\" font-size=\"10\">" + svg_escape(*p.label) + "</text>\n";
        }
    }
    return out;
}

inline std::string svg_frame(const Frame& f) {
    return "<rect class=\"frame\" x=\"" + num(f.opt.margin) + "\" y=\"" + num(f.opt.margin) + "\" width=\"" +
           num((f.x1 - f.x0) * f.opt.unit) + "\" height=\"" + num((f.y1 - f.y0) * f.opt.unit) +
           "\" fill=\"none\" stroke=\"#cccccc\"/>\n";
}

} // namespace detail

/// Points as circles colored by tag, inside a light frame around their
/// bounding box. Coordinate units are opt.unit pixels.
inline std::string render_svg(const PointSet& ps, const SvgOptions& opt = {}) {
    if (ps.empty()) {
        return detail::svg_open(2 * opt.margin, 2 * opt.margin) + "</svg>\n";
    }
    detail::Frame f(ps, opt);
    return detail::svg_open(f.width(), f.height()) + detail::svg_frame(f) + detail::svg_points(f, ps) + "</svg>\n";
}

/// Edges as segments under the vertex circles.
inline std::string render_svg(const Drawing& d, const SvgOptions& opt = {}) {
    if (d.placement.empty()) {
        return render_svg(PointSet{}, opt);
    }
    detail::Frame f(d.placement, opt);
    std::string body = detail::svg_frame(f);
    for (auto [u, v] : d.graph.edges()) {
        const Point& a = d.placement[u];
        const Point& b = d.placement[v];
        body += "<line x1=\"" + detail::num(f.cx(a.x)) + "\" y1=\"" + detail::num(f.cy(a.y)) + "\" x2=\"" +
                detail::num(f.cx(b.x)) + "\" y2=\"" + detail::num(f.cy(b.y)) + "\" stroke=\"#555555\"/>\n";
    }
    return detail::svg_open(f.width(), f.height()) + body + detail::svg_points(f, d.placement) + "</svg>\n";
}

/// Chessboard: one square per cell, the count written in nonzero cells.
/// Row 0 is drawn at the bottom.
inline std::string render_svg(const Board& b, const SvgOptions& opt = {}) {
    const double u = opt.unit;
    const double w = b.cols() * u + 2 * opt.margin, h = b.rows() * u + 2 * opt.margin;
    std::string body;
    for (int r = 0; r < b.rows(); ++r) {
        for (int c = 0; c < b.cols(); ++c) {
            body += "<rect x=\"" + detail::num(opt.margin + c * u) + "\" y=\"" +
                    detail::num(opt.margin + (b.rows() - 1 - r) * u) + "\" width=\"" + detail::num(u) +
                    "\" height=\"" + detail::num(u) + "\" fill=\"none\" stroke=\"#999999\"/>\n";
        }
    }
    for (const auto& cell : b.cells()) {
        body += "<text x=\"" + detail::num(opt.margin + (cell.col + 0.5) * u) + "\" y=\"" +
                detail::num(opt.margin + (b.rows() - 0.5 - cell.row) * u) +
                "\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">" +
                std::to_string(cell.count) + "</text>\n";
    }
    return detail::svg_open(w, h) + body + "</svg>\n";
}

} // namespace superpat
