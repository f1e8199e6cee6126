#include "quiverlab/gallery.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace quiverlab {

Int Partition::size() const {
    Int total = 0;
    for (Int p : parts) total += p;
    return total;
}

bool Partition::valid() const {
    for (std::size_t t = 0; t < parts.size(); ++t) {
        if (parts[t] <= 0) return false;
        if (t > 0 && parts[t] > parts[t - 1]) return false;
    }
    return true;
}

Partition partition_from_string(const std::string& text) {
    Partition p;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.empty()) continue;
        try {
            p.parts.push_back(std::stoll(item));
        } catch (const std::exception&) {
            throw input_error("cannot parse partition part: " + item);
        }
    }
    if (!p.valid()) throw input_error("partition parts must be weakly decreasing and positive");
    return p;
}

std::vector<std::pair<Int, Int>> partition_cells(const Partition& p) {
    std::vector<std::pair<Int, Int>> cells;
    for (std::size_t row = 0; row < p.parts.size(); ++row)
        for (Int a = 0; a < p.parts[row]; ++a) cells.emplace_back(a, static_cast<Int>(row));
    return cells;
}

Int corner_count(const Partition& p) {
    auto inside = [&](Int a, Int b) {
        return b >= 0 && b < static_cast<Int>(p.parts.size()) && a >= 0 && a < p.parts[b];
    };
    Int corners = 0;
    for (const auto& [a, b] : partition_cells(p))
        if (!inside(a + 1, b) && !inside(a, b + 1)) ++corners;
    return corners;
}

Quiver jordan_quiver() { return Quiver({"v"}, {{"x", "v", "v"}}); }

Quiver a1_quiver() { return Quiver({"v"}, {}); }

Quiver an_quiver(std::size_t n) {
    if (n == 0) throw input_error("type A quiver needs at least one vertex");
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    for (std::size_t t = 1; t <= n; ++t) vertices.push_back("v" + std::to_string(t));
    for (std::size_t t = 1; t < n; ++t)
        arrows.push_back({"a" + std::to_string(t), "v" + std::to_string(t), "v" + std::to_string(t + 1)});
    return Quiver(std::move(vertices), std::move(arrows));
}

FramedRep hilb_fixed_point(const Partition& p) {
    if (!p.valid()) throw input_error("invalid partition");
    auto cells = partition_cells(p);
    std::map<std::pair<Int, Int>, std::size_t> index;
    for (std::size_t t = 0; t < cells.size(); ++t) index[cells[t]] = t;

    std::size_t d = cells.size();
    FramedRep rep;
    rep.quiver = jordan_quiver();
    rep.d = IntVec({static_cast<Int>(d)});
    rep.f = IntVec({1});
    RMatrix x(d, d), y(d, d);
    for (std::size_t t = 0; t < d; ++t) {
        auto [a, b] = cells[t];
        auto east = index.find({a + 1, b});
        if (east != index.end()) x.at(east->second, t) = 1;
        auto north = index.find({a, b + 1});
        if (north != index.end()) y.at(north->second, t) = 1;
    }
    rep.A.push_back(std::move(x));
    rep.B.push_back(std::move(y));
    RMatrix iv(d, 1);
    if (d > 0) iv.at(index.at({0, 0}), 0) = 1;
    rep.i.push_back(std::move(iv));
    rep.j.push_back(RMatrix(1, d));
    return rep;
}

ParabolicPoint hilb_fixed_point_with_flag(const Partition& p, Int k) {
    ParabolicPoint pt;
    pt.rep = hilb_fixed_point(p);
    pt.flags.assign(1, {});
    if (k == 0) return pt;
    if (k < 0 || k > corner_count(p))
        throw input_error("flag size exceeds the corner count of the partition");

    auto cells = partition_cells(p);
    auto inside = [&](Int a, Int b) {
        return b >= 0 && b < static_cast<Int>(p.parts.size()) && a >= 0 && a < p.parts[b];
    };
    std::vector<std::size_t> corner_indices;
    for (std::size_t t = 0; t < cells.size(); ++t) {
        auto [a, b] = cells[t];
        if (!inside(a + 1, b) && !inside(a, b + 1)) corner_indices.push_back(t);
    }
    std::size_t d = cells.size();
    for (Int s = 1; s <= k; ++s) {
        RMatrix step(d, static_cast<std::size_t>(s));
        for (Int c = 0; c < s; ++c) step.at(corner_indices[static_cast<std::size_t>(c)], c) = 1;
        pt.flags[0].push_back(std::move(step));
    }
    return pt;
}

FramedRep hilb_distinct_points(const std::vector<std::pair<Rational, Rational>>& points) {
    for (std::size_t a = 0; a < points.size(); ++a)
        for (std::size_t b = a + 1; b < points.size(); ++b)
            if (points[a] == points[b]) throw input_error("points must be pairwise distinct");
    std::size_t d = points.size();
    FramedRep rep;
    rep.quiver = jordan_quiver();
    rep.d = IntVec({static_cast<Int>(d)});
    rep.f = IntVec({1});
    RMatrix x(d, d), y(d, d), iv(d, 1);
    for (std::size_t t = 0; t < d; ++t) {
        x.at(t, t) = points[t].first;
        y.at(t, t) = points[t].second;
        iv.at(t, 0) = 1;
    }
    rep.A.push_back(std::move(x));
    rep.B.push_back(std::move(y));
    rep.i.push_back(std::move(iv));
    rep.j.push_back(RMatrix(1, d));
    return rep;
}

ParabolicPoint a1_point(Int d, Int f, Int k) {
    if (!(0 <= d && d <= f)) throw input_error("a1 point requires 0 <= d <= f");
    if (!(std::max<Int>(0, 2 * d - f) <= k && k <= d))
        throw input_error("a1 point requires max(0, 2d-f) <= k <= d");
    std::size_t dn = static_cast<std::size_t>(d);
    std::size_t fn = static_cast<std::size_t>(f);
    std::size_t kn = static_cast<std::size_t>(k);

    ParabolicPoint pt;
    pt.rep.quiver = a1_quiver();
    pt.rep.d = IntVec({d});
    pt.rep.f = IntVec({f});
    RMatrix iv(dn, fn);
    for (std::size_t t = 0; t < dn; ++t) iv.at(t, t) = 1;
    RMatrix jv(fn, dn);
    // rank d-k landing in ker(i) = the trailing f-d coordinates
    for (std::size_t t = 0; t < dn - kn; ++t) jv.at(dn + t, kn + t) = 1;
    pt.rep.i.push_back(std::move(iv));
    pt.rep.j.push_back(std::move(jv));
    pt.flags.assign(1, {});
    for (std::size_t s = 1; s <= kn; ++s) {
        RMatrix step(dn, s);
        for (std::size_t c = 0; c < s; ++c) step.at(c, c) = 1;
        pt.flags[0].push_back(std::move(step));
    }
    return pt;
}

FramedRep an_flag_point(const IntVec& d, Int f) {
    std::size_t n = d.size();
    if (n == 0) throw input_error("an point needs at least one vertex");
    for (std::size_t v = 0; v + 1 < n; ++v)
        if (d[v] < d[v + 1]) throw input_error("an point requires d_1 >= ... >= d_n");
    if (d[0] > f || d[n - 1] < 0) throw input_error("an point requires f >= d_1 and d >= 0");

    FramedRep rep;
    rep.quiver = an_quiver(n);
    rep.d = d;
    rep.f = IntVec(n);
    rep.f[0] = f;
    auto projection = [](std::size_t rows, std::size_t cols) {
        RMatrix m(rows, cols);
        for (std::size_t t = 0; t < rows; ++t) m.at(t, t) = 1;
        return m;
    };
    for (std::size_t v = 0; v + 1 < n; ++v) {
        rep.A.push_back(projection(static_cast<std::size_t>(d[v + 1]), static_cast<std::size_t>(d[v])));
        rep.B.push_back(RMatrix(static_cast<std::size_t>(d[v]), static_cast<std::size_t>(d[v + 1])));
    }
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t dv = static_cast<std::size_t>(d[v]);
        std::size_t fv = static_cast<std::size_t>(rep.f[v]);
        rep.i.push_back(v == 0 ? projection(dv, fv) : RMatrix(dv, 0));
        rep.j.push_back(RMatrix(fv, dv));
    }
    return rep;
}

GalleryFamily gallery_family_from_string(const std::string& name) {
    if (name == "hilb_monomial") return GalleryFamily::HilbMonomial;
    if (name == "hilb_distinct") return GalleryFamily::HilbDistinct;
    if (name == "a1") return GalleryFamily::A1;
    if (name == "an") return GalleryFamily::An;
    throw input_error("unknown gallery family: " + name);
}

std::string to_string(GalleryFamily family) {
    switch (family) {
        case GalleryFamily::HilbMonomial: return "hilb_monomial";
        case GalleryFamily::HilbDistinct: return "hilb_distinct";
        case GalleryFamily::A1: return "a1";
        case GalleryFamily::An: return "an";
    }
    return "?";
}

ParabolicPoint random_gallery_point(GalleryFamily family, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto draw = [&rng](Int lo, Int hi) {
        return lo + static_cast<Int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    switch (family) {
        case GalleryFamily::HilbMonomial: {
            Int budget = draw(0, 8);
            Partition p;
            Int prev = budget;
            while (budget > 0) {
                Int part = draw(1, std::min(prev, budget));
                p.parts.push_back(part);
                prev = part;
                budget -= part;
            }
            Int k = draw(0, corner_count(p));
            return hilb_fixed_point_with_flag(p, k);
        }
        case GalleryFamily::HilbDistinct: {
            Int count = draw(0, 6);
            std::vector<std::pair<Rational, Rational>> points;
            while (static_cast<Int>(points.size()) < count) {
                Rational x = rat(draw(-4, 4), draw(1, 3));
                Rational y = rat(draw(-4, 4), draw(1, 3));
                if (std::find(points.begin(), points.end(), std::make_pair(x, y)) == points.end())
                    points.emplace_back(x, y);
            }
            ParabolicPoint pt;
            pt.rep = hilb_distinct_points(points);
            pt.flags.assign(1, {});
            return pt;
        }
        case GalleryFamily::A1: {
            Int f = draw(0, 8);
            Int d = draw(0, f);
            Int lo = std::max<Int>(0, 2 * d - f);
            Int k = draw(lo, d);
            return a1_point(d, f, k);
        }
        case GalleryFamily::An: {
            Int n = draw(1, 4);
            IntVec d(static_cast<std::size_t>(n));
            Int f = draw(0, 6);
            Int prev = f;
            for (std::size_t v = 0; v < d.size(); ++v) {
                d[v] = draw(0, prev);
                prev = d[v];
            }
            ParabolicPoint pt;
            pt.rep = an_flag_point(d, f);
            pt.flags.assign(static_cast<std::size_t>(n), {});
            return pt;
        }
    }
    throw internal_error("unhandled gallery family");
}

} // namespace quiverlab
