#include "quiverlab/quiver.hpp"

#include <algorithm>
#include <unordered_set>

namespace quiverlab {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows,
               std::vector<bool> framing_flags)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)), framing_(std::move(framing_flags)) {
    if (framing_.empty()) framing_.assign(vertices_.size(), false);
    if (framing_.size() != vertices_.size())
        throw input_error("framing flag list does not match vertex count");
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (!index_.emplace(vertices_[i], i).second)
            throw input_error("duplicate vertex label: " + vertices_[i]);
    }
    std::unordered_set<std::string> arrow_ids;
    counts_.assign(vertices_.size(), std::vector<Int>(vertices_.size(), 0));
    for (const Arrow& a : arrows_) {
        if (!arrow_ids.insert(a.id).second) throw input_error("duplicate arrow id: " + a.id);
        auto out_it = index_.find(a.out);
        auto in_it = index_.find(a.in);
        if (out_it == index_.end()) throw input_error("arrow " + a.id + " has unknown source " + a.out);
        if (in_it == index_.end()) throw input_error("arrow " + a.id + " has unknown target " + a.in);
        counts_[out_it->second][in_it->second] += 1;
    }
}

std::size_t Quiver::vertex_index(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw input_error("unknown vertex: " + label);
    return it->second;
}

bool Quiver::has_vertex(const std::string& label) const { return index_.count(label) != 0; }

bool Quiver::any_framing_vertex() const {
    return std::find(framing_.begin(), framing_.end(), true) != framing_.end();
}

Int Quiver::arrow_count(const std::string& v, const std::string& w) const {
    return counts_[vertex_index(v)][vertex_index(w)];
}

Int Quiver::arrow_count(std::size_t v, std::size_t w) const { return counts_[v][w]; }

bool IntVec::is_zero() const {
    return std::all_of(entries.begin(), entries.end(), [](Int x) { return x == 0; });
}

bool IntVec::all_nonneg() const {
    return std::all_of(entries.begin(), entries.end(), [](Int x) { return x >= 0; });
}

Int IntVec::sum() const {
    Int s = 0;
    for (Int x : entries) s += x;
    return s;
}

IntVec delta(std::size_t n, std::size_t index) {
    IntVec v(n);
    v[index] = 1;
    return v;
}

static void check_same_size(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw input_error("vector index sets differ");
}

IntVec vec_add(const IntVec& a, const IntVec& b) {
    check_same_size(a, b);
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IntVec vec_sub(const IntVec& a, const IntVec& b, bool require_nonneg) {
    check_same_size(a, b);
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] - b[i];
        if (require_nonneg && r[i] < 0) throw input_error("vector difference has a negative entry");
    }
    return r;
}

bool vec_le(const IntVec& a, const IntVec& b) {
    check_same_size(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

IntVec vec_max(const IntVec& a, const IntVec& b) {
    check_same_size(a, b);
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

IntVec vec_max(const IntVec& a, Int floor) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], floor);
    return r;
}

IntMatrix cartan(const Quiver& q) {
    std::size_t n = q.num_vertices();
    IntMatrix c(n, std::vector<Int>(n, 0));
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = 0; w < n; ++w)
            c[v][w] = (v == w ? 2 : 0) - q.arrow_count(v, w) - q.arrow_count(w, v);
    return c;
}

IntVec mat_apply(const IntMatrix& m, const IntVec& v) {
    if (m.size() != v.size()) throw input_error("matrix/vector size mismatch");
    IntVec r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

Int bilinear(const IntVec& a, const IntMatrix& m, const IntVec& b) {
    return dot(a, mat_apply(m, b));
}

Int dot(const IntVec& a, const IntVec& b) {
    check_same_size(a, b);
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Quiver double_quiver(const Quiver& q) {
    std::vector<Arrow> arrows = q.arrows();
    for (const Arrow& a : q.arrows()) arrows.push_back({a.id + "*", a.in, a.out});
    std::vector<bool> flags;
    for (std::size_t i = 0; i < q.num_vertices(); ++i) flags.push_back(q.is_framing_vertex(i));
    return Quiver(q.vertices(), std::move(arrows), std::move(flags));
}

Quiver framed_quiver(const Quiver& q) {
    std::vector<std::string> vertices = q.vertices();
    std::vector<bool> flags(vertices.size(), false);
    std::vector<Arrow> arrows = q.arrows();
    for (const std::string& v : q.vertices()) {
        vertices.push_back(v + "~");
        flags.push_back(true);
        arrows.push_back({"f:" + v, v + "~", v});
    }
    return Quiver(std::move(vertices), std::move(arrows), std::move(flags));
}

Quiver repetition(const Quiver& q, Int level, RepetitionVariant variant) {
    if (level < 0) throw input_error("repetition level must be non-negative");
    const Quiver base = (variant == RepetitionVariant::FramedDouble) ? double_quiver(q) : q;

    auto at_level = [](const std::string& v, Int m) { return v + "@" + std::to_string(m); };

    std::vector<std::string> vertices;
    std::vector<bool> flags;
    for (Int m = 0; m <= level; ++m)
        for (const std::string& v : base.vertices()) {
            vertices.push_back(at_level(v, m));
            flags.push_back(false);
        }

    std::vector<Arrow> arrows;
    for (Int m = 0; m <= level; ++m)
        for (const Arrow& a : base.arrows())
            arrows.push_back({a.id + "@" + std::to_string(m), at_level(a.out, m), at_level(a.in, m)});
    for (Int m = 0; m < level; ++m)
        for (const std::string& v : base.vertices())
            arrows.push_back({"p:" + v + "@" + std::to_string(m), at_level(v, m), at_level(v, m + 1)});

    if (variant != RepetitionVariant::Plain) {
        for (const std::string& v : base.vertices()) {
            vertices.push_back(v + "~");
            flags.push_back(true);
        }
        for (const std::string& v : base.vertices())
            for (Int m = 0; m <= level; ++m) {
                arrows.push_back({"f:" + v + "@" + std::to_string(m), v + "~", at_level(v, m)});
                arrows.push_back({"g:" + v + "@" + std::to_string(m), at_level(v, m), v + "~"});
            }
    }
    return Quiver(std::move(vertices), std::move(arrows), std::move(flags));
}

IntVec k0_vector(const Quiver& q, const IntVec& d, const IntVec& f) {
    check_dim_vector(q, d, "d");
    check_dim_vector(q, f, "f");
    return vec_sub(mat_apply(cartan(q), d), f);
}

void check_dim_vector(const Quiver& q, const IntVec& v, const char* name) {
    if (v.size() != q.num_vertices())
        throw input_error(std::string(name) + ": index set does not match the vertex set");
}

} // namespace quiverlab
