#include "quiverlab/json_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace quiverlab {

json quiver_to_json(const Quiver& q) {
    json j;
    j["vertices"] = q.vertices();
    json arrows = json::array();
    for (const Arrow& a : q.arrows()) arrows.push_back({{"id", a.id}, {"out", a.out}, {"in", a.in}});
    j["arrows"] = std::move(arrows);
    if (q.any_framing_vertex()) {
        json framing = json::array();
        for (std::size_t v = 0; v < q.num_vertices(); ++v)
            if (q.is_framing_vertex(v)) framing.push_back(q.vertices()[v]);
        j["framing_vertices"] = std::move(framing);
    }
    return j;
}

Quiver quiver_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
        throw input_error("quiver JSON needs 'vertices' and 'arrows'");
    std::vector<std::string> vertices;
    for (const auto& v : j.at("vertices")) {
        if (!v.is_string()) throw input_error("vertex labels must be strings");
        vertices.push_back(v.get<std::string>());
    }
    std::vector<Arrow> arrows;
    for (const auto& a : j.at("arrows")) {
        if (!a.contains("id") || !a.contains("out") || !a.contains("in"))
            throw input_error("arrow JSON needs 'id', 'out', 'in'");
        arrows.push_back({a.at("id").get<std::string>(), a.at("out").get<std::string>(),
                          a.at("in").get<std::string>()});
    }
    std::vector<bool> flags(vertices.size(), false);
    if (j.contains("framing_vertices")) {
        for (const auto& label : j.at("framing_vertices")) {
            auto it = std::find(vertices.begin(), vertices.end(), label.get<std::string>());
            if (it == vertices.end()) throw input_error("unknown framing vertex in quiver JSON");
            flags[static_cast<std::size_t>(it - vertices.begin())] = true;
        }
    }
    return Quiver(std::move(vertices), std::move(arrows), std::move(flags));
}

json vec_to_json(const Quiver& q, const IntVec& v) {
    check_dim_vector(q, v, "vector");
    json j = json::object();
    for (std::size_t t = 0; t < v.size(); ++t) j[q.vertices()[t]] = v[t];
    return j;
}

IntVec vec_from_json(const Quiver& q, const json& j) {
    IntVec v(q.num_vertices());
    if (j.is_array()) {
        if (j.size() != q.num_vertices())
            throw input_error("vector array length does not match the vertex count");
        for (std::size_t t = 0; t < v.size(); ++t) v[t] = j[t].get<Int>();
        return v;
    }
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) v[q.vertex_index(key)] = value.get<Int>();
        return v;
    }
    if (j.is_number_integer() && q.num_vertices() == 1) {
        v[0] = j.get<Int>();
        return v;
    }
    throw input_error("vector JSON must be an array or a label map");
}

json matrix_to_json(const RMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_to_string(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

static Rational entry_from_json(const json& j) {
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    if (j.is_number_integer()) return rat(j.get<Int>());
    throw input_error("matrix entries must be integers or 'p/q' strings");
}

RMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array()) throw input_error("matrix JSON must be a nested array");
    if (j.size() != rows) throw input_error("matrix has wrong row count");
    RMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) throw input_error("matrix has wrong column count");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = entry_from_json(j[r][c]);
    }
    return m;
}

json rep_to_json(const FramedRep& rep) {
    check_shapes(rep);
    const Quiver& q = rep.quiver;
    json j;
    j["quiver"] = quiver_to_json(q);
    j["d"] = vec_to_json(q, rep.d);
    j["f"] = vec_to_json(q, rep.f);
    json a = json::object(), b = json::object(), iv = json::object(), jv = json::object();
    for (std::size_t e = 0; e < q.num_arrows(); ++e) {
        a[q.arrows()[e].id] = matrix_to_json(rep.A[e]);
        b[q.arrows()[e].id] = matrix_to_json(rep.B[e]);
    }
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        iv[q.vertices()[v]] = matrix_to_json(rep.i[v]);
        jv[q.vertices()[v]] = matrix_to_json(rep.j[v]);
    }
    j["A"] = std::move(a);
    j["B"] = std::move(b);
    j["i"] = std::move(iv);
    j["j"] = std::move(jv);
    return j;
}

FramedRep rep_from_json(const json& j) {
    if (!j.is_object() || !j.contains("quiver") || !j.contains("d") || !j.contains("f"))
        throw input_error("representation JSON needs 'quiver', 'd', 'f'");
    FramedRep rep;
    rep.quiver = quiver_from_json(j.at("quiver"));
    const Quiver& q = rep.quiver;
    rep.d = vec_from_json(q, j.at("d"));
    rep.f = vec_from_json(q, j.at("f"));
    if (!rep.d.all_nonneg() || !rep.f.all_nonneg())
        throw input_error("dimension vectors must be non-negative");

    auto fetch = [&](const char* field, const std::string& key, std::size_t rows, std::size_t cols) {
        if (!j.contains(field) || !j.at(field).contains(key)) return RMatrix(rows, cols);
        return matrix_from_json(j.at(field).at(key), rows, cols);
    };
    for (const Arrow& a : q.arrows()) {
        std::size_t din = static_cast<std::size_t>(rep.d[q.vertex_index(a.in)]);
        std::size_t dout = static_cast<std::size_t>(rep.d[q.vertex_index(a.out)]);
        rep.A.push_back(fetch("A", a.id, din, dout));
        rep.B.push_back(fetch("B", a.id, dout, din));
    }
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        std::size_t dv = static_cast<std::size_t>(rep.d[v]);
        std::size_t fv = static_cast<std::size_t>(rep.f[v]);
        rep.i.push_back(fetch("i", q.vertices()[v], dv, fv));
        rep.j.push_back(fetch("j", q.vertices()[v], fv, dv));
    }
    check_shapes(rep);
    return rep;
}

json point_to_json(const ParabolicPoint& pt) {
    json j = rep_to_json(pt.rep);
    json flags = json::object();
    for (std::size_t v = 0; v < pt.flags.size(); ++v) {
        if (pt.flags[v].empty()) continue;
        json steps = json::array();
        for (const RMatrix& step : pt.flags[v]) steps.push_back(matrix_to_json(step));
        flags[pt.rep.quiver.vertices()[v]] = std::move(steps);
    }
    j["flags"] = std::move(flags);
    return j;
}

ParabolicPoint point_from_json(const json& j) {
    ParabolicPoint pt;
    pt.rep = rep_from_json(j);
    const Quiver& q = pt.rep.quiver;
    pt.flags.assign(q.num_vertices(), {});
    if (j.contains("flags")) {
        for (const auto& [key, steps] : j.at("flags").items()) {
            std::size_t v = q.vertex_index(key);
            if (!steps.is_array()) throw input_error("flags must map vertices to matrix lists");
            for (const auto& step : steps) {
                std::size_t cols = step.empty() ? 0 : step[0].size();
                pt.flags[v].push_back(
                    matrix_from_json(step, static_cast<std::size_t>(pt.rep.d[v]), cols));
            }
        }
    }
    return pt;
}

json chain_to_json(const ParabolicChainPoint& ch) {
    json j;
    json levels = json::array();
    for (const FramedRep& rep : ch.levels) levels.push_back(rep_to_json(rep));
    j["levels"] = std::move(levels);
    json pis = json::array();
    for (std::size_t m = 0; m < ch.pi.size(); ++m) {
        json step = json::object();
        const Quiver& q = ch.levels[m].quiver;
        for (std::size_t v = 0; v < q.num_vertices(); ++v)
            step[q.vertices()[v]] = matrix_to_json(ch.pi[m][v]);
        pis.push_back(std::move(step));
    }
    j["pi"] = std::move(pis);
    return j;
}

ParabolicChainPoint chain_from_json(const json& j) {
    if (!j.is_object() || !j.contains("levels") || !j.contains("pi"))
        throw input_error("chain JSON needs 'levels' and 'pi'");
    ParabolicChainPoint ch;
    for (const auto& level : j.at("levels")) ch.levels.push_back(rep_from_json(level));
    if (ch.levels.empty()) throw input_error("chain needs at least one level");
    if (j.at("pi").size() + 1 != ch.levels.size())
        throw input_error("chain needs one projection per consecutive level pair");
    for (std::size_t m = 0; m < j.at("pi").size(); ++m) {
        const Quiver& q = ch.levels[m].quiver;
        std::vector<RMatrix> step;
        for (std::size_t v = 0; v < q.num_vertices(); ++v) {
            const std::string& label = q.vertices()[v];
            std::size_t rows = static_cast<std::size_t>(ch.levels[m + 1].d[v]);
            std::size_t cols = static_cast<std::size_t>(ch.levels[m].d[v]);
            if (!j.at("pi")[m].contains(label))
                throw input_error("chain projection missing vertex " + label);
            step.push_back(matrix_from_json(j.at("pi")[m].at(label), rows, cols));
        }
        ch.pi.push_back(std::move(step));
    }
    return ch;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& err) {
        throw input_error("cannot parse JSON in " + path + ": " + err.what());
    }
}

Quiver quiver_from_spec(const std::string& spec) {
    if (!spec.empty() && spec.front() == '{') {
        try {
            return quiver_from_json(json::parse(spec));
        } catch (const json::parse_error& err) {
            throw input_error(std::string("cannot parse inline quiver JSON: ") + err.what());
        }
    }
    if (std::filesystem::exists(spec)) return quiver_from_json(load_json_file(spec));
    if (spec == "jordan") return jordan_quiver();
    if (spec == "a1") return a1_quiver();
    if (spec.rfind("an:", 0) == 0) {
        try {
            return an_quiver(static_cast<std::size_t>(std::stoull(spec.substr(3))));
        } catch (const std::exception&) {
            throw input_error("cannot parse quiver size in: " + spec);
        }
    }
    throw input_error("unknown quiver spec (not a file, inline JSON, or builtin): " + spec);
}

IntVec vec_from_spec(const Quiver& q, const std::string& spec) {
    IntVec v(q.num_vertices());
    std::vector<std::string> items;
    std::stringstream stream(spec);
    std::string item;
    while (std::getline(stream, item, ',')) items.push_back(item);
    if (items.empty()) throw input_error("empty vector spec");

    auto parse_int = [](const std::string& text) {
        try {
            std::size_t used = 0;
            Int value = std::stoll(text, &used);
            if (used != text.size()) throw input_error("trailing characters in integer: " + text);
            return value;
        } catch (const input_error&) {
            throw;
        } catch (const std::exception&) {
            throw input_error("cannot parse integer: " + text);
        }
    };

    if (spec.find('=') != std::string::npos) {
        for (const std::string& pair : items) {
            std::size_t eq = pair.find('=');
            if (eq == std::string::npos) throw input_error("expected label=value in: " + pair);
            v[q.vertex_index(pair.substr(0, eq))] = parse_int(pair.substr(eq + 1));
        }
        return v;
    }
    if (items.size() != q.num_vertices())
        throw input_error("vector spec has " + std::to_string(items.size()) + " entries for " +
                          std::to_string(q.num_vertices()) + " vertices");
    for (std::size_t t = 0; t < items.size(); ++t) v[t] = parse_int(items[t]);
    return v;
}

json stratum_report_to_json(const Quiver& q, const StratumReport& report) {
    json j;
    j["r"] = vec_to_json(q, report.r);
    j["stratum_dim"] = report.stratum_dim;
    j["pminus_fiber_dim"] = report.pminus_fiber_dim;
    j["pminus_preimage_dim"] = report.pminus_preimage_dim;
    j["nonempty"] = report.nonempty;
    return j;
}

json nonempty_verdict_to_json(const Quiver& q, const NonemptyVerdict& verdict, bool with_trace) {
    json j;
    j["nonempty"] = verdict.nonempty;
    j["reason"] = verdict.reason;
    if (with_trace) {
        json trace = json::array();
        for (const auto& [d, k] : verdict.trace)
            trace.push_back({{"d", vec_to_json(q, d)}, {"k", vec_to_json(q, k)}});
        j["trace"] = std::move(trace);
        json roots = json::array();
        for (const RootCheckResult& root : verdict.root_checks) {
            json r;
            r["verdict"] = to_string(root.verdict);
            json steps = json::array();
            for (const auto& [v, alpha] : root.trace)
                steps.push_back({{"reflected", v}, {"alpha", alpha.entries}});
            r["reflections"] = std::move(steps);
            roots.push_back(std::move(r));
        }
        j["root_checks"] = std::move(roots);
    }
    return j;
}

json root_check_to_json(const RootGraph& g, const RootCheckResult& result, bool with_trace) {
    json j;
    j["verdict"] = to_string(result.verdict);
    if (with_trace) {
        json steps = json::array();
        for (const auto& [v, alpha] : result.trace)
            steps.push_back({{"reflected", g.labels[v]}, {"alpha", alpha.entries}});
        j["reflections"] = std::move(steps);
    }
    return j;
}

json validation_to_json(const ValidationReport& report) {
    json j;
    j["ok"] = report.ok();
    j["violations"] = report.violations;
    j["warnings"] = report.warnings;
    return j;
}

json tangent_report_to_json(const TangentReport& report) {
    json j;
    j["rank_j"] = report.rank_j;
    j["rank_dmu"] = report.rank_dmu;
    j["lie_dim"] = report.lie_dim;
    j["codomain_dim"] = report.codomain_dim;
    j["ambient_dim"] = report.ambient_dim;
    j["complex_ok"] = report.complex_ok;
    j["h_dim"] = report.h_dim;
    j["formula_dim"] = report.formula_dim;
    j["certified"] = report.certified();
    return j;
}

} // namespace quiverlab
