#include "quiverlab/rep.hpp"

#include <algorithm>
#include <sstream>

#include "quiverlab/dims.hpp"

namespace quiverlab {

namespace {

std::string shape_text(const RMatrix& m) {
    std::ostringstream os;
    os << m.rows() << "x" << m.cols();
    return os.str();
}

RMatrix mat_inverse(const RMatrix& t) {
    auto inv = right_inverse(t);
    if (!inv || t.rows() != t.cols()) throw internal_error("basis matrix is not invertible");
    return *inv;
}

// Arrow endpoint indices, resolved once.
struct ArrowEnds {
    std::size_t out, in;
};

std::vector<ArrowEnds> arrow_ends(const Quiver& q) {
    std::vector<ArrowEnds> ends;
    ends.reserve(q.num_arrows());
    for (const Arrow& a : q.arrows()) ends.push_back({q.vertex_index(a.out), q.vertex_index(a.in)});
    return ends;
}

} // namespace

void check_shapes(const FramedRep& rep) {
    const Quiver& q = rep.quiver;
    check_dim_vector(q, rep.d, "d");
    check_dim_vector(q, rep.f, "f");
    if (!rep.d.all_nonneg() || !rep.f.all_nonneg())
        throw input_error("dimension vectors must be non-negative");
    if (rep.A.size() != q.num_arrows() || rep.B.size() != q.num_arrows())
        throw input_error("arrow matrix count does not match the arrow set");
    if (rep.i.size() != q.num_vertices() || rep.j.size() != q.num_vertices())
        throw input_error("framing matrix count does not match the vertex set");
    auto ends = arrow_ends(q);
    for (std::size_t e = 0; e < q.num_arrows(); ++e) {
        std::size_t din = static_cast<std::size_t>(rep.d[ends[e].in]);
        std::size_t dout = static_cast<std::size_t>(rep.d[ends[e].out]);
        if (rep.A[e].rows() != din || rep.A[e].cols() != dout)
            throw input_error("A[" + q.arrows()[e].id + "] has shape " + shape_text(rep.A[e]));
        if (rep.B[e].rows() != dout || rep.B[e].cols() != din)
            throw input_error("B[" + q.arrows()[e].id + "] has shape " + shape_text(rep.B[e]));
    }
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        std::size_t dv = static_cast<std::size_t>(rep.d[v]);
        std::size_t fv = static_cast<std::size_t>(rep.f[v]);
        if (rep.i[v].rows() != dv || rep.i[v].cols() != fv)
            throw input_error("i[" + q.vertices()[v] + "] has shape " + shape_text(rep.i[v]));
        if (rep.j[v].rows() != fv || rep.j[v].cols() != dv)
            throw input_error("j[" + q.vertices()[v] + "] has shape " + shape_text(rep.j[v]));
    }
}

FramedRep zero_rep(const Quiver& q, const IntVec& f) {
    check_dim_vector(q, f, "f");
    FramedRep rep;
    rep.quiver = q;
    rep.d = IntVec(q.num_vertices());
    rep.f = f;
    for (std::size_t e = 0; e < q.num_arrows(); ++e) {
        rep.A.emplace_back(0, 0);
        rep.B.emplace_back(0, 0);
    }
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        rep.i.emplace_back(0, static_cast<std::size_t>(f[v]));
        rep.j.emplace_back(static_cast<std::size_t>(f[v]), 0);
    }
    return rep;
}

std::vector<RMatrix> moment_residual(const FramedRep& rep) {
    check_shapes(rep);
    const Quiver& q = rep.quiver;
    auto ends = arrow_ends(q);
    std::vector<RMatrix> residual;
    residual.reserve(q.num_vertices());
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        std::size_t dv = static_cast<std::size_t>(rep.d[v]);
        RMatrix r(dv, dv);
        for (std::size_t e = 0; e < q.num_arrows(); ++e) {
            if (ends[e].in == v) r = r + rep.A[e] * rep.B[e];
            if (ends[e].out == v) r = r - rep.B[e] * rep.A[e];
        }
        r = r + rep.i[v] * rep.j[v];
        residual.push_back(std::move(r));
    }
    return residual;
}

bool is_flat(const FramedRep& rep) {
    for (const RMatrix& r : moment_residual(rep))
        if (!r.is_zero()) return false;
    return true;
}

StabilityWitness is_stable(const FramedRep& rep) {
    check_shapes(rep);
    const Quiver& q = rep.quiver;
    auto ends = arrow_ends(q);
    StabilityWitness w;
    for (std::size_t v = 0; v < q.num_vertices(); ++v) w.saturated.push_back(col_space_basis(rep.i[v]));

    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t e = 0; e < q.num_arrows(); ++e) {
            RMatrix fwd = rep.A[e] * w.saturated[ends[e].out];
            RMatrix up = col_space_basis(hstack(w.saturated[ends[e].in], fwd));
            if (up.cols() > w.saturated[ends[e].in].cols()) {
                w.saturated[ends[e].in] = std::move(up);
                grew = true;
            }
            RMatrix back = rep.B[e] * w.saturated[ends[e].in];
            RMatrix down = col_space_basis(hstack(w.saturated[ends[e].out], back));
            if (down.cols() > w.saturated[ends[e].out].cols()) {
                w.saturated[ends[e].out] = std::move(down);
                grew = true;
            }
        }
    }
    w.stable = true;
    for (std::size_t v = 0; v < q.num_vertices(); ++v)
        if (w.saturated[v].cols() != static_cast<std::size_t>(rep.d[v])) w.stable = false;
    return w;
}

RMatrix hom_stack(const FramedRep& rep, std::size_t v) {
    const Quiver& q = rep.quiver;
    auto ends = arrow_ends(q);
    std::size_t dv = static_cast<std::size_t>(rep.d[v]);
    RMatrix stacked(0, dv);
    for (std::size_t e = 0; e < q.num_arrows(); ++e)
        if (ends[e].out == v) stacked = vstack(stacked, rep.A[e]);
    for (std::size_t e = 0; e < q.num_arrows(); ++e)
        if (ends[e].in == v) stacked = vstack(stacked, rep.B[e]);
    return vstack(stacked, rep.j[v]);
}

RMatrix hom_basis(const FramedRep& rep, std::size_t v) {
    check_shapes(rep);
    return kernel_basis(hom_stack(rep, v));
}

Int hom_dim(const FramedRep& rep, std::size_t v) {
    return static_cast<Int>(hom_basis(rep, v).cols());
}

IntVec bn_stratum_of(const FramedRep& rep) {
    check_shapes(rep);
    IntVec r(rep.quiver.num_vertices());
    for (std::size_t v = 0; v < r.size(); ++v) r[v] = hom_dim(rep, v);
    return r;
}

IntVec ParabolicPoint::k_vector() const {
    IntVec k(rep.quiver.num_vertices());
    for (std::size_t v = 0; v < flags.size() && v < k.size(); ++v)
        if (!flags[v].empty()) k[v] = static_cast<Int>(flags[v].back().cols());
    return k;
}

ValidationReport validate_rep(const FramedRep& rep) {
    ValidationReport report;
    try {
        check_shapes(rep);
    } catch (const input_error& err) {
        report.violations.push_back(std::string("shapes: ") + err.what());
        return report;
    }
    auto residual = moment_residual(rep);
    for (std::size_t v = 0; v < residual.size(); ++v)
        if (!residual[v].is_zero())
            report.violations.push_back("moment map residual nonzero at vertex " +
                                        rep.quiver.vertices()[v]);
    if (!is_stable(rep).stable) report.violations.push_back("representation is not stable");
    return report;
}

ValidationReport validate_parabolic_point(const ParabolicPoint& pt) {
    ValidationReport report = validate_rep(pt.rep);
    if (!report.violations.empty() &&
        report.violations.front().rfind("shapes:", 0) == 0)
        return report;
    const Quiver& q = pt.rep.quiver;
    if (pt.flags.size() != q.num_vertices()) {
        report.violations.push_back("flag list does not match the vertex set");
        return report;
    }
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        const std::string& name = q.vertices()[v];
        std::size_t dv = static_cast<std::size_t>(pt.rep.d[v]);
        std::size_t prev_rank = 0;
        for (std::size_t s = 0; s < pt.flags[v].size(); ++s) {
            const RMatrix& step = pt.flags[v][s];
            if (step.rows() != dv) {
                report.violations.push_back("flag step at " + name + " has wrong ambient dimension");
                continue;
            }
            std::size_t r = rank(step);
            if (r != step.cols())
                report.violations.push_back("flag step at " + name + " is rank deficient");
            if (r <= prev_rank && !(s == 0 && r > 0))
                report.violations.push_back("flag at " + name + " is not strictly increasing");
            if (s > 0 && !span_contains(step, pt.flags[v][s - 1]))
                report.violations.push_back("flag at " + name + " is not nested at step " +
                                            std::to_string(s));
            prev_rank = r;
        }
        if (!pt.flags[v].empty()) {
            RMatrix hom = hom_basis(pt.rep, v);
            if (!span_contains(hom, pt.flags[v].back()))
                report.violations.push_back("top flag at " + name +
                                            " is not annihilated by A, B, j");
        }
    }
    return report;
}

ValidationReport validate_chain(const ParabolicChainPoint& ch) {
    ValidationReport report;
    if (ch.levels.empty()) {
        report.violations.push_back("chain has no levels");
        return report;
    }
    if (ch.pi.size() + 1 != ch.levels.size()) {
        report.violations.push_back("chain has " + std::to_string(ch.levels.size()) +
                                    " levels but " + std::to_string(ch.pi.size()) + " projections");
        return report;
    }
    const Quiver& q = ch.levels.front().quiver;
    for (std::size_t m = 0; m < ch.levels.size(); ++m) {
        ValidationReport level = validate_rep(ch.levels[m]);
        for (const std::string& text : level.violations)
            report.violations.push_back("level " + std::to_string(m) + ": " + text);
        if (ch.levels[m].quiver.vertices() != q.vertices())
            report.violations.push_back("level " + std::to_string(m) + ": quiver mismatch");
        if (ch.levels[m].f != ch.levels.front().f)
            report.violations.push_back("level " + std::to_string(m) + ": framing vector differs");
    }
    if (!report.violations.empty()) return report;

    auto ends = arrow_ends(q);
    for (std::size_t m = 0; m < ch.pi.size(); ++m) {
        const FramedRep& hi = ch.levels[m];
        const FramedRep& lo = ch.levels[m + 1];
        if (ch.pi[m].size() != q.num_vertices()) {
            report.violations.push_back("projection " + std::to_string(m) + ": wrong vertex count");
            return report;
        }
        for (std::size_t v = 0; v < q.num_vertices(); ++v) {
            const RMatrix& p = ch.pi[m][v];
            if (p.rows() != static_cast<std::size_t>(lo.d[v]) ||
                p.cols() != static_cast<std::size_t>(hi.d[v])) {
                report.violations.push_back("projection " + std::to_string(m) + " at " +
                                            q.vertices()[v] + " has shape " + shape_text(p));
                return report;
            }
            if (rank(p) != p.rows())
                report.violations.push_back("projection " + std::to_string(m) + " at " +
                                            q.vertices()[v] + " is not surjective");
        }
        for (std::size_t e = 0; e < q.num_arrows(); ++e) {
            if (ch.pi[m][ends[e].in] * hi.A[e] != lo.A[e] * ch.pi[m][ends[e].out])
                report.violations.push_back("square for A[" + q.arrows()[e].id + "] at step " +
                                            std::to_string(m) + " does not commute");
            if (ch.pi[m][ends[e].out] * hi.B[e] != lo.B[e] * ch.pi[m][ends[e].in])
                report.violations.push_back("square for B[" + q.arrows()[e].id + "] at step " +
                                            std::to_string(m) + " does not commute");
        }
        for (std::size_t v = 0; v < q.num_vertices(); ++v) {
            if (ch.pi[m][v] * hi.i[v] != lo.i[v])
                report.violations.push_back("triangle for i at " + q.vertices()[v] + " step " +
                                            std::to_string(m) + " does not commute");
            if (lo.j[v] * ch.pi[m][v] != hi.j[v])
                report.violations.push_back("triangle for j at " + q.vertices()[v] + " step " +
                                            std::to_string(m) + " does not commute");
        }
    }

    // Composite kernel must be annihilated by the level-0 maps.
    const FramedRep& top = ch.levels.front();
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        RMatrix composite = RMatrix::identity(static_cast<std::size_t>(top.d[v]));
        for (std::size_t m = 0; m < ch.pi.size(); ++m) composite = ch.pi[m][v] * composite;
        RMatrix kernel = kernel_basis(composite);
        if (kernel.cols() == 0) continue;
        RMatrix hom = hom_basis(top, v);
        if (!span_contains(hom, kernel))
            report.violations.push_back("composite kernel at " + q.vertices()[v] +
                                        " is not annihilated by A, B, j");
    }
    return report;
}

RMatrix adapted_basis(std::size_t dim, const std::vector<RMatrix>& steps) {
    RMatrix chosen(dim, 0);
    auto try_add = [&](const std::vector<Rational>& candidate) {
        RMatrix widened = hstack(chosen, from_column(candidate));
        if (rank(widened) > chosen.cols()) chosen = std::move(widened);
    };
    for (const RMatrix& step : steps) {
        if (step.rows() != dim) throw internal_error("adapted basis: ambient dimension mismatch");
        for (std::size_t c = 0; c < step.cols(); ++c) try_add(step.col(c));
    }
    for (std::size_t t = 0; t < dim && chosen.cols() < dim; ++t) {
        std::vector<Rational> e(dim);
        e[t] = 1;
        try_add(e);
    }
    if (chosen.cols() != dim) throw internal_error("adapted basis: could not complete a basis");
    return chosen;
}

QuotientResult quotient_by_K(const FramedRep& rep, const std::vector<RMatrix>& K) {
    check_shapes(rep);
    const Quiver& q = rep.quiver;
    if (K.size() != q.num_vertices()) throw input_error("quotient: subspace list size mismatch");
    auto ends = arrow_ends(q);

    std::vector<std::size_t> kdim(q.num_vertices());
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        if (K[v].rows() != static_cast<std::size_t>(rep.d[v]))
            throw input_error("quotient: subspace at " + q.vertices()[v] +
                              " has wrong ambient dimension");
        if (rank(K[v]) != K[v].cols())
            throw input_error("quotient: subspace at " + q.vertices()[v] + " is rank deficient");
        kdim[v] = K[v].cols();
    }
    for (std::size_t e = 0; e < q.num_arrows(); ++e) {
        if (!(rep.A[e] * K[ends[e].out]).is_zero())
            throw input_error("quotient: A[" + q.arrows()[e].id + "] does not annihilate K");
        if (!(rep.B[e] * K[ends[e].in]).is_zero())
            throw input_error("quotient: B[" + q.arrows()[e].id + "] does not annihilate K");
    }
    for (std::size_t v = 0; v < q.num_vertices(); ++v)
        if (!(rep.j[v] * K[v]).is_zero())
            throw input_error("quotient: j at " + q.vertices()[v] + " does not annihilate K");

    QuotientResult result;
    result.rep.quiver = q;
    result.rep.f = rep.f;
    result.rep.d = rep.d;
    std::vector<RMatrix> T(q.num_vertices()), Tinv(q.num_vertices());
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        result.rep.d[v] = rep.d[v] - static_cast<Int>(kdim[v]);
        T[v] = adapted_basis(static_cast<std::size_t>(rep.d[v]), {K[v]});
        Tinv[v] = mat_inverse(T[v]);
        result.projection.push_back(Tinv[v].rows_block(kdim[v], static_cast<std::size_t>(rep.d[v])));
    }
    for (std::size_t e = 0; e < q.num_arrows(); ++e) {
        std::size_t vin = ends[e].in, vout = ends[e].out;
        RMatrix a = Tinv[vin] * rep.A[e] * T[vout];
        RMatrix b = Tinv[vout] * rep.B[e] * T[vin];
        result.rep.A.push_back(a.block(kdim[vin], a.rows(), kdim[vout], a.cols()));
        result.rep.B.push_back(b.block(kdim[vout], b.rows(), kdim[vin], b.cols()));
    }
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        RMatrix iv = Tinv[v] * rep.i[v];
        result.rep.i.push_back(iv.rows_block(kdim[v], iv.rows()));
        RMatrix jv = rep.j[v] * T[v];
        result.rep.j.push_back(jv.cols_block(kdim[v], jv.cols()));
    }
    result.flat = is_flat(result.rep);
    result.stable = is_stable(result.rep).stable;
    return result;
}

ParabolicChainPoint chain_from_flag(const ParabolicPoint& pt) {
    ValidationReport check = validate_parabolic_point(pt);
    if (!check.ok()) throw input_error("chain_from_flag: invalid point: " + check.violations.front());
    const Quiver& q = pt.rep.quiver;

    // Unit steps in vertex order, flag order within each vertex.
    std::vector<std::size_t> step_vertex;
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        Int kv = pt.k_vector()[v];
        for (Int s = 0; s < kv; ++s) step_vertex.push_back(v);
    }

    ParabolicChainPoint ch;
    ch.levels.push_back(pt.rep);
    if (step_vertex.empty()) return ch;

    // Cumulative kernel sizes per level; level m kernel at v is spanned by
    // the first cut[m][v] columns of the adapted basis.
    std::vector<IntVec> cut(step_vertex.size() + 1, IntVec(q.num_vertices()));
    for (std::size_t m = 0; m < step_vertex.size(); ++m) {
        cut[m + 1] = cut[m];
        cut[m + 1][step_vertex[m]] += 1;
    }

    std::vector<RMatrix> T(q.num_vertices()), Tinv(q.num_vertices());
    std::vector<RMatrix> Achk(q.num_arrows()), Bchk(q.num_arrows());
    std::vector<RMatrix> ichk(q.num_vertices()), jchk(q.num_vertices());
    auto ends = arrow_ends(q);
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        T[v] = adapted_basis(static_cast<std::size_t>(pt.rep.d[v]), pt.flags[v]);
        Tinv[v] = mat_inverse(T[v]);
    }
    for (std::size_t e = 0; e < q.num_arrows(); ++e) {
        Achk[e] = Tinv[ends[e].in] * pt.rep.A[e] * T[ends[e].out];
        Bchk[e] = Tinv[ends[e].out] * pt.rep.B[e] * T[ends[e].in];
    }
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        ichk[v] = Tinv[v] * pt.rep.i[v];
        jchk[v] = pt.rep.j[v] * T[v];
    }

    auto level_rep = [&](const IntVec& c) {
        FramedRep rep;
        rep.quiver = q;
        rep.f = pt.rep.f;
        rep.d = vec_sub(pt.rep.d, c);
        for (std::size_t e = 0; e < q.num_arrows(); ++e) {
            std::size_t cin = static_cast<std::size_t>(c[ends[e].in]);
            std::size_t cout = static_cast<std::size_t>(c[ends[e].out]);
            rep.A.push_back(Achk[e].block(cin, Achk[e].rows(), cout, Achk[e].cols()));
            rep.B.push_back(Bchk[e].block(cout, Bchk[e].rows(), cin, Bchk[e].cols()));
        }
        for (std::size_t v = 0; v < q.num_vertices(); ++v) {
            std::size_t cv = static_cast<std::size_t>(c[v]);
            rep.i.push_back(ichk[v].rows_block(cv, ichk[v].rows()));
            rep.j.push_back(jchk[v].cols_block(cv, jchk[v].cols()));
        }
        return rep;
    };

    for (std::size_t m = 1; m < cut.size(); ++m) ch.levels.push_back(level_rep(cut[m]));

    for (std::size_t m = 0; m + 1 < cut.size(); ++m) {
        std::vector<RMatrix> proj;
        for (std::size_t v = 0; v < q.num_vertices(); ++v) {
            std::size_t prev = static_cast<std::size_t>(cut[m][v]);
            std::size_t next = static_cast<std::size_t>(cut[m + 1][v]);
            std::size_t dv = static_cast<std::size_t>(pt.rep.d[v]);
            if (m == 0) {
                // Level 0 keeps the original coordinates, so the first
                // projection carries the change of basis.
                proj.push_back(Tinv[v].rows_block(next, dv));
            } else {
                RMatrix p(dv - next, dv - prev);
                for (std::size_t t = next; t < dv; ++t) p.at(t - next, t - prev) = 1;
                proj.push_back(std::move(p));
            }
        }
        ch.pi.push_back(std::move(proj));
    }
    return ch;
}

ParabolicPoint flag_from_chain(const ParabolicChainPoint& ch) {
    ValidationReport check = validate_chain(ch);
    if (!check.ok()) throw input_error("flag_from_chain: invalid chain: " + check.violations.front());
    const Quiver& q = ch.levels.front().quiver;
    ParabolicPoint pt;
    pt.rep = ch.levels.front();
    pt.flags.assign(q.num_vertices(), {});
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        RMatrix composite = RMatrix::identity(static_cast<std::size_t>(pt.rep.d[v]));
        std::size_t last_dim = 0;
        for (std::size_t m = 0; m < ch.pi.size(); ++m) {
            composite = ch.pi[m][v] * composite;
            RMatrix kernel = col_space_basis(kernel_basis(composite));
            if (kernel.cols() > last_dim) {
                pt.flags[v].push_back(kernel);
                last_dim = kernel.cols();
            }
        }
    }
    return pt;
}

FramedRep pminus(const ParabolicPoint& pt) {
    ValidationReport check = validate_parabolic_point(pt);
    if (!check.ok()) throw input_error("pminus: invalid point: " + check.violations.front());
    return pt.rep;
}

FramedRep pplus(const ParabolicPoint& pt) {
    ValidationReport check = validate_parabolic_point(pt);
    if (!check.ok()) throw input_error("pplus: invalid point: " + check.violations.front());
    std::vector<RMatrix> K;
    for (std::size_t v = 0; v < pt.rep.quiver.num_vertices(); ++v) {
        if (pt.flags[v].empty())
            K.emplace_back(static_cast<std::size_t>(pt.rep.d[v]), 0);
        else
            K.push_back(pt.flags[v].back());
    }
    return quotient_by_K(pt.rep, K).rep;
}

ParabolicChainPoint forget_first(const ParabolicChainPoint& ch) {
    ValidationReport check = validate_chain(ch);
    if (!check.ok()) throw input_error("forget_first: invalid chain: " + check.violations.front());
    if (ch.levels.size() < 2) throw input_error("forget_first: chain has no step to forget");
    ParabolicChainPoint out;
    out.levels.assign(ch.levels.begin() + 1, ch.levels.end());
    out.pi.assign(ch.pi.begin() + 1, ch.pi.end());
    return out;
}

ParabolicChainPoint forget_last(const ParabolicChainPoint& ch) {
    ValidationReport check = validate_chain(ch);
    if (!check.ok()) throw input_error("forget_last: invalid chain: " + check.violations.front());
    if (ch.levels.size() < 2) throw input_error("forget_last: chain has no step to forget");
    ParabolicChainPoint out;
    out.levels.assign(ch.levels.begin(), ch.levels.end() - 1);
    out.pi.assign(ch.pi.begin(), ch.pi.end() - 1);
    return out;
}

ParabolicPoint flag_P_minus_v(const ParabolicPoint& pt, std::size_t v) {
    ValidationReport check = validate_parabolic_point(pt);
    if (!check.ok()) throw input_error("P-: invalid point: " + check.violations.front());
    if (v >= pt.flags.size() || pt.flags[v].empty())
        throw input_error("P-: no flag step to forget at the given vertex");
    ParabolicPoint out = pt;
    out.flags[v].pop_back();
    return out;
}

ParabolicPoint flag_P_plus_v(const ParabolicPoint& pt, std::size_t v) {
    ValidationReport check = validate_parabolic_point(pt);
    if (!check.ok()) throw input_error("P+: invalid point: " + check.violations.front());
    if (v >= pt.flags.size() || pt.flags[v].empty())
        throw input_error("P+: no flag step to quotient at the given vertex");
    const Quiver& q = pt.rep.quiver;

    std::vector<RMatrix> K;
    for (std::size_t w = 0; w < q.num_vertices(); ++w) {
        if (w == v)
            K.push_back(pt.flags[v].front());
        else
            K.emplace_back(static_cast<std::size_t>(pt.rep.d[w]), 0);
    }
    QuotientResult quotient = quotient_by_K(pt.rep, K);

    ParabolicPoint out;
    out.rep = quotient.rep;
    out.flags = pt.flags;
    out.flags[v].clear();
    for (std::size_t s = 1; s < pt.flags[v].size(); ++s)
        out.flags[v].push_back(col_space_basis(quotient.projection[v] * pt.flags[v][s]));

    ValidationReport recheck = validate_parabolic_point(out);
    if (!recheck.ok()) throw internal_error("P+: quotient point failed validation");
    return out;
}

namespace {

// Flag block boundaries at a vertex: cumulative kernel step dimensions
// followed by the full dimension.
std::vector<std::size_t> flag_cuts(const ParabolicPoint& pt, std::size_t v) {
    std::vector<std::size_t> cuts;
    for (const RMatrix& step : pt.flags[v]) cuts.push_back(step.cols());
    cuts.push_back(static_cast<std::size_t>(pt.rep.d[v]));
    return cuts;
}

struct AdaptedPoint {
    std::vector<RMatrix> T, Tinv;
    std::vector<RMatrix> A, B, i, j; // adapted coordinates
    IntVec k;                        // top flag dimensions
};

AdaptedPoint adapt(const ParabolicPoint& pt) {
    const Quiver& q = pt.rep.quiver;
    auto ends = arrow_ends(q);
    AdaptedPoint ap;
    ap.k = pt.k_vector();
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        ap.T.push_back(adapted_basis(static_cast<std::size_t>(pt.rep.d[v]), pt.flags[v]));
        ap.Tinv.push_back(mat_inverse(ap.T.back()));
    }
    for (std::size_t e = 0; e < q.num_arrows(); ++e) {
        ap.A.push_back(ap.Tinv[ends[e].in] * pt.rep.A[e] * ap.T[ends[e].out]);
        ap.B.push_back(ap.Tinv[ends[e].out] * pt.rep.B[e] * ap.T[ends[e].in]);
    }
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        ap.i.push_back(ap.Tinv[v] * pt.rep.i[v]);
        ap.j.push_back(pt.rep.j[v] * ap.T[v]);
    }
    return ap;
}

} // namespace

TangentReport tangent_complex(const ParabolicPoint& pt) {
    ValidationReport check = validate_parabolic_point(pt);
    if (!check.ok())
        throw input_error("tangent_complex: invalid point: " + check.violations.front());
    const Quiver& q = pt.rep.quiver;
    auto ends = arrow_ends(q);
    std::size_t nv = q.num_vertices();
    std::size_t na = q.num_arrows();

    AdaptedPoint ap = adapt(pt);
    const IntVec& d = pt.rep.d;
    const IntVec& f = pt.rep.f;
    IntVec k = ap.k;
    IntVec dhat = vec_sub(d, k);

    // Point components in the constrained coordinates: X = A restricted to
    // complement columns, Y likewise for B, b = j on complement columns.
    std::vector<RMatrix> X(na), Y(na), bhat(nv);
    for (std::size_t e = 0; e < na; ++e) {
        X[e] = ap.A[e].cols_block(static_cast<std::size_t>(k[ends[e].out]), ap.A[e].cols());
        Y[e] = ap.B[e].cols_block(static_cast<std::size_t>(k[ends[e].in]), ap.B[e].cols());
    }
    for (std::size_t v = 0; v < nv; ++v)
        bhat[v] = ap.j[v].cols_block(static_cast<std::size_t>(k[v]), ap.j[v].cols());

    // Projections pi_v = [0 | I] in the adapted coordinates.
    std::vector<RMatrix> proj(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        RMatrix p(static_cast<std::size_t>(dhat[v]), static_cast<std::size_t>(d[v]));
        for (std::size_t t = 0; t < p.rows(); ++t) p.at(t, static_cast<std::size_t>(k[v]) + t) = 1;
        proj[v] = std::move(p);
    }

    // Coordinates of the constrained representation space: per arrow an
    // A-slot (d_in x dhat_out) and a B-slot (d_out x dhat_in), per vertex an
    // i-slot (d_v x f_v) and a j-slot (f_v x dhat_v). Row-major within each
    // slot.
    std::vector<std::size_t> slotA(na), slotB(na), sloti(nv), slotj(nv);
    std::size_t ambient = 0;
    for (std::size_t e = 0; e < na; ++e) {
        slotA[e] = ambient;
        ambient += static_cast<std::size_t>(d[ends[e].in]) * static_cast<std::size_t>(dhat[ends[e].out]);
        slotB[e] = ambient;
        ambient += static_cast<std::size_t>(d[ends[e].out]) * static_cast<std::size_t>(dhat[ends[e].in]);
    }
    for (std::size_t v = 0; v < nv; ++v) {
        sloti[v] = ambient;
        ambient += static_cast<std::size_t>(d[v]) * static_cast<std::size_t>(f[v]);
        slotj[v] = ambient;
        ambient += static_cast<std::size_t>(f[v]) * static_cast<std::size_t>(dhat[v]);
    }

    // Lie algebra of the flag-preserving parabolic: per vertex, columns in a
    // kernel block may hit rows up to that block's end; complement columns
    // are unconstrained.
    struct LieCoord {
        std::size_t v, row, colm;
    };
    std::vector<LieCoord> lie;
    for (std::size_t v = 0; v < nv; ++v) {
        std::vector<std::size_t> cuts = flag_cuts(pt, v);
        std::size_t dv = static_cast<std::size_t>(d[v]);
        std::size_t kv = static_cast<std::size_t>(k[v]);
        for (std::size_t c = 0; c < dv; ++c) {
            std::size_t limit = dv;
            if (c < kv) {
                for (std::size_t cut : cuts)
                    if (c < cut) {
                        limit = cut;
                        break;
                    }
            }
            for (std::size_t r = 0; r < limit; ++r) lie.push_back({v, r, c});
        }
    }

    RMatrix jmap(ambient, lie.size());
    auto write_slot = [&](RMatrix& target, std::size_t column, std::size_t offset,
                          const RMatrix& value) {
        for (std::size_t r = 0; r < value.rows(); ++r)
            for (std::size_t c = 0; c < value.cols(); ++c) {
                if (value.at(r, c) == 0) continue;
                std::size_t row = offset + r * value.cols() + c;
                target.at(row, column) = target.at(row, column) + value.at(r, c);
            }
    };
    for (std::size_t idx = 0; idx < lie.size(); ++idx) {
        const LieCoord& coord = lie[idx];
        std::size_t u = coord.v;
        std::size_t du = static_cast<std::size_t>(d[u]);
        std::size_t ku = static_cast<std::size_t>(k[u]);
        RMatrix xi(du, du);
        xi.at(coord.row, coord.colm) = 1;
        bool hat_nonzero = coord.row >= ku && coord.colm >= ku;
        RMatrix xihat(du - ku, du - ku);
        if (hat_nonzero) xihat.at(coord.row - ku, coord.colm - ku) = 1;

        for (std::size_t e = 0; e < na; ++e) {
            if (ends[e].in == u) write_slot(jmap, idx, slotA[e], xi * X[e]);
            if (ends[e].out == u && hat_nonzero) write_slot(jmap, idx, slotA[e], -(X[e] * xihat));
            if (ends[e].out == u) write_slot(jmap, idx, slotB[e], xi * Y[e]);
            if (ends[e].in == u && hat_nonzero) write_slot(jmap, idx, slotB[e], -(Y[e] * xihat));
        }
        write_slot(jmap, idx, sloti[u], xi * ap.i[u]);
        if (hat_nonzero) write_slot(jmap, idx, slotj[u], bhat[u] * xihat);
    }

    // d(mu) into sum_v Hom(Dhat_v, D_v), row-major per vertex.
    std::size_t codomain = 0;
    std::vector<std::size_t> out_offset(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        out_offset[v] = codomain;
        codomain += static_cast<std::size_t>(d[v]) * static_cast<std::size_t>(dhat[v]);
    }

    RMatrix dmu(codomain, ambient);
    auto emit = [&](std::size_t column, std::size_t v, const RMatrix& value) {
        std::size_t base = out_offset[v];
        for (std::size_t r = 0; r < value.rows(); ++r)
            for (std::size_t c = 0; c < value.cols(); ++c) {
                if (value.at(r, c) == 0) continue;
                std::size_t row = base + r * value.cols() + c;
                dmu.at(row, column) = dmu.at(row, column) + value.at(r, c);
            }
    };
    auto for_each_unit = [&](std::size_t offset, std::size_t rows, std::size_t cols,
                             auto&& contribute) {
        RMatrix unit(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) {
                unit.at(r, c) = 1;
                contribute(offset + r * cols + c, unit);
                unit.at(r, c) = 0;
            }
    };

    for (std::size_t e = 0; e < na; ++e) {
        std::size_t vin = ends[e].in, vout = ends[e].out;
        // A-direction: Ahat pi_out Y at in(e), -Y pi_in Ahat at out(e).
        for_each_unit(slotA[e], static_cast<std::size_t>(d[vin]),
                      static_cast<std::size_t>(dhat[vout]),
                      [&](std::size_t col, const RMatrix& unit) {
                          emit(col, vin, unit * (proj[vout] * Y[e]));
                          emit(col, vout, -(Y[e] * (proj[vin] * unit)));
                      });
        // B-direction: X pi_out Bhat at in(e), -Bhat pi_in X at out(e).
        for_each_unit(slotB[e], static_cast<std::size_t>(d[vout]),
                      static_cast<std::size_t>(dhat[vin]),
                      [&](std::size_t col, const RMatrix& unit) {
                          emit(col, vin, X[e] * (proj[vout] * unit));
                          emit(col, vout, -(unit * (proj[vin] * X[e])));
                      });
    }
    for (std::size_t v = 0; v < nv; ++v) {
        for_each_unit(sloti[v], static_cast<std::size_t>(d[v]), static_cast<std::size_t>(f[v]),
                      [&](std::size_t col, const RMatrix& unit) { emit(col, v, unit * bhat[v]); });
        for_each_unit(slotj[v], static_cast<std::size_t>(f[v]), static_cast<std::size_t>(dhat[v]),
                      [&](std::size_t col, const RMatrix& unit) { emit(col, v, ap.i[v] * unit); });
    }

    TangentReport report;
    report.lie_dim = static_cast<Int>(lie.size());
    report.codomain_dim = static_cast<Int>(codomain);
    report.ambient_dim = static_cast<Int>(ambient);
    report.rank_j = static_cast<Int>(rank(jmap));
    report.rank_dmu = static_cast<Int>(rank(dmu));
    report.complex_ok = (dmu * jmap).is_zero();
    report.h_dim = (report.ambient_dim - report.rank_dmu) - report.rank_j;

    // Closed formula from the flag block sizes; for unit steps this is the
    // complete-flag parabolic dimension, for a single step the pair one.
    Int formula = dim_nakajima(q, d, f) - dot(f, k) + bilinear(d, cartan(q), k);
    for (std::size_t v = 0; v < nv; ++v) {
        std::vector<Int> inc;
        Int prev = 0;
        for (const RMatrix& step : pt.flags[v]) {
            inc.push_back(static_cast<Int>(step.cols()) - prev);
            prev = static_cast<Int>(step.cols());
        }
        for (std::size_t b1 = 0; b1 < inc.size(); ++b1)
            for (std::size_t b2 = b1; b2 < inc.size(); ++b2) formula -= inc[b1] * inc[b2];
    }
    report.formula_dim = formula;
    return report;
}

std::pair<Int, Int> fiber_dims_at(const ParabolicPoint& pt, std::size_t v) {
    ValidationReport check = validate_parabolic_point(pt);
    if (!check.ok()) throw input_error("fiber_dims_at: invalid point: " + check.violations.front());
    if (v >= pt.flags.size() || pt.flags[v].empty())
        throw input_error("fiber_dims_at: no flag step at the given vertex");
    const Quiver& q = pt.rep.quiver;
    auto ends = arrow_ends(q);

    // Fiber of the map that forgets the top step: Gr(last increment,
    // Hom(C_v, D) / previous kernel).
    Int homv = hom_dim(pt.rep, v);
    std::size_t steps = pt.flags[v].size();
    Int top = static_cast<Int>(pt.flags[v].back().cols());
    Int prev = steps >= 2 ? static_cast<Int>(pt.flags[v][steps - 2].cols()) : 0;
    Int inc_last = top - prev;
    Int pminus_fiber = inc_last * (homv - prev - inc_last);

    // Fiber of the map that quotients by the first step: codimension
    // inc_first subspaces of ker(M2~)/im(M1^). The target chain runs from
    // the quotient by the first step down to the full quotient.
    AdaptedPoint ap = adapt(pt);
    IntVec k = ap.k;
    IntVec dhat = vec_sub(pt.rep.d, k);
    std::size_t n1 = pt.flags[v].front().cols();
    std::size_t dv = static_cast<std::size_t>(pt.rep.d[v]);
    std::size_t kv = static_cast<std::size_t>(k[v]);
    auto kw = [&](std::size_t w) { return static_cast<std::size_t>(k[w]); };

    // Slots of Xi^ in hom-stack order: out-arrows, in-arrows, framing.
    RMatrix m1hat(0, static_cast<std::size_t>(dhat[v]));
    RMatrix m2tilde(dv - n1, 0);
    for (std::size_t e = 0; e < q.num_arrows(); ++e) {
        if (ends[e].out != v) continue;
        std::size_t w = ends[e].in;
        m1hat = vstack(m1hat, ap.A[e].block(kw(w), ap.A[e].rows(), kv, ap.A[e].cols()));
        m2tilde = hstack(m2tilde, -ap.B[e].block(n1, ap.B[e].rows(), kw(w), ap.B[e].cols()));
    }
    for (std::size_t e = 0; e < q.num_arrows(); ++e) {
        if (ends[e].in != v) continue;
        std::size_t w = ends[e].out;
        m1hat = vstack(m1hat, ap.B[e].block(kw(w), ap.B[e].rows(), kv, ap.B[e].cols()));
        m2tilde = hstack(m2tilde, ap.A[e].block(n1, ap.A[e].rows(), kw(w), ap.A[e].cols()));
    }
    m1hat = vstack(m1hat, ap.j[v].cols_block(kv, ap.j[v].cols()));
    m2tilde = hstack(m2tilde, ap.i[v].rows_block(n1, ap.i[v].rows()));

    if (!(m2tilde * m1hat).is_zero())
        throw internal_error("fiber_dims_at: lift stack does not compose to zero");
    Int quotient_dim = static_cast<Int>(m1hat.rows()) - static_cast<Int>(rank(m2tilde)) -
                       static_cast<Int>(rank(m1hat));
    Int inc_first = static_cast<Int>(n1);
    Int pplus_fiber = inc_first * (quotient_dim - inc_first);
    return {pminus_fiber, pplus_fiber};
}

bool block_form_check(const ParabolicChainPoint& ch) {
    if (ch.levels.size() != 3) throw input_error("block form check requires a two-step chain");
    const Quiver& q = ch.levels.front().quiver;
    auto ends = arrow_ends(q);
    const FramedRep& top = ch.levels[0];

    std::vector<RMatrix> T(q.num_vertices()), Tinv(q.num_vertices());
    std::vector<std::size_t> cut1(q.num_vertices()), cut2(q.num_vertices());
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        std::size_t d0 = static_cast<std::size_t>(top.d[v]);
        std::size_t d2 = static_cast<std::size_t>(ch.levels[2].d[v]);
        RMatrix composite = ch.pi[1][v] * ch.pi[0][v];

        // Columns: a section of the composite, then lifts of ker(pi1), then
        // ker(pi0).
        auto section = right_inverse(composite);
        if (!section) throw internal_error("block form: composite projection is not surjective");
        RMatrix kmid = kernel_basis(ch.pi[1][v]); // in level-1 coordinates
        RMatrix kmid_lift(d0, kmid.cols());
        for (std::size_t c = 0; c < kmid.cols(); ++c) {
            auto x = solve(ch.pi[0][v], kmid.col(c));
            if (!x) throw internal_error("block form: cannot lift middle kernel");
            for (std::size_t r = 0; r < d0; ++r) kmid_lift.at(r, c) = (*x)[r];
        }
        RMatrix k0 = kernel_basis(ch.pi[0][v]);
        RMatrix basis = hstack(hstack(*section, kmid_lift), k0);
        if (basis.rows() != d0 || basis.cols() != d0 || rank(basis) != d0)
            throw internal_error("block form: adapted basis is not invertible");
        T[v] = basis;
        Tinv[v] = mat_inverse(basis);
        cut1[v] = d2;
        cut2[v] = d2 + kmid.cols();
    }

    auto blocks_ok = [&](const RMatrix& m, std::size_t rv, std::size_t cv) {
        // rows grouped at vertex rv, columns at vertex cv; zero outside the
        // first column group and the (bottom, middle) block.
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = cut1[cv]; c < m.cols(); ++c) {
                bool star = (r >= cut2[rv]) && (c < cut2[cv]);
                if (!star && m.at(r, c) != 0) return false;
            }
        return true;
    };

    for (std::size_t e = 0; e < q.num_arrows(); ++e) {
        RMatrix a = Tinv[ends[e].in] * top.A[e] * T[ends[e].out];
        if (!blocks_ok(a, ends[e].in, ends[e].out)) return false;
        RMatrix b = Tinv[ends[e].out] * top.B[e] * T[ends[e].in];
        if (!blocks_ok(b, ends[e].out, ends[e].in)) return false;
    }
    return true;
}

} // namespace quiverlab
