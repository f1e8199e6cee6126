#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "quiverlab/json_io.hpp"
#include "quiverlab/selftest.hpp"

using namespace quiverlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;

void print_json(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw input_error("cannot write to " + out_path);
    out << j.dump(2) << "\n";
}

ChainDims chain_from_levels(const Quiver& q, const std::string& levels_spec, const IntVec& f) {
    ChainDims chain;
    chain.f = f;
    std::stringstream stream(levels_spec);
    std::string level;
    while (std::getline(stream, level, ';'))
        if (!level.empty()) chain.levels.push_back(vec_from_spec(q, level));
    if (chain.levels.empty()) throw input_error("--levels needs at least one level");
    return chain;
}

struct DimArgs {
    std::string quiver, d, f, k, r, levels, out;
};

void add_dim_commands(CLI::App& app, DimArgs& args, int& exit_code) {
    CLI::App* dim = app.add_subcommand("dim", "closed-form dimension formulas");
    dim->require_subcommand(1);

    auto add_common = [&](CLI::App* cmd, bool need_d, bool need_k, bool need_r, bool need_levels) {
        cmd->add_option("--quiver", args.quiver, "quiver file, inline JSON, or builtin")->required();
        if (need_d) cmd->add_option("--d", args.d, "dimension vector")->required();
        cmd->add_option("--f", args.f, "framing vector");
        if (need_k) cmd->add_option("--k", args.k, "hom bound vector")->required();
        if (need_r) cmd->add_option("--r", args.r, "stratum vector")->required();
        if (need_levels)
            cmd->add_option("--levels", args.levels, "chain levels, ';'-separated")->required();
        cmd->add_option("-o,--output", args.out, "write JSON here instead of stdout");
    };

    auto run = [&exit_code, &args](auto&& compute) {
        return [&exit_code, &args, compute]() {
            Quiver q = quiver_from_spec(args.quiver);
            IntVec f = args.f.empty() ? IntVec(q.num_vertices()) : vec_from_spec(q, args.f);
            json result = compute(q, f);
            print_json(result, args.out);
            exit_code = kExitOk;
        };
    };

    add_common(dim->add_subcommand("nakajima", "dim M(d; f)"), true, false, false, false);
    dim->get_subcommand("nakajima")->callback(run([&args](const Quiver& q, const IntVec& f) {
        return json{{"dim", dim_nakajima(q, vec_from_spec(q, args.d), f)}};
    }));

    add_common(dim->add_subcommand("parabolic", "dim P(d, d-k; f)"), true, true, false, false);
    dim->get_subcommand("parabolic")->callback(run([&args](const Quiver& q, const IntVec& f) {
        return json{{"dim", dim_parabolic_pair(q, vec_from_spec(q, args.d),
                                               vec_from_spec(q, args.k), f)}};
    }));

    add_common(dim->add_subcommand("parabolic-full", "dim of the complete-flag variety"), true,
               true, false, false);
    dim->get_subcommand("parabolic-full")->callback(run([&args](const Quiver& q, const IntVec& f) {
        return json{{"dim", dim_parabolic_full(q, vec_from_spec(q, args.d),
                                               vec_from_spec(q, args.k), f)}};
    }));

    add_common(dim->add_subcommand("chain", "dim P(d0, ..., dl; f)"), false, false, false, true);
    dim->get_subcommand("chain")->callback(run([&args](const Quiver& q, const IntVec& f) {
        ChainDims chain = chain_from_levels(q, args.levels, f);
        return json{{"dim", dim_parabolic_chain(q, chain)},
                    {"flag_fiber_dim", flag_fiber_dim(chain)}};
    }));

    add_common(dim->add_subcommand("bn", "dim BN^k(d; f), k clamped to max(k, k0)"), true, true,
               false, false);
    dim->get_subcommand("bn")->callback(run([&args](const Quiver& q, const IntVec& f) {
        BnDim result = dim_bn(q, vec_from_spec(q, args.d), f, vec_from_spec(q, args.k));
        return json{{"dim", result.dim},
                    {"k", vec_to_json(q, result.k_raw)},
                    {"k_effective", vec_to_json(q, result.k_effective)}};
    }));

    add_common(dim->add_subcommand("stratum", "dim BN^{=r}(d; f)"), true, false, true, false);
    dim->get_subcommand("stratum")->callback(run([&args](const Quiver& q, const IntVec& f) {
        return json{{"dim", dim_bn_stratum(q, vec_from_spec(q, args.d), f,
                                           vec_from_spec(q, args.r))}};
    }));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quiver variety dimensions, nonemptiness, and exact verification"};
    app.require_subcommand(1);
    int exit_code = kExitOk;

    DimArgs dim_args;
    add_dim_commands(app, dim_args, exit_code);

    // nonempty nakajima|parabolic|bn
    struct {
        std::string quiver, d, f, k, out;
        bool trace = false;
    } ne;
    CLI::App* nonempty = app.add_subcommand("nonempty", "nonemptiness via the root-test recursion");
    nonempty->require_subcommand(1);
    for (const char* which : {"nakajima", "parabolic", "bn"}) {
        CLI::App* cmd = nonempty->add_subcommand(which);
        cmd->add_option("--quiver", ne.quiver)->required();
        cmd->add_option("--d", ne.d)->required();
        cmd->add_option("--f", ne.f);
        if (std::string(which) != "nakajima") cmd->add_option("--k", ne.k)->required();
        cmd->add_flag("--trace", ne.trace, "include the reduction and reflection traces");
        cmd->add_option("-o,--output", ne.out);
        cmd->callback([&ne, which, &exit_code]() {
            Quiver q = quiver_from_spec(ne.quiver);
            IntVec d = vec_from_spec(q, ne.d);
            IntVec f = ne.f.empty() ? IntVec(q.num_vertices()) : vec_from_spec(q, ne.f);
            NonemptyVerdict verdict;
            if (std::string(which) == "nakajima")
                verdict = nakajima_nonempty(q, d, f);
            else if (std::string(which) == "parabolic")
                verdict = parabolic_nonempty(q, d, vec_from_spec(q, ne.k), f);
            else
                verdict = bn_nonempty(q, d, f, vec_from_spec(q, ne.k));
            print_json(nonempty_verdict_to_json(q, verdict, ne.trace), ne.out);
            exit_code = kExitOk;
        });
    }

    struct {
        std::string quiver, f, alpha, out;
        bool trace = false;
    } rc;
    CLI::App* root_check = app.add_subcommand("root-check", "positive-root test on the framed graph");
    root_check->add_option("--quiver", rc.quiver)->required();
    root_check->add_option("--f", rc.f, "framing vector (edge multiplicities to the extra vertex)");
    root_check->add_option("--alpha", rc.alpha, "candidate root, framing coordinate last")->required();
    root_check->add_flag("--trace", rc.trace);
    root_check->add_option("-o,--output", rc.out);
    root_check->callback([&rc, &exit_code]() {
        Quiver q = quiver_from_spec(rc.quiver);
        IntVec f = rc.f.empty() ? IntVec(q.num_vertices()) : vec_from_spec(q, rc.f);
        RootGraph g = framed_graph(q, f);
        std::stringstream stream(rc.alpha);
        std::string item;
        IntVec alpha;
        while (std::getline(stream, item, ',')) {
            try {
                alpha.entries.push_back(std::stoll(item));
            } catch (const std::exception&) {
                throw input_error("cannot parse alpha entry: " + item);
            }
        }
        RootCheckResult result = is_positive_root(g, alpha);
        print_json(root_check_to_json(g, result, rc.trace), rc.out);
        exit_code = kExitOk;
    });

    struct {
        std::string quiver, d, f, k, out;
        Int cap = 1000000;
        bool tsv = false;
    } st;
    CLI::App* strata = app.add_subcommand("strata", "stratum table for BN^k(d; f)");
    strata->add_option("--quiver", st.quiver)->required();
    strata->add_option("--d", st.d)->required();
    strata->add_option("--f", st.f);
    strata->add_option("--k", st.k);
    strata->add_option("--cap", st.cap, "maximum number of stratum labels");
    strata->add_flag("--tsv", st.tsv, "tab-separated rows instead of JSON");
    strata->add_option("-o,--output", st.out);
    strata->callback([&st, &exit_code]() {
        Quiver q = quiver_from_spec(st.quiver);
        IntVec d = vec_from_spec(q, st.d);
        IntVec f = st.f.empty() ? IntVec(q.num_vertices()) : vec_from_spec(q, st.f);
        IntVec k = st.k.empty() ? IntVec(q.num_vertices()) : vec_from_spec(q, st.k);
        std::vector<StratumReport> table = strata_table(q, d, f, k, st.cap);
        if (st.tsv) {
            std::ostringstream out;
            for (const StratumReport& row : table) {
                for (std::size_t v = 0; v < row.r.size(); ++v)
                    out << (v ? "," : "") << row.r[v];
                out << "\t" << row.stratum_dim << "\t" << row.pminus_fiber_dim << "\t"
                    << row.pminus_preimage_dim << "\t" << (row.nonempty ? "true" : "false") << "\n";
            }
            if (st.out.empty())
                std::cout << out.str();
            else {
                std::ofstream file(st.out);
                if (!file) throw input_error("cannot write to " + st.out);
                file << out.str();
            }
        } else {
            json rows = json::array();
            for (const StratumReport& row : table) rows.push_back(stratum_report_to_json(q, row));
            print_json(json{{"d", vec_to_json(q, d)},
                            {"f", vec_to_json(q, f)},
                            {"k", vec_to_json(q, k)},
                            {"rows", std::move(rows)}},
                       st.out);
        }
        exit_code = kExitOk;
    });

    struct {
        std::string quiver, levels, f, out;
    } ex;
    CLI::App* excess_cmd = app.add_subcommand("excess", "excess pair (R1, R2) of a composition");
    excess_cmd->add_option("--quiver", ex.quiver)->required();
    excess_cmd->add_option("--levels", ex.levels, "d0;d1;d2")->required();
    excess_cmd->add_option("-o,--output", ex.out);
    excess_cmd->callback([&ex, &exit_code]() {
        Quiver q = quiver_from_spec(ex.quiver);
        ChainDims chain = chain_from_levels(q, ex.levels, IntVec(q.num_vertices()));
        if (chain.levels.size() != 3) throw input_error("excess needs exactly three levels");
        auto [r1, r2] = excess(q, chain.levels[0], chain.levels[1], chain.levels[2]);
        print_json(json{{"R1", r1}, {"R2", r2}}, ex.out);
        exit_code = kExitOk;
    });

    struct {
        std::string file, out;
        bool tangent = false;
    } vf;
    CLI::App* verify = app.add_subcommand("verify", "check a representation, point, or chain file");
    verify->add_option("file", vf.file, "JSON file to verify")->required();
    verify->add_flag("--tangent", vf.tangent, "also certify the tangent complex");
    verify->add_option("-o,--output", vf.out);
    verify->callback([&vf, &exit_code]() {
        json input = load_json_file(vf.file);
        json output;
        bool passed = false;
        if (input.contains("levels")) {
            ParabolicChainPoint ch = chain_from_json(input);
            ValidationReport report = validate_chain(ch);
            output["type"] = "chain";
            output["validation"] = validation_to_json(report);
            passed = report.ok();
            if (passed) {
                const Quiver& q = ch.levels.front().quiver;
                output["stratum"] = vec_to_json(q, bn_stratum_of(ch.levels.front()));
                if (ch.levels.size() == 3) output["block_form"] = block_form_check(ch);
            }
        } else {
            ParabolicPoint pt = point_from_json(input);
            const Quiver& q = pt.rep.quiver;
            ValidationReport report = validate_parabolic_point(pt);
            output["type"] = input.contains("flags") ? "point" : "rep";
            output["validation"] = validation_to_json(report);
            passed = report.ok();
            if (passed) {
                output["stratum"] = vec_to_json(q, bn_stratum_of(pt.rep));
                output["k"] = vec_to_json(q, pt.k_vector());
                if (vf.tangent) {
                    TangentReport tangent = tangent_complex(pt);
                    output["tangent"] = tangent_report_to_json(tangent);
                    passed = passed && tangent.certified();
                }
            }
        }
        print_json(output, vf.out);
        exit_code = passed ? kExitOk : kExitFailure;
    });

    struct {
        std::string partition, points, d, f, k, family, out;
        std::uint64_t seed = 0;
    } eg;
    CLI::App* example = app.add_subcommand("example", "emit gallery representations and points");
    example->require_subcommand(1);

    CLI::App* eg_hilb = example->add_subcommand("hilb", "monomial fixed point of the Jordan quiver");
    eg_hilb->add_option("--partition", eg.partition, "comma-separated parts; empty for d = 0");
    eg_hilb->add_option("--k", eg.k, "flag size (at most the corner count)");
    eg_hilb->add_option("-o,--output", eg.out);
    eg_hilb->callback([&eg, &exit_code]() {
        Partition p = partition_from_string(eg.partition);
        Int k = eg.k.empty() ? 0 : std::stoll(eg.k);
        ParabolicPoint pt = hilb_fixed_point_with_flag(p, k);
        print_json(k > 0 ? point_to_json(pt) : rep_to_json(pt.rep), eg.out);
        exit_code = kExitOk;
    });

    CLI::App* eg_distinct = example->add_subcommand("hilb-distinct", "distinct planar points");
    eg_distinct->add_option("--points", eg.points, "semicolon-separated x,y rational pairs");
    eg_distinct->add_option("-o,--output", eg.out);
    eg_distinct->callback([&eg, &exit_code]() {
        std::vector<std::pair<Rational, Rational>> pts;
        std::stringstream stream(eg.points);
        std::string pair;
        while (std::getline(stream, pair, ';')) {
            if (pair.empty()) continue;
            std::size_t comma = pair.find(',');
            if (comma == std::string::npos) throw input_error("expected x,y in: " + pair);
            pts.emplace_back(rational_from_string(pair.substr(0, comma)),
                             rational_from_string(pair.substr(comma + 1)));
        }
        print_json(rep_to_json(hilb_distinct_points(pts)), eg.out);
        exit_code = kExitOk;
    });

    CLI::App* eg_a1 = example->add_subcommand("a1", "single-vertex point with a kernel flag");
    eg_a1->add_option("--d", eg.d)->required();
    eg_a1->add_option("--f", eg.f)->required();
    eg_a1->add_option("--k", eg.k)->required();
    eg_a1->add_option("-o,--output", eg.out);
    eg_a1->callback([&eg, &exit_code]() {
        ParabolicPoint pt = a1_point(std::stoll(eg.d), std::stoll(eg.f), std::stoll(eg.k));
        print_json(pt.k_vector().is_zero() ? rep_to_json(pt.rep) : point_to_json(pt), eg.out);
        exit_code = kExitOk;
    });

    CLI::App* eg_an = example->add_subcommand("an", "equioriented type A coordinate point");
    eg_an->add_option("--d", eg.d, "comma-separated dimension vector")->required();
    eg_an->add_option("--f", eg.f, "framing at the first vertex")->required();
    eg_an->add_option("-o,--output", eg.out);
    eg_an->callback([&eg, &exit_code]() {
        std::vector<Int> entries;
        std::stringstream stream(eg.d);
        std::string item;
        while (std::getline(stream, item, ',')) entries.push_back(std::stoll(item));
        print_json(rep_to_json(an_flag_point(IntVec(entries), std::stoll(eg.f))), eg.out);
        exit_code = kExitOk;
    });

    CLI::App* eg_random = example->add_subcommand("random", "seeded random gallery point");
    eg_random->add_option("--family", eg.family, "hilb_monomial|hilb_distinct|a1|an")->required();
    eg_random->add_option("--seed", eg.seed, "PRNG seed (mt19937_64)")->capture_default_str();
    eg_random->add_option("-o,--output", eg.out);
    eg_random->callback([&eg, &exit_code]() {
        ParabolicPoint pt = random_gallery_point(gallery_family_from_string(eg.family), eg.seed);
        json j = pt.k_vector().is_zero() ? rep_to_json(pt.rep) : point_to_json(pt);
        json wrapped;
        wrapped["seed"] = eg.seed;
        wrapped["family"] = eg.family;
        wrapped["point"] = std::move(j);
        print_json(wrapped, eg.out);
        exit_code = kExitOk;
    });

    struct {
        std::uint64_t seed = 20240901;
        std::string out;
    } self;
    CLI::App* selftest = app.add_subcommand("selftest", "run the identity and property suites");
    selftest->add_option("--seed", self.seed)->capture_default_str();
    selftest->add_option("-o,--output", self.out);
    selftest->callback([&self, &exit_code]() {
        std::vector<SuiteResult> results = run_all_suites(self.seed);
        json suites = json::array();
        bool ok = true;
        for (const SuiteResult& suite : results) {
            suites.push_back({{"suite", suite.name},
                              {"cases", suite.cases},
                              {"failures", suite.failures}});
            ok = ok && suite.ok();
            for (const std::string& detail : suite.details)
                std::cerr << suite.name << ": " << detail << "\n";
        }
        print_json(json{{"seed", self.seed}, {"suites", std::move(suites)}, {"ok", ok}}, self.out);
        exit_code = ok ? kExitOk : kExitFailure;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const overflow_error& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return exit_code;
}
