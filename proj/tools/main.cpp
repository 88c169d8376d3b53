// bcpq: build and analyze bicrossed products of matched pairs of finite
// groups from JSON descriptors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"

#include "bcp/fusion.hpp"
#include "bcp/io.hpp"
#include "bcp/length.hpp"

using namespace bcp;

namespace {

struct Options {
    std::string input;
    std::string out;
    std::string cache;
    unsigned long long seed = 0;
    double tol_alg = 1e-9;
    double tol_int = 1e-6;
    int trials = 100;
    int k = 0;
    std::vector<int> generators;
    double c = -1.0;
    double n = -1.0;

    Tolerances tol() const { return {tol_alg, tol_int, Tolerances{}.split}; }
};

void emit(const Options &opt, const Json &j) {
    if (opt.out.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(opt.out);
    if (!f)
        throw ParseError("cannot write " + opt.out);
    f << j.dump(2) << "\n";
}

IrrepTable group_irreps(const Options &opt, const FiniteGroup &g) {
    if (!opt.cache.empty())
        return cached_irreps(g, opt.seed, opt.tol(), opt.cache);
    return irreps(g, opt.seed, opt.tol());
}

/// Default matched lengths: word length on Gamma (all non-identity elements
/// unless --generators overrides), l_G = 0, l_gamma(x) = l_Gamma(gamma).
MatchedLengthPair default_lengths(const Options &opt, const MatchedPair &mp,
                                  const std::vector<IrrClass> &table,
                                  const IrrepTable &gt) {
    std::vector<int> gens = opt.generators;
    if (gens.empty())
        for (int x = 1; x < mp.gamma.order(); ++x)
            gens.push_back(x);
    MatchedLengthPair pair;
    pair.l_gamma = word_length(mp.gamma, gens);
    pair.l_g = zero_length(gt.size());
    pair.family.values.resize(table.size());
    for (size_t i = 0; i < table.size(); ++i)
        pair.family.values[i] = pair.l_gamma.at(table[i].cls.gamma);
    return pair;
}

Json report_json(const LengthReport &rep) {
    Json j;
    j["ok"] = rep.ok();
    j["violations"] = rep.violations;
    return j;
}

int cmd_validate(const Options &opt) {
    MatchedPair mp = load_pair(opt.input);
    ValidationReport rep = validate_matched_pair(mp);
    Json j;
    j["ok"] = rep.ok();
    Json v = Json::array();
    for (const RelationViolation &r : rep.violations)
        v.push_back({{"relation", r.relation},
                     {"gamma", r.gamma},
                     {"mu", r.mu},
                     {"g", r.g},
                     {"h", r.h}});
    j["violations"] = std::move(v);
    emit(opt, j);
    return rep.ok() ? 0 : 1;
}

int cmd_irreps(const Options &opt) {
    MatchedPair mp = load_pair(opt.input);
    Json j;
    j["gamma"] = irrep_table_to_json(group_irreps(opt, mp.gamma));
    j["g"] = irrep_table_to_json(group_irreps(opt, mp.g));
    emit(opt, j);
    return 0;
}

int cmd_irr_table(const Options &opt) {
    MatchedPair mp = load_pair(opt.input);
    auto table = irr_table(mp, opt.seed, opt.tol());
    Json classes = Json::array();
    long long total = 0;
    for (const IrrClass &c : table) {
        classes.push_back({{"gamma", mp.gamma.label(c.cls.gamma)},
                           {"x", c.x_index},
                           {"dim", c.dim}});
        total += static_cast<long long>(c.dim) * c.dim;
    }
    Json j;
    j["classes"] = std::move(classes);
    j["sum_dim_sq"] = total;
    j["expected"] = static_cast<long long>(mp.gamma.order()) * mp.g.order();
    emit(opt, j);
    return 0;
}

int cmd_fusion_table(const Options &opt) {
    MatchedPair mp = load_pair(opt.input);
    auto table = irr_table(mp, opt.seed, opt.tol());
    const int n = static_cast<int>(table.size());
    Json tensor = Json::array();
    bool counts_ok = true;
    for (int x = 0; x < n; ++x) {
        Json plane = Json::array();
        for (int y = 0; y < n; ++y) {
            Json row = Json::array();
            long long total = 0;
            for (int z = 0; z < n; ++z) {
                int m = fusion_dim(mp, table[z].cls, table[x].cls, table[y].cls,
                                   opt.tol());
                row.push_back(m);
                total += static_cast<long long>(table[z].dim) * m;
            }
            counts_ok &= total == static_cast<long long>(table[x].dim) * table[y].dim;
            plane.push_back(std::move(row));
        }
        tensor.push_back(std::move(plane));
    }
    Json j;
    j["n"] = tensor; // n[x][y][z] = N^z_{xy}
    j["dimension_count_ok"] = counts_ok;
    emit(opt, j);
    return counts_ok ? 0 : 1;
}

int cmd_induce(const Options &opt) {
    MatchedPair mp = load_pair(opt.input);
    auto table = irr_table(mp, opt.seed, opt.tol());
    IrrepTable gt = group_irreps(opt, mp.g);
    Json out = Json::array();
    bool frobenius_ok = true;
    for (const IrrClass &c : table) {
        UnitaryRep ind = induce(mp, c.cls);
        Json e;
        e["gamma"] = mp.gamma.label(c.cls.gamma);
        e["x"] = c.x_index;
        e["dim"] = ind.dim;
        Json chi = Json::array();
        Vector tr = character(ind);
        for (int g = 0; g < mp.g.order(); ++g)
            chi.push_back({tr(g).real(), tr(g).imag()});
        e["character"] = std::move(chi);
        Json frob = Json::array();
        for (const UnitaryRep &u : gt.irreps) {
            auto [lhs, rhs] = frobenius_check(mp, c.cls, u, opt.tol());
            frobenius_ok &= lhs == rhs;
            frob.push_back({lhs, rhs});
        }
        e["frobenius"] = std::move(frob);
        out.push_back(std::move(e));
    }
    Json j;
    j["induced"] = std::move(out);
    j["frobenius_ok"] = frobenius_ok;
    emit(opt, j);
    return frobenius_ok ? 0 : 1;
}

int cmd_length_check(const Options &opt) {
    MatchedPair mp = load_pair(opt.input);
    auto table = irr_table(mp, opt.seed, opt.tol());
    IrrepTable gt = group_irreps(opt, mp.g);
    MatchedLengthPair pair = default_lengths(opt, mp, table, gt);
    LengthReport matched = validate_matched_lengths(mp, table, gt, pair, opt.tol());
    BuiltLengths built = build_lengths_from_pair(mp, table, pair);
    LengthReport tilde = validate_length_classes(built.l_tilde, mp, table, opt.tol());
    Json j;
    j["matched"] = report_json(matched);
    j["l_tilde"] = report_json(tilde);
    bool ok = matched.ok() && tilde.ok();
    if (opt.c >= 0.0 && opt.n >= 0.0) {
        DualContext ctx = make_dual_context(mp, opt.seed, opt.tol());
        LengthReport poly = polynomial_bounds_check(ctx, gt, pair, opt.c, opt.n,
                                                    opt.trials, opt.seed, opt.tol());
        j["polynomial_bounds"] = report_json(poly);
        ok &= poly.ok();
    }
    emit(opt, j);
    return ok ? 0 : 1;
}

int cmd_growth(const Options &opt) {
    MatchedPair mp = load_pair(opt.input);
    auto table = irr_table(mp, opt.seed, opt.tol());
    IrrepTable gt = group_irreps(opt, mp.g);
    MatchedLengthPair pair = default_lengths(opt, mp, table, gt);
    BuiltLengths built = build_lengths_from_pair(mp, table, pair);
    std::vector<double> terms = growth_series(built.l_tilde, table);
    double total = 0.0;
    for (double t : terms)
        total += t;
    Json j;
    j["terms"] = terms;
    j["total"] = total;
    j["expected_total"] = mp.gamma.order() * mp.g.order();
    emit(opt, j);
    return total == static_cast<double>(mp.gamma.order()) * mp.g.order() ? 0 : 1;
}

int cmd_rd_test(const Options &opt) {
    MatchedPair mp = load_pair(opt.input);
    DualContext ctx = make_dual_context(mp, opt.seed, opt.tol());
    IrrepTable gt = group_irreps(opt, mp.g);
    MatchedLengthPair pair = default_lengths(opt, mp, ctx.classes, gt);
    BuiltLengths built = build_lengths_from_pair(mp, ctx.classes, pair);
    RdResult r = rd_ratio(ctx, built.l_tilde, opt.k, opt.trials, opt.seed, opt.tol());
    Json j;
    j["k"] = opt.k;
    j["trials"] = opt.trials;
    j["sampled_max_ratio"] = r.sampled_max;
    j["bound"] = r.bound;
    j["ok"] = r.sampled_max <= r.bound + opt.tol_alg;
    emit(opt, j);
    return j["ok"].get<bool>() ? 0 : 1;
}

int cmd_examples(const Options &opt) {
    const std::string dir = opt.out.empty() ? "." : opt.out;
    std::filesystem::create_directories(dir);
    Json written = Json::array();
    for (const NamedPair &np : corpus()) {
        const std::string path = dir + "/" + np.name + ".json";
        std::ofstream f(path);
        if (!f)
            throw ParseError("cannot write " + path);
        f << pair_to_json(np.pair).dump(2) << "\n";
        written.push_back(path);
    }
    std::cout << Json{{"written", written}}.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"bicrossed products of matched pairs of finite groups"};
    app.require_subcommand(1);
    Options opt;

    app.add_option("--seed", opt.seed, "RNG seed");
    app.add_option("--tol-alg", opt.tol_alg, "algebraic residual tolerance");
    app.add_option("--tol-int", opt.tol_int, "integer rounding tolerance");
    app.add_option("--trials", opt.trials, "Monte Carlo trial count");
    app.add_option("--k", opt.k, "length window index");
    app.add_option("--generators", opt.generators,
                   "word-length generating set on Gamma");
    app.add_option("--c", opt.c, "polynomial bound constant C");
    app.add_option("--n", opt.n, "polynomial bound exponent N");
    app.add_option("--out", opt.out, "output path (examples: directory)");
    app.add_option("--cache", opt.cache, "irrep cache directory");

    std::map<std::string, int (*)(const Options &)> commands = {
        {"validate", cmd_validate},   {"irreps", cmd_irreps},
        {"irr-table", cmd_irr_table}, {"fusion-table", cmd_fusion_table},
        {"induce", cmd_induce},       {"length-check", cmd_length_check},
        {"growth", cmd_growth},       {"rd-test", cmd_rd_test},
        {"examples", cmd_examples}};

    for (auto &[name, fn] : commands) {
        CLI::App *sub = app.add_subcommand(name);
        sub->fallthrough(); // accept the shared flags after the subcommand
        if (name != "examples")
            sub->add_option("input", opt.input, "pair descriptor JSON")->required();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return commands.at(app.get_subcommands().front()->get_name())(opt);
    } catch (const ParseError &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "contract violation: " << e.what() << "\n";
        return 1;
    }
}
