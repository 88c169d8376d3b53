#include "bcp/io.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace bcp {

namespace {

Json parse_checked(std::istream &in, const std::string &where) {
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw ParseError(where + ": " + e.what());
    }
}

std::vector<std::vector<int>> int_table(const Json &j, const char *key) {
    if (!j.contains(key) || !j[key].is_array())
        throw ParseError(std::string("missing table \"") + key + "\"");
    std::vector<std::vector<int>> t;
    for (const Json &row : j[key])
        t.push_back(row.get<std::vector<int>>());
    return t;
}

int element_of_order(const FiniteGroup &g, int k) {
    for (int x = 1; x < g.order(); ++x)
        if (g.element_order(x) == k)
            return x;
    throw std::runtime_error("no element of the requested order");
}

} // namespace

Json group_to_json(const FiniteGroup &g) {
    Json j;
    j["order"] = g.order();
    std::vector<std::vector<int>> mult(g.order(), std::vector<int>(g.order()));
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            mult[a][b] = g.mul(a, b);
    j["mult"] = mult;
    j["labels"] = g.labels();
    return j;
}

FiniteGroup group_from_json(const Json &j) {
    if (j.contains("permutations")) {
        const auto gens = int_table(j, "permutations");
        if (gens.empty())
            throw ParseError("empty permutation generator list");
        return permutation_group(static_cast<int>(gens[0].size()), gens);
    }
    std::vector<std::string> labels;
    if (j.contains("labels"))
        labels = j["labels"].get<std::vector<std::string>>();
    try {
        return FiniteGroup::from_table(int_table(j, "mult"), std::move(labels));
    } catch (const NotAGroup &e) {
        throw ParseError(std::string("not a group: ") + e.what());
    }
}

Json pair_to_json(const MatchedPair &mp) {
    Json j;
    j["gamma"] = group_to_json(mp.gamma);
    j["g"] = group_to_json(mp.g);
    j["alpha"] = mp.alpha;
    j["beta"] = mp.beta;
    return j;
}

MatchedPair pair_from_json(const Json &j) {
    if (j.contains("factorization")) {
        const Json &f = j["factorization"];
        if (!f.contains("ambient"))
            throw ParseError("factorization form needs an \"ambient\" group");
        FiniteGroup l = group_from_json(f["ambient"]);
        Subgroup gam = subgroup_closure(l, f["gamma_gens"].get<std::vector<int>>());
        Subgroup g = subgroup_closure(l, f["g_gens"].get<std::vector<int>>());
        return from_exact_factorization(l, gam, g);
    }
    MatchedPair mp;
    mp.gamma = group_from_json(j.at("gamma"));
    mp.g = group_from_json(j.at("g"));
    mp.alpha = int_table(j, "alpha");
    mp.beta = int_table(j, "beta");
    if (static_cast<int>(mp.alpha.size()) != mp.gamma.order() ||
        static_cast<int>(mp.beta.size()) != mp.g.order())
        throw ParseError("action table shapes do not match the group orders");
    return mp;
}

MatchedPair load_pair(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    return pair_from_json(parse_checked(in, path));
}

Json algebra_to_json(const AlgebraElement &a) {
    Json j = Json::object();
    const MatchedPair &mp = a.pair();
    for (int c = 0; c < mp.gamma.order(); ++c) {
        Json row = Json::object();
        for (int g = 0; g < mp.g.order(); ++g) {
            Complex z = a.coeff(c, g);
            if (z != Complex(0.0))
                row[std::to_string(g)] = {z.real(), z.imag()};
        }
        if (!row.empty())
            j[std::to_string(c)] = std::move(row);
    }
    return j;
}

AlgebraElement algebra_from_json(const MatchedPair &mp, const Json &j) {
    AlgebraElement a(mp);
    for (const auto &[ck, row] : j.items()) {
        const int c = std::stoi(ck);
        for (const auto &[gk, v] : row.items())
            a.coeff(c, std::stoi(gk)) = Complex(v.at(0), v.at(1));
    }
    return a;
}

Json matrix_to_json(const Matrix &m) {
    Json j = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            row.push_back({m(r, c).real(), m(r, c).imag()});
        j.push_back(std::move(row));
    }
    return j;
}

Matrix matrix_from_json(const Json &j) {
    const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
    const Eigen::Index cols = rows ? static_cast<Eigen::Index>(j.at(0).size()) : 0;
    Matrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c)
            m(r, c) = Complex(j.at(r).at(c).at(0), j.at(r).at(c).at(1));
    return m;
}

Json irrep_table_to_json(const IrrepTable &t) {
    Json j = Json::array();
    for (const UnitaryRep &u : t.irreps) {
        Json e;
        e["dim"] = u.dim;
        Json mats = Json::array();
        for (const Matrix &m : u.matrices)
            mats.push_back(matrix_to_json(m));
        e["matrices"] = std::move(mats);
        j.push_back(std::move(e));
    }
    return j;
}

std::string content_hash(const Json &j) {
    const std::string s = j.dump();
    unsigned long long h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

IrrepTable cached_irreps(const FiniteGroup &g, unsigned long long seed,
                         const Tolerances &tol, const std::string &cache_dir) {
    Json key;
    key["group"] = group_to_json(g);
    key["seed"] = seed;
    key["tol"] = {tol.alg, tol.integer, tol.split};
    const std::filesystem::path file =
        std::filesystem::path(cache_dir) / ("irreps-" + content_hash(key) + ".json");

    if (std::ifstream in(file); in) {
        Json j = parse_checked(in, file.string());
        IrrepTable t;
        t.group = &g;
        for (const Json &e : j) {
            UnitaryRep u;
            u.group = &g;
            u.dim = e.at("dim");
            for (const Json &m : e.at("matrices"))
                u.matrices.push_back(matrix_from_json(m));
            t.irreps.push_back(std::move(u));
        }
        return t;
    }

    IrrepTable t = irreps(g, seed, tol);
    std::filesystem::create_directories(cache_dir);
    std::ofstream out(file);
    out << irrep_table_to_json(t).dump(2) << "\n";
    return t;
}

std::vector<NamedPair> corpus() {
    std::vector<NamedPair> out;

    auto trivial = [](int n, int m) {
        MatchedPair mp;
        mp.gamma = cyclic_group(n);
        mp.g = cyclic_group(m);
        mp.alpha.assign(n, std::vector<int>(m));
        mp.beta.assign(m, std::vector<int>(n));
        for (int c = 0; c < n; ++c)
            for (int x = 0; x < m; ++x)
                mp.alpha[c][x] = x;
        for (int x = 0; x < m; ++x)
            for (int c = 0; c < n; ++c)
                mp.beta[x][c] = c;
        return mp;
    };
    out.push_back({"trivial-z2z2", trivial(2, 2)});
    out.push_back({"trivial-z2z3", trivial(2, 3)});

    FiniteGroup s3 = symmetric_group(3);
    Subgroup flip = subgroup_closure(s3, {element_of_order(s3, 2)});
    Subgroup rot = subgroup_closure(s3, {element_of_order(s3, 3)});
    out.push_back({"s3-z2z3", from_exact_factorization(s3, flip, rot)});
    out.push_back({"s3-z3z2", from_exact_factorization(s3, rot, flip)});

    FiniteGroup s4 = symmetric_group(4);
    auto find_label = [&](const std::string &l) {
        for (int x = 0; x < s4.order(); ++x)
            if (s4.label(x) == l)
                return x;
        throw std::runtime_error("label not found");
    };
    Subgroup d4 = subgroup_closure(
        s4, {find_label("(1 2 3 0)"), find_label("(2 1 0 3)")});
    Subgroup z3 = subgroup_closure(s4, {find_label("(1 2 0 3)")});
    out.push_back({"s4-d4z3", from_exact_factorization(s4, d4, z3)});
    return out;
}

} // namespace bcp
