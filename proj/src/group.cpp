#include "bcp/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace bcp {

NotAGroup::NotAGroup(std::string why, int a_, int b_, int c_)
    : std::runtime_error("not a group: " + why), reason(std::move(why)), a(a_), b(b_), c(c_) {}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>> &mult,
                                    std::vector<std::string> labels) {
    const int n = static_cast<int>(mult.size());
    if (n < 1)
        throw NotAGroup("empty table");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(mult[i].size()) != n)
            throw NotAGroup("table not square", i);
        for (int j = 0; j < n; ++j)
            if (mult[i][j] < 0 || mult[i][j] >= n)
                throw NotAGroup("entry out of range", i, j);
    }

    // Rows and columns must be permutations (Latin square).
    for (int i = 0; i < n; ++i) {
        std::vector<char> row(n, 0), col(n, 0);
        for (int j = 0; j < n; ++j) {
            row[mult[i][j]]++;
            col[mult[j][i]]++;
        }
        for (int j = 0; j < n; ++j)
            if (row[j] != 1 || col[j] != 1)
                throw NotAGroup("row or column is not a permutation", i, j);
    }

    int e = -1;
    for (int i = 0; i < n && e < 0; ++i) {
        bool ok = true;
        for (int j = 0; j < n; ++j)
            if (mult[i][j] != j || mult[j][i] != j) {
                ok = false;
                break;
            }
        if (ok)
            e = i;
    }
    if (e < 0)
        throw NotAGroup("no identity element");

    // Relabel so the identity gets index 0 (swap 0 <-> e).
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[0], perm[e]);
    std::vector<int> inv_perm = perm; // a transposition is its own inverse

    FiniteGroup g;
    g.order_ = n;
    g.mult_.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g.mult_[i * n + j] = inv_perm[mult[perm[i]][perm[j]]];

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (g.mul(g.mul(i, j), k) != g.mul(i, g.mul(j, k)))
                    throw NotAGroup("associativity fails", perm[i], perm[j], perm[k]);

    g.inv_.assign(n, -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.mul(i, j) == 0)
                g.inv_[i] = j;
    for (int i = 0; i < n; ++i)
        if (g.inv_[i] < 0 || g.mul(i, g.inv_[i]) != 0 || g.mul(g.inv_[i], i) != 0)
            throw NotAGroup("inverse fails", perm[i]);

    if (labels.empty()) {
        for (int i = 0; i < n; ++i)
            labels.push_back(std::to_string(i));
        g.labels_ = std::move(labels);
    } else {
        if (static_cast<int>(labels.size()) != n)
            throw NotAGroup("label count mismatch");
        g.labels_.resize(n);
        for (int i = 0; i < n; ++i)
            g.labels_[i] = labels[perm[i]];
    }
    return g;
}

int FiniteGroup::element_order(int a) const {
    int x = a, k = 1;
    while (x != 0) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

Subgroup subgroup_closure(const FiniteGroup &g, const std::vector<int> &generators) {
    const int n = g.order();
    for (int x : generators)
        if (x < 0 || x >= n)
            throw std::out_of_range("generator index out of range");

    std::vector<char> in(n, 0);
    in[0] = 1;
    std::vector<int> frontier{0};
    for (int x : generators)
        if (!in[x]) {
            in[x] = 1;
            frontier.push_back(x);
        }
    bool grew = true;
    while (grew) {
        grew = false;
        for (int i = 0; i < n; ++i) {
            if (!in[i])
                continue;
            for (int j = 0; j < n; ++j) {
                if (!in[j])
                    continue;
                int p = g.mul(i, j);
                if (!in[p]) {
                    in[p] = 1;
                    grew = true;
                }
            }
        }
    }

    Subgroup h;
    h.parent = &g;
    for (int i = 0; i < n; ++i)
        if (in[i])
            h.elements.push_back(i);
    h.local_of.assign(n, -1);
    for (int i = 0; i < static_cast<int>(h.elements.size()); ++i)
        h.local_of[h.elements[i]] = i;

    const int m = static_cast<int>(h.elements.size());
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    std::vector<std::string> labels(m);
    for (int i = 0; i < m; ++i) {
        labels[i] = g.label(h.elements[i]);
        for (int j = 0; j < m; ++j)
            table[i][j] = h.local_of[g.mul(h.elements[i], h.elements[j])];
    }
    h.group = FiniteGroup::from_table(table, labels);
    return h;
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup &g) {
    const int n = g.order();
    std::vector<int> cls(n, -1);
    std::vector<std::vector<int>> out;
    for (int x = 0; x < n; ++x) {
        if (cls[x] >= 0)
            continue;
        std::vector<int> c;
        for (int t = 0; t < n; ++t) {
            int y = g.mul(g.mul(t, x), g.inv(t));
            if (cls[y] < 0) {
                cls[y] = static_cast<int>(out.size());
                c.push_back(y);
            }
        }
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
    }
    return out;
}

FiniteGroup cyclic_group(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            t[i][j] = (i + j) % n;
    return FiniteGroup::from_table(t);
}

namespace {
std::string perm_label(const std::vector<int> &p) {
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i)
            s += ' ';
        s += std::to_string(p[i]);
    }
    return s + ")";
}
} // namespace

FiniteGroup permutation_group(int n, const std::vector<std::vector<int>> &generators) {
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> elems{id};
    index[id] = 0;
    for (const auto &p : generators) {
        if (static_cast<int>(p.size()) != n)
            throw std::invalid_argument("permutation size mismatch");
        if (!index.count(p)) {
            index[p] = static_cast<int>(elems.size());
            elems.push_back(p);
        }
    }
    // Closure under composition (p then q acting left: (p*q)(i) = p[q[i]]).
    for (size_t i = 0; i < elems.size(); ++i) {
        for (size_t j = 0; j < elems.size(); ++j) {
            std::vector<int> pq(n);
            for (int k = 0; k < n; ++k)
                pq[k] = elems[i][elems[j][k]];
            if (!index.count(pq)) {
                index[pq] = static_cast<int>(elems.size());
                elems.push_back(pq);
            }
        }
    }
    const int m = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    std::vector<std::string> labels(m);
    for (int i = 0; i < m; ++i) {
        labels[i] = perm_label(elems[i]);
        for (int j = 0; j < m; ++j) {
            std::vector<int> pq(n);
            for (int k = 0; k < n; ++k)
                pq[k] = elems[i][elems[j][k]];
            table[i][j] = index.at(pq);
        }
    }
    return FiniteGroup::from_table(table, labels);
}

FiniteGroup symmetric_group(int n) {
    std::vector<std::vector<int>> gens;
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::swap(p[i], p[i + 1]);
        gens.push_back(p);
    }
    return permutation_group(n, gens);
}

} // namespace bcp
