#pragma once

#include <string>

#include "json.hpp"

#include "bcp/algebra.hpp"
#include "bcp/matched_pair.hpp"
#include "bcp/rep.hpp"

namespace bcp {

using Json = nlohmann::json;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// {"order": n, "mult": [[...]], "labels": [...]}; parsing also accepts the
/// {"permutations": [[...], ...]} generator form (closed internally).
Json group_to_json(const FiniteGroup &g);
FiniteGroup group_from_json(const Json &j);

/// {"gamma": <group>, "g": <group>, "alpha": [[...]], "beta": [[...]]} or
/// {"factorization": {"ambient": <group>, "gamma_gens": [...], "g_gens": [...]}}.
Json pair_to_json(const MatchedPair &mp);
MatchedPair pair_from_json(const Json &j);
MatchedPair load_pair(const std::string &path);

/// Sparse {gamma: {g: [re, im]}} with string keys.
Json algebra_to_json(const AlgebraElement &a);
AlgebraElement algebra_from_json(const MatchedPair &mp, const Json &j);

/// Matrices as nested [re, im] pairs.
Json matrix_to_json(const Matrix &m);
Matrix matrix_from_json(const Json &j);
Json irrep_table_to_json(const IrrepTable &t);

/// FNV-1a hash of the canonical dump, as fixed-width hex.
std::string content_hash(const Json &j);

/// Irrep table through an on-disk cache keyed by group hash + seed +
/// tolerances; recomputes (and rewrites) when no matching entry exists.
IrrepTable cached_irreps(const FiniteGroup &g, unsigned long long seed,
                         const Tolerances &tol, const std::string &cache_dir);

struct NamedPair {
    std::string name;
    MatchedPair pair;
};

/// The bundled example pairs: trivial (Z2,Z2) and (Z2,Z3), both S3
/// factorizations, and S4 = D4.Z3 with both actions nontrivial.
std::vector<NamedPair> corpus();

} // namespace bcp
