#include "hecke/group_blocks.hpp"

#include <numeric>

#include "hecke/errors.hpp"

namespace hecke {

CycInt central_character(const CharacterTable &t, std::size_t chi, std::size_t cls) {
    const CycInt &deg = t.values.at(chi).at(0);
    auto d = deg.as_integer();
    if (!d || *d <= 0) throw ValidationError("character table: degree of row " + std::to_string(chi + 1) + " is not a positive integer");
    CycInt num = t.values[chi].at(cls) * t.class_sizes.at(cls);
    auto q = num.div_exact(*d);
    if (!q) throw ValidationError("character table: central character of row " + std::to_string(chi + 1) + " at class " +
                                  std::to_string(cls + 1) + " is not integral");
    return q->lift(lcm64(q->conductor(), t.conductor));
}

namespace {

std::vector<Poly> residue_row(const CharacterTable &t, std::size_t chi, const PrimeIdealHandle &h) {
    std::vector<Poly> row;
    for (std::size_t c = 0; c < t.class_sizes.size(); ++c) row.push_back(residue(central_character(t, chi, c).lift(h.conductor), h));
    return row;
}

}  // namespace

Partition p_blocks_serial(const CharacterTable &t, std::int64_t p) {
    PrimeIdealHandle h = prime_handle(p, t.conductor);
    std::vector<std::vector<Poly>> keys;
    for (std::size_t i = 0; i < t.values.size(); ++i) keys.push_back(residue_row(t, i, h));
    return galois_close(t, Partition::from_keys(keys));
}

Partition p_blocks(const CharacterTable &t, std::int64_t p) {
    PrimeIdealHandle h = prime_handle(p, t.conductor);
    const std::size_t n = t.values.size();
    std::vector<std::vector<Poly>> keys(n);
    std::string err;
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < n; ++i) {
        try {
            keys[i] = residue_row(t, i, h);
        } catch (const std::exception &e) {
#pragma omp critical
            err = e.what();
        }
    }
    if (!err.empty()) throw ValidationError(err);
    return galois_close(t, Partition::from_keys(keys));
}

Partition galois_close(const CharacterTable &t, const Partition &pi) {
    const std::size_t n = t.values.size();
    if (pi.size() != n) throw std::invalid_argument("galois_close: partition size mismatch");
    std::vector<Partition> images{pi};
    auto ids = pi.part_ids();
    for (std::int64_t k = 2; k < t.conductor; ++k) {
        if (std::gcd(k, t.conductor) != 1) continue;
        // sigma_k permutes rows
        std::vector<std::size_t> perm(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<CycInt> img;
            for (auto &v : t.values[i]) img.push_back(v.lift(lcm64(v.conductor(), t.conductor)).galois(k));
            std::size_t j = 0;
            for (; j < n; ++j) {
                bool eq = true;
                for (std::size_t c = 0; c < img.size() && eq; ++c) eq = img[c] == t.values[j][c];
                if (eq) break;
            }
            if (j == n) throw ValidationError("character table: Galois image of row " + std::to_string(i + 1) + " is no row");
            perm[i] = j;
        }
        std::vector<std::vector<std::size_t>> parts;
        for (auto &part : pi.parts()) {
            std::vector<std::size_t> q;
            for (auto x : part) q.push_back(perm[x]);
            parts.push_back(q);
        }
        images.emplace_back(n, parts);
    }
    (void)ids;
    return join(images);
}

std::vector<std::string> table_problems(const GroupDatum &g, const CharacterTable &t) {
    std::vector<std::string> out;
    const std::size_t k = t.class_sizes.size();
    if (t.values.size() != g.characters.size()) {
        out.push_back("character table has " + std::to_string(t.values.size()) + " rows for " +
                      std::to_string(g.characters.size()) + " characters");
        return out;
    }
    if (k != t.values.size()) out.push_back("character table is not square");
    std::int64_t total = std::accumulate(t.class_sizes.begin(), t.class_sizes.end(), std::int64_t{0});
    if (total != g.group_order) out.push_back("class sizes sum to " + std::to_string(total));
    for (std::size_t i = 0; i < t.values.size(); ++i) {
        if (t.values[i].size() != k) {
            out.push_back("row " + std::to_string(i + 1) + " has wrong length");
            continue;
        }
        if (!(t.values[i][0] == CycInt::integer(g.characters[i].degree)))
            out.push_back("row " + std::to_string(i + 1) + " does not start with the degree");
    }
    if (!out.empty()) return out;
    // trivial row and orthogonality of the trivial row against the rest
    std::size_t triv = t.values.size();
    for (std::size_t i = 0; i < t.values.size() && triv == t.values.size(); ++i) {
        bool all_one = true;
        for (auto &v : t.values[i]) all_one = all_one && v == CycInt::integer(1);
        if (all_one) triv = i;
    }
    if (triv == t.values.size()) {
        out.push_back("no trivial row");
        return out;
    }
    for (std::size_t i = 0; i < t.values.size(); ++i) {
        CycInt s = CycInt::integer(0, t.conductor);
        for (std::size_t c = 0; c < k; ++c) s = s + t.values[i][c] * t.class_sizes[c];
        std::int64_t expect = i == triv ? g.group_order : 0;
        if (!(s == CycInt::integer(expect))) out.push_back("row " + std::to_string(i + 1) + " fails orthogonality with the trivial row");
    }
    for (std::size_t i = 0; i < t.values.size(); ++i)
        for (std::size_t c = 0; c < k; ++c) {
            try {
                (void)central_character(t, i, c);
            } catch (const ValidationError &e) {
                out.push_back(e.what());
            }
        }
    return out;
}

}  // namespace hecke
