#include "hecke/clifford.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hecke/render.hpp"

namespace hecke {

std::vector<std::optional<std::size_t>> slot_map(const CliffordLink &link, const GroupDatum &parent, const GroupDatum &child) {
    if (link.parameter_spec.size() != parent.slot_count())
        throw ValidationError("link " + link.parent + "->" + link.child + ": parameter_spec has " +
                              std::to_string(link.parameter_spec.size()) + " entries for " +
                              std::to_string(parent.slot_count()) + " parent slots");
    std::vector<std::optional<std::size_t>> out;
    for (const auto &s : link.parameter_spec) {
        if (s == "fixed") {
            out.push_back(std::nullopt);
            continue;
        }
        auto c = child.slot_by_param(s);
        if (!c) throw ValidationError("link " + link.parent + "->" + link.child + ": unknown child slot " + s);
        out.push_back(c);
    }
    return out;
}

std::vector<std::string> link_problems(const CliffordLink &link, const GroupDatum &parent, const GroupDatum &child) {
    std::vector<std::string> out;
    const std::string tag = "link " + link.parent + "->" + link.child + ": ";
    try {
        auto map = slot_map(link, parent, child);
        std::vector<int> hits(child.slot_count(), 0);
        for (auto &m : map)
            if (m) ++hits[*m];
        for (std::size_t c = 0; c < hits.size(); ++c)
            if (hits[c] != 1) out.push_back(tag + "child slot " + child.slot_display(c) + " is hit " + std::to_string(hits[c]) + " times");
    } catch (const ValidationError &e) {
        out.push_back(e.what());
    }
    if (link.cyclic_order < 1) out.push_back(tag + "cyclic order must be positive");
    std::map<std::string, int> seen_parent;
    std::set<std::string> seen_child;
    for (const auto &row : link.induction) {
        if (!child.char_index(row.child)) out.push_back(tag + "unknown child character " + row.child);
        if (!seen_child.insert(row.child).second) out.push_back(tag + "child character " + row.child + " has two rows");
        if (row.parents.empty() || link.cyclic_order % static_cast<std::int64_t>(row.parents.size()) != 0)
            out.push_back(tag + "row of " + row.child + " has " + std::to_string(row.parents.size()) +
                          " constituents, which does not divide " + std::to_string(link.cyclic_order));
        for (const auto &p : row.parents) {
            if (!parent.char_index(p)) out.push_back(tag + "unknown parent character " + p + " in row of " + row.child);
            if (++seen_parent[p] == 2) out.push_back(tag + "parent character " + p + " occurs in two rows");
        }
    }
    for (const auto &sp : link.schur_pairs) {
        if (!parent.char_index(sp.parent)) out.push_back(tag + "unknown parent character " + sp.parent + " in schur pair");
        if (!child.char_index(sp.child)) out.push_back(tag + "unknown child character " + sp.child + " in schur pair");
    }
    return out;
}

IntVec restrict_normal(const CliffordLink &link, const GroupDatum &parent, const GroupDatum &child, const IntVec &normal) {
    auto map = slot_map(link, parent, child);
    if (normal.size() != map.size()) throw ArityError("normal length does not match the parent slots");
    IntVec out(child.slot_count(), 0);
    for (std::size_t s = 0; s < map.size(); ++s)
        if (map[s]) out[*map[s]] += normal[s];
    return out;
}

Partition transport_blocks(const CliffordLink &link, const GroupDatum &parent, const GroupDatum &child,
                           const Partition &parent_blocks) {
    if (parent_blocks.size() != parent.characters.size()) throw std::invalid_argument("transport: partition size mismatch");
    const std::string tag = "link " + link.parent + "->" + link.child + ": ";
    // parent character -> child character of its induction row
    std::vector<std::optional<std::size_t>> row_of(parent.characters.size());
    std::vector<std::vector<std::size_t>> rows(child.characters.size());
    for (const auto &row : link.induction) {
        auto c = child.char_index(row.child);
        if (!c) throw ValidationError(tag + "unknown child character " + row.child);
        for (const auto &p : row.parents) {
            auto i = parent.char_index(p);
            if (!i) throw ValidationError(tag + "unknown parent character " + p);
            row_of[*i] = *c;
            rows[*c].push_back(*i);
        }
    }
    // the cyclic dual group permutes blocks and acts transitively on each row,
    // so all blocks meeting a row meet it in the same number of constituents
    auto ids = parent_blocks.part_ids();
    for (std::size_t c = 0; c < rows.size(); ++c) {
        std::map<std::size_t, std::size_t> meet_count;
        for (auto i : rows[c]) ++meet_count[ids[i]];
        std::set<std::size_t> sizes;
        for (auto &[_, n] : meet_count) sizes.insert(n);
        if (sizes.size() > 1)
            throw ValidationError(tag + "parent blocks split the induction row of " + child.characters[c].str() + " unevenly");
    }
    std::vector<std::vector<std::size_t>> glue;
    for (const auto &part : parent_blocks.parts()) {
        std::vector<std::size_t> kids;
        for (auto i : part)
            if (row_of[i]) kids.push_back(*row_of[i]);
        if (!kids.empty()) glue.push_back(kids);
    }
    std::vector<Partition> ps{Partition::singletons(child.characters.size())};
    for (auto &kids : glue) {
        std::vector<std::vector<std::size_t>> parts{std::vector<std::size_t>(kids.begin(), kids.end())};
        std::sort(parts[0].begin(), parts[0].end());
        parts[0].erase(std::unique(parts[0].begin(), parts[0].end()), parts[0].end());
        for (std::size_t c = 0; c < child.characters.size(); ++c)
            if (!std::binary_search(parts[0].begin(), parts[0].end(), c)) parts.push_back({c});
        ps.emplace_back(child.characters.size(), parts);
    }
    return join(ps);
}

std::vector<HyperplaneTable> descend_hyperplanes(const CliffordLink &link, const GroupDatum &parent, const GroupDatum &child,
                                                 const std::vector<HyperplaneTable> &parent_tables) {
    // Blocks are transported from the parent partition valid on the restricted hyperplane, i.e. the
    // join of every parent table whose normal restricts to it (tables restricting to zero join all).
    const std::size_t k = parent.characters.size();
    Partition base = Partition::singletons(k);
    std::set<std::int64_t> base_primes;
    struct Acc {
        IntVec normal;
        Partition blocks;
        std::set<std::int64_t> primes;
    };
    std::vector<Acc> acc;
    for (const auto &t : parent_tables) {
        IntVec r = t.normal ? restrict_normal(link, parent, child, *t.normal) : IntVec(child.slot_count(), 0);
        if (is_zero(r)) {
            base = join(base, t.blocks);
            base_primes.insert(t.primes.begin(), t.primes.end());
            continue;
        }
        r = sign_canonical(primitive_part(r).first);
        auto it = std::find_if(acc.begin(), acc.end(), [&](const Acc &x) { return x.normal == r; });
        if (it == acc.end()) {
            acc.push_back({r, t.blocks, {t.primes.begin(), t.primes.end()}});
        } else {
            it->blocks = join(it->blocks, t.blocks);
            it->primes.insert(t.primes.begin(), t.primes.end());
        }
    }
    std::vector<HyperplaneTable> out;
    HyperplaneTable b0;
    b0.blocks = transport_blocks(link, parent, child, base);
    b0.primes.assign(base_primes.begin(), base_primes.end());
    out.push_back(b0);
    for (auto &a : acc) {
        HyperplaneTable t;
        t.normal = a.normal;
        t.blocks = transport_blocks(link, parent, child, join(a.blocks, base));
        t.primes.assign(a.primes.begin(), a.primes.end());
        out.push_back(t);
    }
    return out;
}

SchurElement specialize_to_child(const CliffordLink &link, const GroupDatum &parent, const GroupDatum &child,
                                 const XFormEntry &entry, std::size_t child_index) {
    auto map = slot_map(link, parent, child);
    ParsedXForm px = parse_xform(parent, entry);
    // fixed slot (C, j) carries x = zeta_{e_C}^j, principal branch for fractional powers
    auto fixed_root = [&](const RatVec &exps) {
        Rational frac(0);
        for (std::size_t s = 0; s < exps.size(); ++s) {
            if (map[s]) continue;
            auto [c, j] = parent.slot(s);
            frac += exps[s] * j / parent.orbits[c].order;
        }
        return RootOfUnity::from_fraction(frac.numerator(), frac.denominator());
    };
    auto moved = [&](const RatVec &exps) {
        RatVec out(child.slot_count(), Rational(0));
        for (std::size_t s = 0; s < exps.size(); ++s)
            if (map[s]) out[*map[s]] += exps[s];
        return out;
    };
    std::vector<SchurFactorX> factors;
    for (const auto &f : px.factors) {
        RatVec exps(f.num.size());
        for (std::size_t s = 0; s < exps.size(); ++s) exps[s] = Rational(f.num[s], f.den);
        RatVec ce = moved(exps);
        SchurFactorX g;
        g.cyc_index = f.cyc_index;
        g.twist = f.twist * fixed_root(exps);
        g.mult = f.mult;
        std::int64_t den = 1;
        for (auto &r : ce) den = lcm64(den, r.denominator());
        g.den = den;
        for (auto &r : ce) g.num.push_back((r * den).numerator());
        factors.push_back(g);
    }
    return normalize_x_to_v(child, child_index, px.coeff, moved(px.lead), factors, px.lead_twist * fixed_root(px.lead));
}

std::vector<std::string> validate_schur_scaling(const CliffordLink &link, const GroupDatum &parent, const GroupDatum &child) {
    std::vector<std::string> out;
    const std::string tag = "link " + link.parent + "->" + link.child + ": ";
    struct Pair {
        std::string parent, child;
        std::int64_t factor;
    };
    std::vector<Pair> pairs;
    for (const auto &row : link.induction)
        for (const auto &p : row.parents) pairs.push_back({p, row.child, static_cast<std::int64_t>(row.parents.size())});
    for (const auto &sp : link.schur_pairs) pairs.push_back({sp.parent, sp.child, link.cyclic_order});

    for (const auto &pr : pairs) {
        auto pi = parent.char_index(pr.parent);
        auto ci = child.char_index(pr.child);
        if (!pi || !ci) continue;
        const XFormEntry *entry = nullptr;
        for (const auto &e : parent.schur_entries)
            if (auto *x = std::get_if<XFormEntry>(&e); x && parent.char_index(x->character) == pi) entry = x;
        if (!entry || *ci >= child.schur.size() || !child.schur[*ci]) continue;
        SchurElement expected = *child.schur[*ci];
        expected.xi = expected.xi * pr.factor;
        try {
            SchurElement got = specialize_to_child(link, parent, child, *entry, *ci);
            if (!same_schur(got, expected)) {
                SchurElement g = canonical_form(got), e = canonical_form(expected);
                std::string why = !(g.xi == e.xi) ? "coefficient " + g.xi.minimal().str() + " vs " + e.xi.minimal().str()
                                  : g.lead != e.lead ? "leading monomial differs"
                                                     : "factor lists differ";
                out.push_back(tag + pr.parent + " specialized is not " + std::to_string(pr.factor) + " times " + pr.child +
                              " (" + why + ")");
            }
        } catch (const HeckeError &e) {
            out.push_back(tag + pr.parent + ": " + e.what());
        }
    }
    return out;
}

std::vector<std::string> transport_mismatches(const CliffordLink &link, const GroupDatum &parent, const GroupDatum &child) {
    std::vector<std::string> out;
    if (link.induction.empty() || parent.hyperplane_tables.empty()) return out;
    auto render = [&](const std::optional<IntVec> &n) {
        return n ? render_hyperplane(child, *n) : std::string("no essential hyperplane");
    };
    for (const auto &d : descend_hyperplanes(link, parent, child, parent.hyperplane_tables)) {
        for (const auto &t : child.hyperplane_tables) {
            bool same = d.normal ? (t.normal && sign_canonical(*t.normal) == *d.normal) : !t.normal;
            if (!same) continue;
            if (!(t.blocks == d.blocks))
                out.push_back("link " + link.parent + "->" + link.child + ": stored " + child.name + " table at " +
                              render(t.normal) + " is " + t.blocks.str() + ", transport gives " + d.blocks.str());
        }
    }
    return out;
}

}  // namespace hecke
