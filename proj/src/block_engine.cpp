#include "hecke/block_engine.hpp"

#include <algorithm>
#include <set>

#include "hecke/group_blocks.hpp"

namespace hecke {

std::vector<const HyperplaneTable *> hyperplanes_containing(const std::vector<HyperplaneTable> &tables, const IntVec &n) {
    std::vector<const HyperplaneTable *> out;
    for (const auto &t : tables) {
        if (!t.normal) continue;
        if (t.normal->size() != n.size()) throw ArityError("specialization length does not match the hyperplane tables");
        if (dot(*t.normal, n) == 0) out.push_back(&t);
    }
    return out;
}

Partition rouquier_from_tables(const GroupDatum &g, const IntVec &n) {
    if (n.size() != g.slot_count())
        throw ArityError("expected " + std::to_string(g.slot_count()) + " exponents, got " + std::to_string(n.size()));
    const HyperplaneTable *base = g.no_hyperplane_table();
    if (!base) throw MissingPayloadError(g.name + ": no stored block tables");
    std::vector<Partition> ps{base->blocks};
    for (auto *t : hyperplanes_containing(g.hyperplane_tables, n)) ps.push_back(t->blocks);
    return join(ps);
}

std::vector<IntVec> schur_hyperplanes(const GroupDatum &g, std::int64_t p) {
    std::set<IntVec> out;
    for (const auto &s : g.schur)
        if (s)
            for (auto &v : essential_monomials(*s, p)) out.insert(v);
    return {out.begin(), out.end()};
}

namespace {

std::optional<Rational> aA_of(const GroupDatum &g, const std::optional<SchurElement> &s, const IntVec &n) {
    if (!s) return std::nullopt;
    auto [a, A] = a_and_A(g, specialize(g, *s, n));
    return a + A;
}

}  // namespace

std::vector<std::optional<Rational>> sum_aA_serial(const GroupDatum &g, const IntVec &n) {
    std::vector<std::optional<Rational>> out;
    for (std::size_t i = 0; i < g.characters.size(); ++i)
        out.push_back(i < g.schur.size() ? aA_of(g, g.schur[i], n) : std::nullopt);
    return out;
}

std::vector<std::optional<Rational>> sum_aA(const GroupDatum &g, const IntVec &n) {
    const std::size_t k = g.characters.size();
    std::vector<std::optional<Rational>> out(k);
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < k; ++i)
        if (i < g.schur.size()) out[i] = aA_of(g, g.schur[i], n);
    return out;
}

namespace {

// Lazily walks primitive vectors of growing boxes in lexicographic order.
class SpecWalker {
public:
    SpecWalker(std::size_t m, std::vector<IntVec> avoid, std::optional<IntVec> on, std::int64_t max_bound)
        : m_(m), avoid_(std::move(avoid)), on_(std::move(on)), max_bound_(max_bound) {
        if (on_) *on_ = sign_canonical(primitive_part(*on_).first);
        for (auto &a : avoid_) a = sign_canonical(primitive_part(a).first);
        avoid_.erase(std::remove_if(avoid_.begin(), avoid_.end(), [&](const IntVec &a) { return on_ && a == *on_; }),
                     avoid_.end());
        start_box();
    }

    std::optional<IntVec> next() {
        while (bound_ <= max_bound_) {
            while (!done_) {
                IntVec v = cur_;
                advance();
                if (admissible(v)) return v;
            }
            prev_ = bound_;
            bound_ *= 2;
            start_box();
        }
        return std::nullopt;
    }

private:
    void start_box() {
        cur_.assign(m_, -bound_);
        done_ = m_ == 0;
    }

    void advance() {
        for (std::size_t i = m_; i-- > 0;) {
            if (cur_[i] < bound_) {
                ++cur_[i];
                return;
            }
            cur_[i] = -bound_;
        }
        done_ = true;
    }

    bool admissible(const IntVec &v) const {
        std::int64_t mx = 0;
        for (auto x : v) mx = std::max(mx, x < 0 ? -x : x);
        if (mx <= prev_) return false;  // seen in a smaller box (also excludes 0)
        if (!is_primitive(v)) return false;
        if (on_ && dot(*on_, v) != 0) return false;
        for (auto &a : avoid_)
            if (dot(a, v) == 0) return false;
        return true;
    }

    std::size_t m_;
    std::vector<IntVec> avoid_;
    std::optional<IntVec> on_;
    std::int64_t max_bound_;
    std::int64_t bound_ = 1, prev_ = 0;
    IntVec cur_;
    bool done_ = false;
};

Partition keys_partition(const std::vector<std::optional<Rational>> &keys) {
    // characters without data get a key of their own
    std::vector<std::pair<std::size_t, Rational>> k;
    for (std::size_t i = 0; i < keys.size(); ++i)
        k.push_back(keys[i] ? std::pair<std::size_t, Rational>{0, *keys[i]} : std::pair<std::size_t, Rational>{i + 1, 0});
    return Partition::from_keys(k);
}

Partition refine_by_aA(const GroupDatum &g, Partition cur, const std::vector<IntVec> &avoid, const std::optional<IntVec> &on,
                       const EngineOptions &opt) {
    SpecWalker walk(g.slot_count(), avoid, on, opt.max_bound);
    std::size_t used = 0, stable = 0;
    while (auto n = walk.next()) {
        Partition next = meet(cur, keys_partition(opt.parallel ? sum_aA(g, *n) : sum_aA_serial(g, *n)));
        ++used;
        stable = next == cur ? stable + 1 : 0;
        cur = std::move(next);
        if (used >= opt.min_specs && stable >= opt.stable_window) break;
        if (used >= opt.max_specs || cur.is_singletons()) break;
    }
    if (used == 0) throw HeckeError(g.name + ": no admissible specialization within the search bound", 1);
    return cur;
}

void require_schur(const GroupDatum &g) {
    if (!g.has_any_schur()) throw MissingPayloadError(g.name + ": no Schur payload");
}

Partition with_group_blocks(const GroupDatum &g, const Partition &lambda1, std::int64_t p) {
    if (!g.character_table) return lambda1;
    return meet(lambda1, p_blocks(*g.character_table, p));
}

}  // namespace

std::vector<IntVec> admissible_specializations(const GroupDatum &g, const std::vector<IntVec> &avoid,
                                               const std::optional<IntVec> &on_hyperplane, std::size_t count,
                                               std::int64_t max_bound) {
    SpecWalker walk(g.slot_count(), avoid, on_hyperplane, max_bound);
    std::vector<IntVec> out;
    while (out.size() < count)
        if (auto n = walk.next())
            out.push_back(*n);
        else
            break;
    return out;
}

Partition blocks_no_hyperplane(const GroupDatum &g, std::int64_t p, const EngineOptions &opt) {
    require_schur(g);
    const std::size_t k = g.characters.size();
    if (g.group_order % p != 0) return Partition::singletons(k);
    std::vector<std::size_t> selected, rest;
    for (std::size_t i = 0; i < k; ++i) {
        bool in = i < g.schur.size() && g.schur[i] && norm(g.schur[i]->xi) % p == 0;
        (in ? selected : rest).push_back(i);
    }
    if (selected.size() <= 1) return Partition::singletons(k);
    std::vector<std::vector<std::size_t>> parts{selected};
    for (auto i : rest) parts.push_back({i});
    Partition lambda2 = with_group_blocks(g, Partition(k, parts), p);
    if (lambda2.is_singletons()) return lambda2;
    return refine_by_aA(g, lambda2, schur_hyperplanes(g, p), std::nullopt, opt);
}

Partition blocks_one_hyperplane(const GroupDatum &g, std::int64_t p, const IntVec &h, const EngineOptions &opt) {
    require_schur(g);
    const std::size_t k = g.characters.size();
    Partition base = blocks_no_hyperplane(g, p, opt);
    IntVec hc = sign_canonical(primitive_part(h).first);
    std::vector<std::size_t> selected, rest;
    for (std::size_t i = 0; i < k; ++i) {
        bool in = false;
        if (i < g.schur.size() && g.schur[i]) {
            auto ess = essential_monomials(*g.schur[i], p);
            in = std::find(ess.begin(), ess.end(), hc) != ess.end();
        }
        (in ? selected : rest).push_back(i);
    }
    // h not p-essential for anybody: nothing changes on the hyperplane
    if (selected.empty()) return base;
    std::vector<std::vector<std::size_t>> parts{selected};
    for (auto i : rest) parts.push_back({i});
    Partition lambda = with_group_blocks(g, Partition(k, parts), p);
    if (!lambda.is_singletons()) lambda = refine_by_aA(g, lambda, schur_hyperplanes(g, p), hc, opt);
    return join(lambda, base);
}

Partition rouquier_from_schur(const GroupDatum &g, const IntVec &n, const EngineOptions &opt) {
    if (n.size() != g.slot_count())
        throw ArityError("expected " + std::to_string(g.slot_count()) + " exponents, got " + std::to_string(n.size()));
    require_schur(g);
    struct Task {
        std::int64_t p;
        std::optional<IntVec> h;
    };
    std::vector<Task> tasks;
    for (auto p : bad_primes(g, n)) {
        tasks.push_back({p, std::nullopt});
        for (auto &h : schur_hyperplanes(g, p))
            if (dot(h, n) == 0) tasks.push_back({p, h});
    }
    std::vector<Partition> results(tasks.size());
    EngineOptions inner = opt;
    inner.parallel = false;  // parallelism is spent on the task level here
    std::string err;
    int code = 0;
#pragma omp parallel for schedule(dynamic) if (opt.parallel)
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        try {
            results[t] = tasks[t].h ? blocks_one_hyperplane(g, tasks[t].p, *tasks[t].h, inner)
                                    : blocks_no_hyperplane(g, tasks[t].p, inner);
        } catch (const HeckeError &e) {
#pragma omp critical
            err = e.what(), code = e.exit_code();
        }
    }
    if (!err.empty()) throw HeckeError(err, code);
    results.push_back(Partition::singletons(g.characters.size()));
    return join(results);
}

bool matches_stored_table(const GroupDatum &g, const std::optional<IntVec> &h, const Partition &p) {
    for (const auto &t : g.hyperplane_tables) {
        bool same = h ? (t.normal && sign_canonical(*t.normal) == sign_canonical(primitive_part(*h).first)) : !t.normal;
        if (same) return t.blocks == p;
    }
    return false;
}

}  // namespace hecke
