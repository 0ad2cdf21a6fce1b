#include "oracle/todd_coxeter.hpp"

#include <numeric>
#include <stdexcept>

namespace oracle {

namespace {

constexpr std::size_t none = static_cast<std::size_t>(-1);

struct Enumerator {
    std::size_t cols;
    std::size_t limit;
    std::vector<std::vector<std::size_t>> t;
    std::vector<std::size_t> p;  // coincidence forest, p[c] == c for live cosets

    static std::size_t col(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }
    static std::size_t inv(std::size_t c) { return c ^ 1; }

    std::size_t define(std::size_t c, std::size_t x) {
        if (t.size() >= limit) throw std::runtime_error("coset limit reached");
        std::size_t d = t.size();
        t.emplace_back(cols, none);
        p.push_back(d);
        t[c][x] = d;
        t[d][inv(x)] = c;
        return d;
    }

    std::size_t rep(std::size_t k) {
        std::size_t r = k;
        while (p[r] != r) r = p[r];
        while (p[k] != r) {
            std::size_t n = p[k];
            p[k] = r;
            k = n;
        }
        return r;
    }

    void merge(std::size_t a, std::size_t b, std::vector<std::size_t> &q) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        p[b] = a;
        q.push_back(b);
    }

    void coincidence(std::size_t a, std::size_t b) {
        std::vector<std::size_t> q;
        merge(a, b, q);
        for (std::size_t i = 0; i < q.size(); ++i) {
            std::size_t g = q[i];
            for (std::size_t x = 0; x < cols; ++x) {
                std::size_t d = t[g][x];
                if (d == none) continue;
                t[d][inv(x)] = none;
                std::size_t mu = rep(g), nu = rep(d);
                if (t[mu][x] != none)
                    merge(nu, t[mu][x], q);
                else if (t[nu][inv(x)] != none)
                    merge(mu, t[nu][inv(x)], q);
                else {
                    t[mu][x] = nu;
                    t[nu][inv(x)] = mu;
                }
            }
        }
    }

    void scan_and_fill(std::size_t alpha, const std::vector<std::size_t> &w) {
        std::size_t f = alpha, b = alpha;
        std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
        for (;;) {
            while (i <= j && t[f][w[i]] != none) f = t[f][w[i++]];
            if (i > j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j >= i && t[b][inv(w[j])] != none) b = t[b][inv(w[j--])];
            if (j < i) {
                coincidence(f, b);
                return;
            }
            if (i == j) {
                t[f][w[i]] = b;
                t[b][inv(w[i])] = f;
                return;
            }
            define(f, w[i]);
        }
    }
};

}  // namespace

CosetTable enumerate_cosets(std::size_t ngens, const std::vector<Word> &relators, std::size_t limit) {
    Enumerator e{2 * ngens, limit, {}, {}};
    e.t.emplace_back(e.cols, none);
    e.p.push_back(0);
    std::vector<std::vector<std::size_t>> rels;
    for (const auto &w : relators) {
        std::vector<std::size_t> r;
        for (int l : w) r.push_back(Enumerator::col(l));
        rels.push_back(r);
    }
    for (std::size_t alpha = 0; alpha < e.t.size(); ++alpha) {
        for (const auto &r : rels) {
            if (e.p[alpha] != alpha) break;
            e.scan_and_fill(alpha, r);
        }
        if (e.p[alpha] != alpha) continue;
        for (std::size_t x = 0; x < e.cols; ++x)
            if (e.t[alpha][x] == none) e.define(alpha, x);
    }
    std::vector<std::size_t> renum(e.t.size(), none);
    std::size_t live = 0;
    for (std::size_t c = 0; c < e.t.size(); ++c)
        if (e.p[c] == c) renum[c] = live++;
    CosetTable out;
    out.ngens = ngens;
    out.perm.assign(ngens, std::vector<std::size_t>(live));
    for (std::size_t c = 0; c < e.t.size(); ++c) {
        if (e.p[c] != c) continue;
        for (std::size_t g = 0; g < ngens; ++g) out.perm[g][renum[c]] = renum[e.rep(e.t[c][2 * g])];
    }
    return out;
}

std::vector<Word> g4_relators() {
    // s = 1, t = 2
    return {{1, 2, 1, -2, -1, -2}, {1, 1, 1}, {2, 2, 2}};
}

std::vector<Word> g7_relators() {
    // s = 1, t = 2, u = 3
    return {{1, 2, 3, -1, -3, -2}, {2, 3, 1, -2, -1, -3}, {1, 1}, {2, 2, 2}, {3, 3, 3}};
}

}  // namespace oracle
