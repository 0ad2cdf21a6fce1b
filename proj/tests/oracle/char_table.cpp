#include "oracle/char_table.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

namespace oracle {

namespace {

Perm compose(const Perm &a, const Perm &b) {  // a then b
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
}

Perm inverse(const Perm &a) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = i;
    return r;
}

}  // namespace

std::vector<Perm> group_elements(const CosetTable &t) {
    Perm id(t.size());
    std::iota(id.begin(), id.end(), 0);
    std::vector<Perm> out{id};
    std::map<Perm, std::size_t> seen{{id, 0}};
    for (std::size_t i = 0; i < out.size(); ++i)
        for (const auto &g : t.perm) {
            Perm x = compose(out[i], g);
            if (seen.emplace(x, out.size()).second) out.push_back(x);
        }
    return out;
}

NumericTable burnside_table(const std::vector<Perm> &el) {
    const std::size_t n = el.size();
    std::map<Perm, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[el[i]] = i;
    std::vector<std::size_t> mul(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mul[i * n + j] = index.at(compose(el[i], el[j]));
    std::vector<std::size_t> inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[i] = index.at(inverse(el[i]));

    std::vector<std::size_t> cls(n, static_cast<std::size_t>(-1));
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < n; ++i) {
        if (cls[i] != static_cast<std::size_t>(-1)) continue;
        std::vector<std::size_t> c;
        for (std::size_t g = 0; g < n; ++g) {
            std::size_t x = mul[mul[inv[g] * n + i] * n + g];
            if (cls[x] == static_cast<std::size_t>(-1)) {
                cls[x] = classes.size();
                c.push_back(x);
            }
        }
        classes.push_back(c);
    }
    const std::size_t k = classes.size();

    NumericTable out;
    for (const auto &c : classes) {
        out.class_sizes.push_back(static_cast<std::int64_t>(c.size()));
        std::size_t x = c[0], o = 1;
        while (x != 0) {
            x = mul[x * n + c[0]];
            ++o;
        }
        out.class_orders.push_back(static_cast<std::int64_t>(o));
    }

    // a[i][j][l] = #{(x, y) in C_i x C_j : xy = z_l}
    std::vector<double> a(k * k * k, 0.0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t x : classes[i])
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t y : classes[j]) {
                    std::size_t z = mul[x * n + y];
                    if (z == classes[cls[z]][0]) a[(i * k + j) * k + cls[z]] += 1.0;
                }

    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        double r = u(rng);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t l = 0; l < k; ++l) A(j, l) += r * a[(i * k + j) * k + l];
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(A.cast<cplx>());
    if (es.info() != Eigen::Success) throw std::runtime_error("eigen solver failed");

    const std::size_t id_cls = cls[0];
    for (std::size_t e = 0; e < k; ++e) {
        Eigen::VectorXcd w = es.eigenvectors().col(static_cast<Eigen::Index>(e));
        w /= w(static_cast<Eigen::Index>(id_cls));
        double s = 0;
        for (std::size_t l = 0; l < k; ++l) s += std::norm(w(static_cast<Eigen::Index>(l))) / double(out.class_sizes[l]);
        double deg = std::sqrt(double(n) / s);
        std::vector<cplx> row(k);
        for (std::size_t l = 0; l < k; ++l) row[l] = w(static_cast<Eigen::Index>(l)) * deg / double(out.class_sizes[l]);
        out.values.push_back(row);
    }
    std::sort(out.values.begin(), out.values.end(),
              [&](const auto &x, const auto &y) { return x[id_cls].real() < y[id_cls].real(); });
    return out;
}

cplx to_complex(const hecke::CycInt &a) {
    cplx s = 0;
    const double N = double(a.conductor());
    for (std::size_t t = 0; t < a.coeffs().size(); ++t)
        s += double(a.coeffs()[t]) * std::polar(1.0, 2 * std::numbers::pi * double(t) / N);
    return s;
}

std::vector<std::vector<cplx>> to_complex(const hecke::CharacterTable &t) {
    std::vector<std::vector<cplx>> out;
    for (const auto &row : t.values) {
        std::vector<cplx> r;
        for (const auto &v : row) r.push_back(to_complex(v));
        out.push_back(r);
    }
    return out;
}

std::vector<std::size_t> match_tables(const hecke::CharacterTable &stored, const NumericTable &o, double tol) {
    auto sv = to_complex(stored);
    const std::size_t k = o.class_sizes.size();
    if (sv.size() != o.values.size() || stored.class_sizes.size() != k) return {};
    std::vector<std::size_t> cols(k);
    std::iota(cols.begin(), cols.end(), 0);
    do {
        bool ok = true;
        for (std::size_t c = 0; c < k && ok; ++c) ok = stored.class_sizes[c] == o.class_sizes[cols[c]];
        if (!ok) continue;
        std::vector<std::size_t> rows;
        std::vector<bool> used(sv.size(), false);
        for (const auto &srow : sv) {
            std::size_t hit = sv.size();
            for (std::size_t r = 0; r < o.values.size() && hit == sv.size(); ++r) {
                if (used[r]) continue;
                bool eq = true;
                for (std::size_t c = 0; c < k && eq; ++c) eq = std::abs(srow[c] - o.values[r][cols[c]]) < tol;
                if (eq) hit = r;
            }
            if (hit == sv.size()) break;
            used[hit] = true;
            rows.push_back(hit);
        }
        if (rows.size() == sv.size()) return rows;
    } while (std::next_permutation(cols.begin(), cols.end()));
    return {};
}

hecke::Partition pregular_blocks(const std::vector<std::int64_t> &sizes, const std::vector<std::int64_t> &orders,
                                 const std::vector<std::vector<cplx>> &v, std::int64_t p, double tol) {
    const std::size_t n = v.size();
    std::vector<std::size_t> comp(n);
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](std::size_t x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            cplx s = 0;
            for (std::size_t c = 0; c < sizes.size(); ++c)
                if (orders[c] % p != 0) s += double(sizes[c]) * v[i][c] * std::conj(v[j][c]);
            if (std::abs(s) > tol) comp[find(i)] = find(j);
        }
    std::vector<std::size_t> keys(n);
    for (std::size_t i = 0; i < n; ++i) keys[i] = find(i);
    return hecke::Partition::from_keys(keys);
}

}  // namespace oracle
