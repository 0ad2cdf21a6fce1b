#include "hecke/lattice.hpp"

#include <numeric>
#include <stdexcept>

namespace hecke {

std::int64_t dot(const IntVec &a, const IntVec &b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IntVec operator+(const IntVec &a, const IntVec &b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector add: length mismatch");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IntVec scaled(const IntVec &a, std::int64_t k) {
    IntVec r(a);
    for (auto &x : r) x *= k;
    return r;
}

bool is_zero(const IntVec &v) {
    for (auto x : v)
        if (x) return false;
    return true;
}

IntMat mat_mul(const IntMat &a, const IntMat &b) {
    if (a.empty()) return {};
    std::size_t inner = a[0].size();
    if (inner != b.size()) throw std::invalid_argument("mat_mul: shape mismatch");
    std::size_t cols = b.empty() ? 0 : b[0].size();
    IntMat c(a.size(), IntVec(cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (!a[i][k]) continue;
            for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

IntVec mat_vec(const IntMat &a, const IntVec &v) {
    IntVec r(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], v);
    return r;
}

IntMat identity(std::size_t n) {
    IntMat I(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

std::pair<IntVec, std::int64_t> primitive_part(const IntVec &v) {
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x);
    if (g == 0) return {v, 0};
    IntVec p(v);
    for (auto &x : p) x /= g;
    return {p, g};
}

bool is_primitive(const IntVec &v) { return primitive_part(v).second == 1; }

IntVec sign_canonical(const IntVec &v) {
    for (auto x : v) {
        if (x > 0) return v;
        if (x < 0) return scaled(v, -1);
    }
    return v;
}

Egcd extended_gcd(std::int64_t a, std::int64_t b) {
    std::int64_t r0 = a < 0 ? -a : a, r1 = b < 0 ? -b : b;
    std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    if (r1 == 0) return {r0, r0 == 0 ? 0 : (a < 0 ? -1 : 1), 0};
    while (r1) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1, s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = r1, r1 = r2, s0 = s1, s1 = s2, t0 = t1, t1 = t2;
    }
    return {r0, a < 0 ? -s0 : s0, b < 0 ? -t0 : t0};
}

IntVec bezout_cofactors(const IntVec &v) {
    IntVec u(v.size(), 0);
    std::int64_t g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        Egcd e = extended_gcd(g, v[i]);
        for (std::size_t j = 0; j < i; ++j) u[j] *= e.s;
        u[i] = e.t;
        g = e.g;
    }
    if (g != 1) throw std::invalid_argument("bezout_cofactors: vector is not primitive");
    return u;
}

ColumnReduction column_reduce(const IntMat &A) {
    ColumnReduction cr;
    cr.H = A;
    std::size_t n = A.empty() ? 0 : A[0].size();
    cr.U = identity(n);
    cr.U_inv = identity(n);
    auto &H = cr.H;
    auto col_op = [&](std::size_t c1, std::size_t c2, std::int64_t p11, std::int64_t p12, std::int64_t p21,
                      std::int64_t p22) {
        // new c1 = p11 c1 + p21 c2 ; new c2 = p12 c1 + p22 c2 ; det = -1 or 1
        auto apply_cols = [&](IntMat &M) {
            for (auto &row : M) {
                std::int64_t x = row[c1], y = row[c2];
                row[c1] = p11 * x + p21 * y;
                row[c2] = p12 * x + p22 * y;
            }
        };
        apply_cols(H);
        apply_cols(cr.U);
        // rows of U_inv transform by the inverse 2x2 block
        std::int64_t det = p11 * p22 - p12 * p21;
        std::int64_t q11 = p22 * det, q12 = -p12 * det, q21 = -p21 * det, q22 = p11 * det;
        IntVec r1 = cr.U_inv[c1], r2 = cr.U_inv[c2];
        for (std::size_t k = 0; k < n; ++k) {
            cr.U_inv[c1][k] = q11 * r1[k] + q12 * r2[k];
            cr.U_inv[c2][k] = q21 * r1[k] + q22 * r2[k];
        }
    };
    std::size_t r = 0;
    for (std::size_t i = 0; i < H.size() && r < n; ++i) {
        for (std::size_t j = r + 1; j < n; ++j) {
            std::int64_t a = H[i][r], b = H[i][j];
            if (b == 0) continue;
            Egcd e = extended_gcd(a, b);
            col_op(r, j, e.s, b / e.g, e.t, -a / e.g);
        }
        if (H[i][r] == 0) continue;
        if (H[i][r] < 0) {
            for (auto &row : H) row[r] = -row[r];
            for (auto &row : cr.U) row[r] = -row[r];
            for (auto &x : cr.U_inv[r]) x = -x;
        }
        ++r;
    }
    cr.rank = r;
    return cr;
}

bool is_surjective(const IntMat &A) {
    if (A.empty()) return true;
    ColumnReduction cr = column_reduce(A);
    if (cr.rank != A.size()) return false;
    for (std::size_t i = 0; i < A.size(); ++i)
        if (cr.H[i][i] != 1) return false;
    return true;
}

std::vector<IntVec> kernel_basis(const IntMat &A) {
    std::size_t n = A.empty() ? 0 : A[0].size();
    ColumnReduction cr = column_reduce(A);
    std::vector<IntVec> out;
    for (std::size_t c = cr.rank; c < n; ++c) {
        IntVec v(n);
        for (std::size_t k = 0; k < n; ++k) v[k] = cr.U[k][c];
        out.push_back(v);
    }
    return out;
}

namespace {

struct AssocWithSection {
    IntMat F;  // (n-1) x n
    IntMat K;  // n x (n-1), F K = I
};

// x -> coordinates of x - <u,x> M in the kernel basis of u completed by the column reduction
AssocWithSection associated_with_section(const IntVec &M) {
    if (is_zero(M)) throw std::invalid_argument("associated_morphism: zero monomial");
    if (!is_primitive(M)) throw std::invalid_argument("associated_morphism: monomial is not primitive");
    const std::size_t n = M.size();
    IntVec u = bezout_cofactors(M);
    ColumnReduction cr = column_reduce(IntMat{u});
    AssocWithSection out;
    out.K.assign(n, IntVec(n - 1, 0));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t c = 1; c < n; ++c) out.K[k][c - 1] = cr.U[k][c];
    IntMat P = identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) P[i][j] -= M[i] * u[j];
    IntMat Uinv_tail(cr.U_inv.begin() + 1, cr.U_inv.end());
    out.F = mat_mul(Uinv_tail, P);
    return out;
}

}  // namespace

LatticeMorphism associated_morphism(const IntVec &M) {
    AssocWithSection a = associated_with_section(M);
    return {a.F, MorphismKind::associated, M};
}

LatticeMorphism compose(const LatticeMorphism &second, const LatticeMorphism &first) {
    if (second.cols() != first.rows()) throw std::invalid_argument("compose: shape mismatch");
    return {mat_mul(second.matrix, first.matrix), MorphismKind::adapted, {}};
}

LatticeMorphism recompose(const std::vector<LatticeMorphism> &family) {
    if (family.empty()) throw std::invalid_argument("recompose: empty family");
    LatticeMorphism acc = family.front();
    for (std::size_t i = 1; i < family.size(); ++i) acc = compose(family[i], acc);
    acc.kind = MorphismKind::adapted;
    return acc;
}

bool validate_morphism(const LatticeMorphism &f) {
    if (!is_surjective(f.matrix)) return false;
    if (f.kind == MorphismKind::associated) {
        if (!is_primitive(f.kernel_generator)) return false;
        if (!is_zero(f.apply(f.kernel_generator))) return false;
        if (f.rows() + 1 != f.cols()) return false;
    }
    return true;
}

std::vector<LatticeMorphism> refactor_adapted(const LatticeMorphism &phi, const IntVec &M) {
    if (is_zero(M)) throw std::invalid_argument("refactor_adapted: zero monomial");
    if (!is_zero(phi.apply(M))) throw std::invalid_argument("refactor_adapted: phi does not annihilate M");
    if (!is_surjective(phi.matrix)) throw std::invalid_argument("refactor_adapted: phi is not surjective");
    IntVec Mo = primitive_part(M).first;
    std::vector<LatticeMorphism> family;
    AssocWithSection first = associated_with_section(Mo);
    family.push_back({first.F, MorphismKind::associated, Mo});
    IntMat psi = mat_mul(phi.matrix, first.K);  // phi = psi o F
    for (;;) {
        auto ker = kernel_basis(psi);
        if (ker.empty()) break;
        AssocWithSection step = associated_with_section(ker.front());
        family.push_back({step.F, MorphismKind::associated, ker.front()});
        psi = mat_mul(psi, step.K);
    }
    // psi is now square unimodular; absorb it into the last step
    family.back().matrix = mat_mul(psi, family.back().matrix);
    return family;
}

SpecializationDecomposition decompose_specialization(const IntVec &n) {
    auto [red, alpha] = primitive_part(n);
    if (alpha == 0) throw std::invalid_argument("decompose_specialization: zero specialization");
    return {alpha, red};
}

}  // namespace hecke
