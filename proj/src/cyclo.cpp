#include "hecke/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace hecke {

using boost::multiprecision::cpp_rational;

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
    std::vector<std::int64_t> out;
    if (n < 0) n = -n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::int64_t euler_phi(std::int64_t n) {
    std::int64_t r = n;
    for (auto p : prime_divisors(n)) r = r / p * (p - 1);
    return r;
}

bool is_prime_power_of(std::int64_t n, std::int64_t p) {
    if (n < p) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("CycInt coefficient overflow");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("CycInt coefficient overflow");
    return r;
}

// a mod m over Z, m monic
void reduce_monic(std::vector<std::int64_t> &a, const Poly &m) {
    const std::size_t dm = m.size() - 1;
    for (std::size_t i = a.size(); i-- > dm;) {
        std::int64_t q = a[i];
        if (q == 0) continue;
        for (std::size_t j = 0; j <= dm; ++j)
            a[i - dm + j] = checked_add(a[i - dm + j], -checked_mul(q, m[j]));
    }
    a.resize(dm, 0);
}

}  // namespace

namespace {

// exact quotient of a by the monic b over Z
Poly div_monic_exact(Poly a, const Poly &b) {
    Poly q(a.size() - b.size() + 1, 0);
    for (std::size_t i = a.size(); i-- >= b.size();) {
        std::int64_t c = a[i];
        q[i + 1 - b.size()] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[i + 1 - b.size() + j] -= c * b[j];
        if (i + 1 == b.size()) break;
    }
    return q;
}

}  // namespace

const Poly &cyclotomic_poly(std::int64_t n) {
    static std::recursive_mutex mu;
    static std::map<std::int64_t, Poly> cache;
    std::lock_guard<std::recursive_mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    if (n < 1) throw std::invalid_argument("cyclotomic_poly: n must be positive");
    Poly num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (std::int64_t d = 1; d < n; ++d)
        if (n % d == 0) num = div_monic_exact(num, cyclotomic_poly(d));
    return cache.emplace(n, num).first->second;
}

std::int64_t cyclotomic_value_at_one(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("cyclotomic_value_at_one: n >= 2 required");
    auto ps = prime_divisors(n);
    return ps.size() == 1 ? ps[0] : 1;
}

// ---------------------------------------------------------------- RootOfUnity

RootOfUnity RootOfUnity::from_fraction(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw std::invalid_argument("RootOfUnity: positive denominator required");
    num = mod_floor(num, den);
    std::int64_t g = std::gcd(num, den);
    if (num == 0) return {};
    return {den / g, num / g};
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity &o) const {
    std::int64_t L = lcm64(order, o.order);
    return from_fraction(exp * (L / order) + o.exp * (L / o.order), L);
}

RootOfUnity RootOfUnity::inverse() const { return from_fraction(-exp, order); }

RootOfUnity RootOfUnity::pow(std::int64_t e) const {
    return from_fraction(mod_floor(exp * mod_floor(e, order), order), order);
}

// -------------------------------------------------------------------- CycInt

CycInt::CycInt(std::int64_t conductor) : n_(conductor) {
    if (conductor < 1) throw std::invalid_argument("CycInt: conductor must be positive");
    c_.assign(euler_phi(conductor), 0);
}

CycInt::CycInt(std::int64_t conductor, std::vector<std::int64_t> coeffs) : n_(conductor) {
    if (conductor < 1) throw std::invalid_argument("CycInt: conductor must be positive");
    const Poly &phi = cyclotomic_poly(conductor);
    if (coeffs.size() < phi.size() - 1) coeffs.resize(phi.size() - 1, 0);
    reduce_monic(coeffs, phi);
    c_ = std::move(coeffs);
}

CycInt CycInt::integer(std::int64_t v, std::int64_t conductor) {
    CycInt r(conductor);
    r.c_[0] = v;
    return r;
}

CycInt CycInt::root(const RootOfUnity &r, std::int64_t conductor) {
    if (conductor == 0) conductor = r.order;
    if (conductor % r.order) throw std::invalid_argument("CycInt::root: order must divide conductor");
    std::vector<std::int64_t> c(r.exp * (conductor / r.order) + 1, 0);
    c.back() = 1;
    return CycInt(conductor, std::move(c));
}

CycInt CycInt::lift(std::int64_t conductor) const {
    if (conductor == n_) return *this;
    if (conductor % n_) throw std::invalid_argument("CycInt::lift: target must be a multiple");
    std::int64_t s = conductor / n_;
    std::vector<std::int64_t> c(c_.empty() ? 1 : (c_.size() - 1) * s + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) c[i * s] = c_[i];
    return CycInt(conductor, std::move(c));
}

std::optional<CycInt> CycInt::descend(std::int64_t conductor) const {
    std::int64_t L = lcm64(conductor, n_);
    CycInt x = lift(L);
    if (L == conductor) return x;
    // solve x = sum_i c_i zeta_conductor^i over Q; columns are the lifted basis vectors
    const std::size_t rows = x.c_.size();
    const std::size_t cols = static_cast<std::size_t>(euler_phi(conductor));
    std::vector<std::vector<cpp_rational>> A(rows, std::vector<cpp_rational>(cols + 1));
    for (std::size_t j = 0; j < cols; ++j) {
        std::vector<std::int64_t> e(j + 1, 0);
        e[j] = 1;
        CycInt b = CycInt(conductor, e).lift(L);
        for (std::size_t i = 0; i < rows; ++i) A[i][j] = b.c_[i];
    }
    for (std::size_t i = 0; i < rows; ++i) A[i][cols] = x.c_[i];
    std::size_t r = 0;
    std::vector<std::size_t> pivcol;
    for (std::size_t j = 0; j < cols && r < rows; ++j) {
        std::size_t piv = r;
        while (piv < rows && A[piv][j] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(A[piv], A[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][j] == 0) continue;
            cpp_rational f = A[i][j] / A[r][j];
            for (std::size_t k = j; k <= cols; ++k) A[i][k] -= f * A[r][k];
        }
        pivcol.push_back(j);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (A[i][cols] != 0) return std::nullopt;
    std::vector<std::int64_t> out(cols, 0);
    for (std::size_t i = 0; i < r; ++i) {
        cpp_rational v = A[i][cols] / A[i][pivcol[i]];
        if (denominator(v) != 1) return std::nullopt;
        out[pivcol[i]] = static_cast<std::int64_t>(numerator(v));
    }
    CycInt res(conductor, out);
    if (res.lift(L) != x) return std::nullopt;
    return res;
}

CycInt CycInt::minimal() const {
    for (std::int64_t d = 1; d <= n_; ++d) {
        if (n_ % d) continue;
        if (auto r = descend(d)) return *r;
    }
    return *this;
}

std::optional<std::int64_t> CycInt::as_integer() const {
    auto r = descend(1);
    if (!r) return std::nullopt;
    return r->c_[0];
}

bool CycInt::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](std::int64_t v) { return v == 0; });
}

CycInt CycInt::operator+(const CycInt &o) const {
    std::int64_t L = lcm64(n_, o.n_);
    CycInt a = lift(L), b = o.lift(L);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] = checked_add(a.c_[i], b.c_[i]);
    return a;
}

CycInt CycInt::operator-() const {
    CycInt r = *this;
    for (auto &v : r.c_) v = -v;
    return r;
}

CycInt CycInt::operator-(const CycInt &o) const { return *this + (-o); }

CycInt CycInt::operator*(const CycInt &o) const {
    std::int64_t L = lcm64(n_, o.n_);
    CycInt a = lift(L), b = o.lift(L);
    std::vector<std::int64_t> c(a.c_.size() + b.c_.size(), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (!a.c_[i]) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] = checked_add(c[i + j], checked_mul(a.c_[i], b.c_[j]));
    }
    return CycInt(L, std::move(c));
}

CycInt CycInt::operator*(std::int64_t k) const {
    CycInt r = *this;
    for (auto &v : r.c_) v = checked_mul(v, k);
    return r;
}

CycInt CycInt::pow(std::int64_t e) const {
    if (e < 0) throw std::invalid_argument("CycInt::pow: negative exponent");
    CycInt result = integer(1, n_), base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

std::optional<CycInt> CycInt::div_exact(std::int64_t k) const {
    if (k == 0) return std::nullopt;
    CycInt r = *this;
    for (auto &v : r.c_) {
        if (v % k) return std::nullopt;
        v /= k;
    }
    return r;
}

CycInt CycInt::galois(std::int64_t k) const {
    k = mod_floor(k, n_);
    if (std::gcd(k, n_) != 1) throw std::invalid_argument("CycInt::galois: k must be a unit mod N");
    std::vector<std::int64_t> c(c_.empty() ? 1 : (c_.size() - 1) * k + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        std::size_t e = (i * k) % n_;
        if (e >= c.size()) c.resize(e + 1, 0);
        c[e] += c_[i];
    }
    return CycInt(n_, std::move(c));
}

std::int64_t CycInt::trace() const {
    std::int64_t t = 0;
    // Tr(zeta_N^i) is the Ramanujan sum c_N(i) = mu(N/g) phi(N)/phi(N/g), g = gcd(i, N)
    auto mobius = [](std::int64_t n) -> std::int64_t {
        std::int64_t r = 1;
        for (std::int64_t p = 2; p * p <= n; ++p) {
            if (n % p) continue;
            n /= p;
            if (n % p == 0) return 0;
            r = -r;
        }
        return n > 1 ? -r : r;
    };
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        std::int64_t g = std::gcd<std::int64_t>(static_cast<std::int64_t>(i), n_);
        std::int64_t q = n_ / g;
        t += c_[i] * mobius(q) * (euler_phi(n_) / euler_phi(q));
    }
    return t;
}

bool CycInt::operator==(const CycInt &o) const {
    std::int64_t L = lcm64(n_, o.n_);
    return lift(L).c_ == o.lift(L).c_;
}

std::string CycInt::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        std::int64_t v = c_[i];
        if (!v) continue;
        if (!first) os << (v > 0 ? "+" : "-");
        else if (v < 0) os << "-";
        std::int64_t a = v < 0 ? -v : v;
        if (i == 0) os << a;
        else {
            if (a != 1) os << a << "*";
            os << "E(" << n_ << ")";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

// ----------------------------------------------------------------------- norm

BigInt resultant(const std::vector<BigInt> &f, const std::vector<BigInt> &g) {
    // Sylvester matrix determinant by fraction-free (Bareiss) elimination
    int m = static_cast<int>(f.size()) - 1, n = static_cast<int>(g.size()) - 1;
    if (m < 0 || n < 0) return 0;
    if (m == 0 && n == 0) return 1;
    int s = m + n;
    if (s == 0) return 1;
    std::vector<std::vector<BigInt>> M(s, std::vector<BigInt>(s, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) M[i][i + j] = f[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) M[n + i][i + j] = g[n - j];
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < s - 1; ++k) {
        if (M[k][k] == 0) {
            int r = k + 1;
            while (r < s && M[r][k] == 0) ++r;
            if (r == s) return 0;
            std::swap(M[k], M[r]);
            sign = -sign;
        }
        for (int i = k + 1; i < s; ++i) {
            for (int j = k + 1; j < s; ++j) M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
            M[i][k] = 0;
        }
        prev = M[k][k];
    }
    return sign * M[s - 1][s - 1];
}

BigInt norm(const CycInt &a) {
    const Poly &phi = cyclotomic_poly(a.conductor());
    std::vector<BigInt> f(phi.begin(), phi.end());
    std::vector<BigInt> g(a.coeffs().begin(), a.coeffs().end());
    while (!g.empty() && g.back() == 0) g.pop_back();
    if (g.empty()) return 0;
    if (g.size() == 1) return boost::multiprecision::pow(g[0], static_cast<unsigned>(f.size() - 1));
    // Res(Phi, a) = prod a(zeta) over the roots of the monic Phi
    return resultant(f, g);
}

// ------------------------------------------------------------ F_p polynomials

namespace fp {

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly reduce(const Poly &a, std::int64_t p) {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_floor(a[i], p);
    return trim(r);
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    std::int64_t r0 = mod_floor(a, p), r1 = p, s0 = 1, s1 = 0;
    while (r1) {
        std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    }
    if (r0 != 1) throw std::domain_error("inv_mod: not invertible");
    return mod_floor(s0, p);
}

Poly mod(const Poly &a, const Poly &m, std::int64_t p) {
    Poly r = reduce(a, p);
    Poly mm = trim(m);
    if (mm.empty()) throw std::domain_error("fp::mod by zero");
    std::int64_t li = inv_mod(mm.back(), p);
    while (r.size() >= mm.size()) {
        std::int64_t q = r.back() * li % p;
        std::size_t sh = r.size() - mm.size();
        for (std::size_t j = 0; j < mm.size(); ++j) r[sh + j] = mod_floor(r[sh + j] - q * mm[j], p);
        r = trim(r);
    }
    return r;
}

Poly divide(const Poly &a, const Poly &b, std::int64_t p) {
    Poly r = reduce(a, p), bb = trim(b);
    if (r.size() < bb.size()) return {};
    Poly q(r.size() - bb.size() + 1, 0);
    std::int64_t li = inv_mod(bb.back(), p);
    while (r.size() >= bb.size() && !r.empty()) {
        std::int64_t c = r.back() * li % p;
        std::size_t sh = r.size() - bb.size();
        q[sh] = c;
        for (std::size_t j = 0; j < bb.size(); ++j) r[sh + j] = mod_floor(r[sh + j] - c * bb[j], p);
        r = trim(r);
    }
    return trim(q);
}

Poly mul(const Poly &a, const Poly &b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return reduce(c, p);
}

Poly make_monic(const Poly &a, std::int64_t p) {
    Poly r = reduce(a, p);
    if (r.empty()) return r;
    std::int64_t li = inv_mod(r.back(), p);
    for (auto &v : r) v = v * li % p;
    return r;
}

Poly gcd(Poly a, Poly b, std::int64_t p) {
    a = reduce(a, p);
    b = reduce(b, p);
    while (!b.empty()) {
        Poly r = mod(a, b, p);
        a = b;
        b = r;
    }
    return make_monic(a, p);
}

namespace {

// basis of the null space of a square matrix over F_p (row vectors v with v*A = 0)
std::vector<Poly> left_null_space(std::vector<Poly> A, std::int64_t p) {
    const std::size_t n = A.size();
    // solve v A = 0  <=>  A^T v^T = 0
    std::vector<Poly> T(n, Poly(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) T[j][i] = A[i][j];
    std::vector<int> pivot_of_col(n, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < n; ++c) {
        std::size_t piv = r;
        while (piv < n && T[piv][c] == 0) ++piv;
        if (piv == n) continue;
        std::swap(T[piv], T[r]);
        std::int64_t li = inv_mod(T[r][c], p);
        for (auto &v : T[r]) v = v * li % p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || T[i][c] == 0) continue;
            std::int64_t f = T[i][c];
            for (std::size_t k = 0; k < n; ++k) T[i][k] = mod_floor(T[i][k] - f * T[r][k], p);
        }
        pivot_of_col[c] = static_cast<int>(r);
        ++r;
    }
    std::vector<Poly> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (pivot_of_col[free] != -1) continue;
        Poly v(n, 0);
        v[free] = 1;
        for (std::size_t c = 0; c < n; ++c)
            if (pivot_of_col[c] != -1) v[c] = mod_floor(-T[pivot_of_col[c]][free], p);
        basis.push_back(v);
    }
    return basis;
}

}  // namespace

std::vector<Poly> berlekamp(const Poly &f0, std::int64_t p) {
    Poly f = make_monic(f0, p);
    const std::size_t n = f.size() - 1;
    if (n <= 1) return {f};
    // Q[i] = x^(p i) mod f
    std::vector<Poly> Q(n, Poly(n, 0));
    Poly xp = mod(Poly{0, 1}, f, p);
    {
        // x^p by repeated squaring
        Poly base = xp, acc{1};
        std::int64_t e = p;
        while (e) {
            if (e & 1) acc = mod(mul(acc, base, p), f, p);
            e >>= 1;
            if (e) base = mod(mul(base, base, p), f, p);
        }
        xp = acc;
    }
    Poly cur{1};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < cur.size(); ++j) Q[i][j] = cur[j];
        Q[i][i] = mod_floor(Q[i][i] - 1, p);
        cur = mod(mul(cur, xp, p), f, p);
    }
    auto basis = left_null_space(Q, p);
    std::vector<Poly> factors{f};
    if (basis.size() == 1) return factors;
    for (std::size_t b = 0; b < basis.size() && factors.size() < basis.size(); ++b) {
        Poly v = trim(basis[b]);
        if (v.size() <= 1) continue;
        std::vector<Poly> next;
        for (const auto &g : factors) {
            // gcd(g, v - s) over all s splits g completely with respect to v
            for (std::int64_t s = 0; s < p; ++s) {
                Poly vs = v;
                vs[0] = mod_floor(vs[0] - s, p);
                Poly h = gcd(g, vs, p);
                if (h.size() > 1) next.push_back(h);
            }
        }
        factors = next;
    }
    for (auto &g : factors) g = make_monic(g, p);
    std::sort(factors.begin(), factors.end());
    return factors;
}

}  // namespace fp

std::vector<Poly> prime_factors_mod_p(std::int64_t p, std::int64_t conductor) {
    // Phi_N = Phi_{N'}^{phi(p^k)} mod p with N' the p-free part
    std::int64_t Np = conductor;
    while (Np % p == 0) Np /= p;
    Poly f = fp::reduce(cyclotomic_poly(Np), p);
    auto fs = fp::berlekamp(f, p);
    auto lex = [](const Poly &a, const Poly &b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    };
    std::sort(fs.begin(), fs.end(), lex);
    return fs;
}

PrimeIdealHandle prime_handle(std::int64_t p, std::int64_t conductor) {
    auto fs = prime_factors_mod_p(p, conductor);
    return {p, conductor, fs.front()};
}

Poly residue(const CycInt &a, const PrimeIdealHandle &h) {
    CycInt x = a.conductor() == h.conductor ? a : a.lift(lcm64(a.conductor(), h.conductor));
    if (x.conductor() != h.conductor) throw std::invalid_argument("residue: conductor mismatch");
    Poly r = fp::mod(x.coeffs(), h.local_factor, h.p);
    r.resize(h.local_factor.size() - 1, 0);
    return r;
}

bool in_prime_ideal(const CycInt &a, const PrimeIdealHandle &h) {
    Poly r = residue(a, h);
    return std::all_of(r.begin(), r.end(), [](std::int64_t v) { return v == 0; });
}

// ---------------------------------------------------------------- KCyclotomic

namespace {

std::vector<std::int64_t> orbit_of(std::int64_t m, const RootOfUnity &r) {
    std::int64_t d = r.order;
    std::int64_t L = lcm64(m, d);
    std::vector<std::int64_t> out;
    for (std::int64_t t = 1; t <= L; ++t) {
        if (std::gcd(t, L) != 1 || (t - 1) % m != 0) continue;
        out.push_back(mod_floor(r.exp * t, d));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

KCyclotomic::KCyclotomic(std::int64_t field_conductor, RootOfUnity root) : m_(field_conductor) {
    if (root.order < 2) throw std::invalid_argument("KCyclotomic: root order must be at least 2");
    auto orb = orbit_of(m_, root);
    root_ = {root.order, orb.front()};
}

std::vector<std::int64_t> KCyclotomic::orbit() const { return orbit_of(m_, root_); }

CycInt KCyclotomic::value_at_one() const {
    std::int64_t L = lcm64(m_, root_.order);
    CycInt acc = CycInt::integer(1, L);
    for (auto s : orbit()) acc = acc * (CycInt::integer(1, L) - CycInt::root({root_.order, s}, L));
    auto r = acc.descend(m_);
    if (!r) throw std::logic_error("KCyclotomic::value_at_one: value not in K");
    return *r;
}

CycInt KCyclotomic::inversion_unit() const {
    std::int64_t L = lcm64(m_, root_.order);
    CycInt acc = CycInt::integer(1, L);
    for (auto s : orbit()) acc = acc * (-CycInt::root({root_.order, s}, L));
    auto r = acc.descend(m_);
    if (!r) throw std::logic_error("KCyclotomic::inversion_unit: value not in K");
    return *r;
}

KCyclotomic KCyclotomic::inverse_roots() const { return KCyclotomic(m_, root_.inverse()); }

std::vector<CycInt> KCyclotomic::coefficients() const {
    std::int64_t L = lcm64(m_, root_.order);
    std::vector<CycInt> poly{CycInt::integer(1, L)};
    for (auto s : orbit()) {
        CycInt tau = CycInt::root({root_.order, s}, L);
        std::vector<CycInt> next(poly.size() + 1, CycInt(L));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = next[i + 1] + poly[i];
            next[i] = next[i] - poly[i] * tau;
        }
        poly = next;
    }
    for (auto &c : poly) {
        auto r = c.descend(m_);
        if (!r) throw std::logic_error("KCyclotomic::coefficients: coefficient not in K");
        c = *r;
    }
    return poly;
}

std::string KCyclotomic::str() const {
    std::ostringstream os;
    os << "Psi[K=" << m_ << "](" << root_.order << "," << root_.exp << ")";
    return os.str();
}

std::int64_t kcyc_degree(std::int64_t m, std::int64_t d) {
    return euler_phi(lcm64(m, d)) / euler_phi(m);
}

bool is_p_essential_factor(const KCyclotomic &psi, std::int64_t p) {
    return is_prime_power_of(psi.order(), p);
}

bool is_p_essential_by_norm(const KCyclotomic &psi, std::int64_t p) {
    BigInt n = norm(psi.value_at_one());
    if (n < 0) n = -n;
    return n % p == 0;
}

std::vector<KCyclotomic> k_factors(std::int64_t m, std::int64_t d) {
    std::vector<KCyclotomic> out;
    for (std::int64_t k = 0; k < d; ++k) {
        if (std::gcd(k, d) != 1) continue;
        KCyclotomic f(m, {d, k});
        if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    }
    return out;
}

}  // namespace hecke
