#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hecke {

using BigInt = boost::multiprecision::cpp_int;
using Poly = std::vector<std::int64_t>;  // coefficients, constant term first

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
std::int64_t euler_phi(std::int64_t n);
std::int64_t mod_floor(std::int64_t a, std::int64_t m);
std::vector<std::int64_t> prime_divisors(std::int64_t n);
bool is_prime_power_of(std::int64_t n, std::int64_t p);

// Phi_n over Z; cached, thread-safe.
const Poly &cyclotomic_poly(std::int64_t n);
std::int64_t cyclotomic_value_at_one(std::int64_t n);

// zeta_d^k with 0 <= k < d, gcd(k, d) = 1.
struct RootOfUnity {
    std::int64_t order = 1;
    std::int64_t exp = 0;

    // exp(2 pi i num/den), reduced
    static RootOfUnity from_fraction(std::int64_t num, std::int64_t den);
    static RootOfUnity one() { return {}; }

    RootOfUnity operator*(const RootOfUnity &o) const;
    RootOfUnity inverse() const;
    RootOfUnity pow(std::int64_t e) const;
    bool is_one() const { return order == 1; }
    bool operator==(const RootOfUnity &) const = default;
    auto operator<=>(const RootOfUnity &) const = default;
};

class CycInt {
public:
    CycInt() : CycInt(1) {}
    explicit CycInt(std::int64_t conductor);
    CycInt(std::int64_t conductor, std::vector<std::int64_t> coeffs);  // reduces

    static CycInt integer(std::int64_t v, std::int64_t conductor = 1);
    static CycInt root(const RootOfUnity &r, std::int64_t conductor = 0);  // 0: use r.order

    std::int64_t conductor() const { return n_; }
    const std::vector<std::int64_t> &coeffs() const { return c_; }

    CycInt lift(std::int64_t conductor) const;  // conductor must be a multiple
    // Rewrite in a smaller conductor if the value lies in that subfield.
    std::optional<CycInt> descend(std::int64_t conductor) const;
    CycInt minimal() const;  // smallest conductor representation

    std::optional<std::int64_t> as_integer() const;
    bool is_zero() const;

    CycInt operator+(const CycInt &o) const;
    CycInt operator-(const CycInt &o) const;
    CycInt operator-() const;
    CycInt operator*(const CycInt &o) const;
    CycInt operator*(std::int64_t k) const;
    CycInt pow(std::int64_t e) const;
    // Exact division by a rational integer; nullopt if some coefficient is not divisible.
    std::optional<CycInt> div_exact(std::int64_t k) const;

    // sigma_k : zeta_N -> zeta_N^k, gcd(k, N) = 1
    CycInt galois(std::int64_t k) const;
    std::int64_t trace() const;

    // value equality across conductors
    bool operator==(const CycInt &o) const;
    bool operator!=(const CycInt &o) const { return !(*this == o); }

    std::string str() const;

private:
    std::int64_t n_;
    std::vector<std::int64_t> c_;
};

BigInt norm(const CycInt &a);
BigInt resultant(const std::vector<BigInt> &f, const std::vector<BigInt> &g);

struct PrimeIdealHandle {
    std::int64_t p = 2;
    std::int64_t conductor = 1;
    Poly local_factor;  // monic, coefficients in [0, p)
};

PrimeIdealHandle prime_handle(std::int64_t p, std::int64_t conductor);
// all irreducible factors of Phi_N mod p (distinct), sorted
std::vector<Poly> prime_factors_mod_p(std::int64_t p, std::int64_t conductor);
bool in_prime_ideal(const CycInt &a, const PrimeIdealHandle &h);
// residue of a in Z[zeta_N]/P as a canonical vector over F_p
Poly residue(const CycInt &a, const PrimeIdealHandle &h);

// polynomial helpers over F_p
namespace fp {
Poly trim(Poly a);
Poly reduce(const Poly &a, std::int64_t p);
Poly mod(const Poly &a, const Poly &m, std::int64_t p);
Poly mul(const Poly &a, const Poly &b, std::int64_t p);
Poly gcd(Poly a, Poly b, std::int64_t p);
Poly divide(const Poly &a, const Poly &b, std::int64_t p);
Poly make_monic(const Poly &a, std::int64_t p);
std::vector<Poly> berlekamp(const Poly &f, std::int64_t p);  // f monic squarefree
}  // namespace fp

// Minimal polynomial of zeta_d^k over K = Q(zeta_m).
class KCyclotomic {
public:
    KCyclotomic() = default;
    KCyclotomic(std::int64_t field_conductor, RootOfUnity root);

    std::int64_t field_conductor() const { return m_; }
    const RootOfUnity &root() const { return root_; }  // canonical: least exponent in orbit
    std::int64_t order() const { return root_.order; }
    std::vector<std::int64_t> orbit() const;  // exponents mod d, sorted
    std::int64_t degree() const { return static_cast<std::int64_t>(orbit().size()); }
    CycInt value_at_one() const;  // conductor m
    // prod_{tau in O} (-tau), the unit picked up when the argument is inverted
    CycInt inversion_unit() const;
    KCyclotomic inverse_roots() const;
    // coefficients of Psi(T) in K, constant term first
    std::vector<CycInt> coefficients() const;

    bool operator==(const KCyclotomic &) const = default;
    auto operator<=>(const KCyclotomic &) const = default;
    std::string str() const;

private:
    std::int64_t m_ = 1;
    RootOfUnity root_{2, 1};
};

std::int64_t kcyc_degree(std::int64_t m, std::int64_t d);
bool is_p_essential_factor(const KCyclotomic &psi, std::int64_t p);
bool is_p_essential_by_norm(const KCyclotomic &psi, std::int64_t p);
// all distinct K-cyclotomic factors of Phi_d
std::vector<KCyclotomic> k_factors(std::int64_t m, std::int64_t d);

}  // namespace hecke
