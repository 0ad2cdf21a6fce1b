#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "hecke/datum.hpp"
#include "hecke/schur.hpp"

namespace oracle {

using big = boost::multiprecision::cpp_int;

// integer polynomials, constant term first
std::vector<std::int64_t> poly_mul(const std::vector<std::int64_t> &a, const std::vector<std::int64_t> &b);
// Phi_n by dividing T^n - 1 by Phi_d for the proper divisors d
std::vector<std::int64_t> cyclotomic(std::int64_t n);
// remainder modulo a monic polynomial
std::vector<std::int64_t> reduce_monic(std::vector<std::int64_t> a, const std::vector<std::int64_t> &m);

// Sylvester determinant by exact rational elimination
big sylvester_resultant(const std::vector<std::int64_t> &f, const std::vector<std::int64_t> &g);
// prod over primitive N-th roots of a(zeta), in long double
long double numeric_norm(const hecke::CycInt &a);

// gcd of all r x r minors of an r x c integer matrix
big maximal_minor_gcd(const hecke::IntMat &a);
big det(const hecke::IntMat &a);

// x-form entry expanded after x_{C,j} -> zeta_{e_C}^j X^{n_{C,j}}; returns (val_X, deg_X)
std::pair<hecke::Rational, hecke::Rational> expanded_val_deg(const hecke::GroupDatum &g, const hecke::ParsedXForm &x,
                                                             const hecke::IntVec &n);

}  // namespace oracle
