#pragma once

#include <boost/rational.hpp>

#include "hecke/datum.hpp"
#include "hecke/errors.hpp"

namespace hecke {

using Rational = boost::rational<std::int64_t>;
using RatVec = std::vector<Rational>;

// ---- x-form parsing ----
struct XMonomial {
    RootOfUnity twist;
    RatVec exps;
};
// monomial expressions such as "E(3)^2*z2/z1", "r/x0y0z0", "x0^2/(x1z1)", "1"
XMonomial parse_monomial(const GroupDatum &g, const std::string &expr, const std::vector<Radical> &radicals);
// "Phi2(E(3)^2*z2/z1)" or "Phi1(z0/z1)^2"
SchurFactorX parse_factor(const GroupDatum &g, const std::string &expr, const std::vector<Radical> &radicals);

struct ParsedXForm {
    CycInt coeff;
    RootOfUnity lead_twist;
    RatVec lead;
    std::vector<SchurFactorX> factors;
};
ParsedXForm parse_xform(const GroupDatum &g, const XFormEntry &e);

// ---- normalization ----
SchurElement normalize_x_to_v(const GroupDatum &g, std::size_t char_index, const CycInt &coeff, const RatVec &lead_x,
                              const std::vector<SchurFactorX> &factors, RootOfUnity lead_twist = {});
SchurElement from_vform(const GroupDatum &g, std::size_t char_index, const VFormEntry &e);
SchurElement resolve_entry(const GroupDatum &g, const SchurEntry &e);
// monomials made sign-canonical, equal factors merged, factors sorted
SchurElement canonical_form(SchurElement s);
bool same_schur(const SchurElement &a, const SchurElement &b);  // after canonical_form

// fills g.schur from g.schur_entries; throws ValidationError on unknown characters or bad conversions
void resolve_schur(GroupDatum &g);

// ---- queries ----
std::vector<std::string> validate(const GroupDatum &g, const SchurElement &s);
CycInt value_at_one(const GroupDatum &g, const SchurElement &s);
std::vector<IntVec> essential_monomials(const SchurElement &s, std::int64_t p);

enum class HyperplaneSource { automatic, tables, schur };
// p = 0: all primes dividing |W|
std::vector<IntVec> essential_hyperplanes(const GroupDatum &g, std::int64_t p,
                                          HyperplaneSource src = HyperplaneSource::automatic);
// primes dividing |W| for which the normal is essential, from the chosen source
std::vector<std::int64_t> hyperplane_primes(const GroupDatum &g, const IntVec &normal,
                                            HyperplaneSource src = HyperplaneSource::automatic);

struct SpecializedTerm {
    KCyclotomic psi;
    std::int64_t delta = 0;
    std::int64_t mult = 1;
};

struct SpecializedSchur {
    CycInt psi_coeff;
    std::int64_t y_power = 0;
    std::vector<SpecializedTerm> terms;
};

SpecializedSchur specialize(const GroupDatum &g, const SchurElement &s, const IntVec &n);
std::pair<Rational, Rational> a_and_A(const GroupDatum &g, const SpecializedSchur &sp);
std::vector<std::int64_t> bad_primes(const GroupDatum &g, const IntVec &n);
bool generic_singleton(const GroupDatum &g, const SchurElement &s, std::int64_t p,
                       const std::optional<IntVec> &hyperplane = std::nullopt);

// per-orbit sums of v
std::vector<std::int64_t> orbit_sums(const GroupDatum &g, const IntVec &v);

}  // namespace hecke
