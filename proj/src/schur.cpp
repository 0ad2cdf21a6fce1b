#include <algorithm>
#include <regex>
#include <set>

#include "hecke/schur.hpp"

namespace hecke {

// ------------------------------------------------------------ CharLabel / GroupDatum

std::string CharLabel::str() const {
    return "phi{" + std::to_string(degree) + "," + std::to_string(b) + "}" + std::string(marks, '\'');
}

std::optional<CharLabel> CharLabel::parse(const std::string &s) {
    static const std::regex re(R"(^phi\{(\d+),(\d+)\}('{0,3})$)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) return std::nullopt;
    CharLabel c{std::stoll(m[1]), std::stoll(m[2]), static_cast<int>(m[3].length())};
    if (c.degree < 1) return std::nullopt;
    return c;
}

std::size_t GroupDatum::slot_count() const {
    std::size_t n = 0;
    for (auto &o : orbits) n += static_cast<std::size_t>(o.order);
    return n;
}

std::pair<std::size_t, std::int64_t> GroupDatum::slot(std::size_t s) const {
    for (std::size_t c = 0; c < orbits.size(); ++c) {
        if (s < static_cast<std::size_t>(orbits[c].order)) return {c, static_cast<std::int64_t>(s)};
        s -= static_cast<std::size_t>(orbits[c].order);
    }
    throw std::out_of_range("slot index out of range");
}

std::size_t GroupDatum::slot_offset(std::size_t orbit) const {
    std::size_t off = 0;
    for (std::size_t c = 0; c < orbit; ++c) off += static_cast<std::size_t>(orbits[c].order);
    return off;
}

std::optional<std::size_t> GroupDatum::slot_by_param(const std::string &name) const {
    for (std::size_t c = 0; c < orbits.size(); ++c) {
        const auto &p = orbits[c].param;
        if (name.size() <= p.size() || name.compare(0, p.size(), p) != 0) continue;
        std::string idx = name.substr(p.size());
        if (!std::all_of(idx.begin(), idx.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) continue;
        std::int64_t j = std::stoll(idx);
        if (j < orbits[c].order) return slot_offset(c) + static_cast<std::size_t>(j);
    }
    return std::nullopt;
}

std::string GroupDatum::slot_display(std::size_t s) const {
    auto [c, j] = slot(s);
    return orbits[c].letter + "_" + std::to_string(j);
}

std::optional<std::size_t> GroupDatum::char_index(const std::string &label) const {
    auto parsed = CharLabel::parse(label);
    if (!parsed) return std::nullopt;
    for (std::size_t i = 0; i < characters.size(); ++i)
        if (characters[i] == *parsed) return i;
    return std::nullopt;
}

bool GroupDatum::has_full_schur() const {
    if (schur.size() != characters.size() || characters.empty()) return false;
    return std::all_of(schur.begin(), schur.end(), [](const auto &s) { return s.has_value(); });
}

bool GroupDatum::has_any_schur() const {
    return std::any_of(schur.begin(), schur.end(), [](const auto &s) { return s.has_value(); });
}

const HyperplaneTable *GroupDatum::no_hyperplane_table() const {
    for (auto &t : hyperplane_tables)
        if (!t.normal) return &t;
    return nullptr;
}

// ------------------------------------------------------------------ queries

std::vector<std::int64_t> orbit_sums(const GroupDatum &g, const IntVec &v) {
    std::vector<std::int64_t> sums(g.orbits.size(), 0);
    for (std::size_t s = 0; s < v.size(); ++s) sums[g.slot(s).first] += v[s];
    return sums;
}

namespace {

bool orbit_sums_zero(const GroupDatum &g, const IntVec &v) {
    auto sums = orbit_sums(g, v);
    return std::all_of(sums.begin(), sums.end(), [](std::int64_t x) { return x == 0; });
}

}  // namespace

CycInt value_at_one(const GroupDatum &g, const SchurElement &s) {
    CycInt acc = s.xi.lift(lcm64(s.xi.conductor(), g.field_conductor));
    for (const auto &f : s.factors) acc = acc * f.psi.value_at_one().pow(f.mult);
    return acc;
}

std::vector<std::string> validate(const GroupDatum &g, const SchurElement &s) {
    std::vector<std::string> out;
    const std::string who =
        s.char_index < g.characters.size() ? g.characters[s.char_index].str() : "character #" + std::to_string(s.char_index);
    if (s.lead.size() != g.slot_count()) {
        out.push_back(who + ": leading monomial has length " + std::to_string(s.lead.size()));
        return out;
    }
    if (!orbit_sums_zero(g, s.lead)) out.push_back(who + ": leading monomial has a nonzero orbit sum");
    if (!s.xi.descend(g.field_conductor)) out.push_back(who + ": coefficient does not lie in K");
    for (std::size_t i = 0; i < s.factors.size(); ++i) {
        const auto &f = s.factors[i];
        std::string tag = who + ": factor " + std::to_string(i + 1);
        if (f.monomial.size() != g.slot_count()) {
            out.push_back(tag + " has a monomial of wrong length");
            continue;
        }
        if (is_zero(f.monomial))
            out.push_back(tag + " has the trivial monomial");
        else if (!is_primitive(f.monomial))
            out.push_back(tag + " has a non-primitive monomial");
        if (!orbit_sums_zero(g, f.monomial)) out.push_back(tag + " has a monomial with a nonzero orbit sum");
        if (f.psi.order() < 2) out.push_back(tag + " has root order 1, which never appears");
        if (f.psi.field_conductor() != g.field_conductor) out.push_back(tag + " lives over the wrong field");
        if (f.mult < 1) out.push_back(tag + " has nonpositive multiplicity");
    }
    if (!out.empty()) return out;
    std::int64_t d = g.characters.at(s.char_index).degree;
    if (g.group_order % d != 0) {
        out.push_back(who + ": degree does not divide the group order");
        return out;
    }
    CycInt v = value_at_one(g, s);
    if (!(v == CycInt::integer(g.group_order / d)))
        out.push_back(who + ": value at v=1 is " + v.minimal().str() + ", expected " + std::to_string(g.group_order / d));
    return out;
}

std::vector<IntVec> essential_monomials(const SchurElement &s, std::int64_t p) {
    std::set<IntVec> out;
    for (const auto &f : s.factors)
        if (is_p_essential_factor(f.psi, p)) out.insert(sign_canonical(primitive_part(f.monomial).first));
    return {out.begin(), out.end()};
}

namespace {

void check_prime(const GroupDatum &g, std::int64_t p) {
    if (p < 0 || (p > 0 && g.group_order % p != 0)) throw BadPrimeError();
    if (p > 0 && prime_divisors(p).size() != 1) throw BadPrimeError();
}

bool use_schur(const GroupDatum &g, HyperplaneSource src) {
    switch (src) {
    case HyperplaneSource::schur:
        if (!g.has_full_schur()) throw MissingPayloadError(g.name + ": no full Schur payload");
        return true;
    case HyperplaneSource::tables:
        if (g.hyperplane_tables.empty()) throw MissingPayloadError(g.name + ": no hyperplane tables");
        return false;
    case HyperplaneSource::automatic:
        break;
    }
    if (g.has_full_schur()) return true;
    if (g.hyperplane_tables.empty()) throw MissingPayloadError(g.name + ": neither Schur payload nor tables");
    return false;
}

}  // namespace

std::vector<IntVec> essential_hyperplanes(const GroupDatum &g, std::int64_t p, HyperplaneSource src) {
    check_prime(g, p);
    std::vector<std::int64_t> primes = p ? std::vector<std::int64_t>{p} : prime_divisors(g.group_order);
    std::set<IntVec> out;
    if (use_schur(g, src)) {
        for (const auto &s : g.schur)
            for (auto q : primes)
                for (auto &v : essential_monomials(*s, q)) out.insert(v);
    } else {
        for (const auto &t : g.hyperplane_tables) {
            if (!t.normal) continue;
            for (auto q : primes)
                if (std::find(t.primes.begin(), t.primes.end(), q) != t.primes.end())
                    out.insert(sign_canonical(*t.normal));
        }
    }
    return {out.begin(), out.end()};
}

std::vector<std::int64_t> hyperplane_primes(const GroupDatum &g, const IntVec &normal, HyperplaneSource src) {
    IntVec h = sign_canonical(primitive_part(normal).first);
    std::vector<std::int64_t> out;
    for (auto p : prime_divisors(g.group_order)) {
        auto hs = essential_hyperplanes(g, p, src);
        if (std::find(hs.begin(), hs.end(), h) != hs.end()) out.push_back(p);
    }
    return out;
}

SpecializedSchur specialize(const GroupDatum &g, const SchurElement &s, const IntVec &n) {
    if (n.size() != g.slot_count()) throw ArityError("specialization has " + std::to_string(n.size()) + " entries, expected " +
                                                     std::to_string(g.slot_count()));
    SpecializedSchur sp;
    sp.psi_coeff = s.xi;
    sp.y_power = dot(s.lead, n);
    for (const auto &f : s.factors) {
        std::int64_t delta = dot(f.monomial, n);
        if (delta == 0)
            sp.psi_coeff = sp.psi_coeff * f.psi.value_at_one().pow(f.mult);
        else
            sp.terms.push_back({f.psi, delta, f.mult});
    }
    if (auto d = sp.psi_coeff.descend(g.field_conductor)) sp.psi_coeff = *d;
    return sp;
}

std::pair<Rational, Rational> a_and_A(const GroupDatum &g, const SpecializedSchur &sp) {
    std::int64_t val = sp.y_power, deg = sp.y_power;
    for (const auto &t : sp.terms) {
        std::int64_t k = t.mult * t.psi.degree() * t.delta;
        if (t.delta < 0) val += k;
        if (t.delta > 0) deg += k;
    }
    return {Rational(val, g.mu_order), Rational(deg, g.mu_order)};
}

std::vector<std::int64_t> bad_primes(const GroupDatum &g, const IntVec &n) {
    std::vector<std::int64_t> primes = prime_divisors(g.group_order);
    std::vector<bool> bad(primes.size(), false);
    for (const auto &s : g.schur) {
        if (!s) continue;
        BigInt nm = norm(specialize(g, *s, n).psi_coeff);
        for (std::size_t i = 0; i < primes.size(); ++i)
            if (nm % primes[i] == 0) bad[i] = true;
    }
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < primes.size(); ++i)
        if (bad[i]) out.push_back(primes[i]);
    return out;
}

bool generic_singleton(const GroupDatum &, const SchurElement &s, std::int64_t p, const std::optional<IntVec> &hyperplane) {
    if (norm(s.xi) % p == 0) return false;
    if (!hyperplane) return true;
    IntVec h = sign_canonical(primitive_part(*hyperplane).first);
    auto ess = essential_monomials(s, p);
    return std::find(ess.begin(), ess.end(), h) == ess.end();
}

}  // namespace hecke
