#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <regex>
#include <set>

#include "hecke/schur.hpp"

namespace hecke {

namespace {

[[noreturn]] void parse_fail(const std::string &expr, const std::string &why) {
    throw ValidationError("cannot parse '" + expr + "': " + why);
}

RootOfUnity root_from_rational(const Rational &r) { return RootOfUnity::from_fraction(r.numerator(), r.denominator()); }

class MonomialParser {
public:
    MonomialParser(const GroupDatum &g, const std::string &expr, const std::vector<Radical> &radicals, int depth = 0)
        : g_(g), src_(expr), radicals_(radicals), depth_(depth) {
        for (char c : expr)
            if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
        if (depth_ > 4) parse_fail(expr, "radicals nested too deeply");
    }

    XMonomial run() {
        XMonomial out{RootOfUnity::one(), RatVec(g_.slot_count(), Rational(0))};
        prefix(out);
        product(out, 1);
        if (peek() == '/') {
            ++pos_;
            product(out, -1);
        }
        if (pos_ != s_.size()) parse_fail(src_, "trailing input at position " + std::to_string(pos_));
        return out;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    bool starts(const std::string &t) const { return s_.compare(pos_, t.size(), t) == 0; }

    std::int64_t integer() {
        bool neg = false;
        if (peek() == '-') neg = true, ++pos_;
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) parse_fail(src_, "integer expected at position " + std::to_string(start));
        std::int64_t v = std::stoll(s_.substr(start, pos_ - start));
        return neg ? -v : v;
    }

    void prefix(XMonomial &out) {
        bool any = false;
        for (;;) {
            if (peek() == '-') {
                ++pos_;
                out.twist = out.twist * RootOfUnity::from_fraction(1, 2);
                any = true;
            } else if (starts("E(")) {
                pos_ += 2;
                std::int64_t n = integer();
                if (peek() != ')') parse_fail(src_, "')' expected after E(n");
                ++pos_;
                std::int64_t k = 1;
                if (peek() == '^') ++pos_, k = integer();
                if (n <= 0) parse_fail(src_, "E(n) needs n > 0");
                out.twist = out.twist * RootOfUnity::from_fraction(k, n);
                any = true;
            } else {
                break;
            }
            if (peek() == '*') ++pos_;
        }
        (void)any;
    }

    void product(XMonomial &out, std::int64_t sign) {
        if (peek() == '1' && (pos_ + 1 == s_.size() || s_[pos_ + 1] == '/' || s_[pos_ + 1] == ')')) {
            ++pos_;
            return;
        }
        bool paren = peek() == '(';
        if (paren) ++pos_;
        bool any = false;
        while (pos_ < s_.size() && peek() != '/' && peek() != ')') {
            if (peek() == '*') {
                ++pos_;
                continue;
            }
            atom(out, sign);
            any = true;
        }
        if (!any) parse_fail(src_, "empty product");
        if (paren) {
            if (peek() != ')') parse_fail(src_, "unbalanced parenthesis");
            ++pos_;
        }
    }

    void atom(XMonomial &out, std::int64_t sign) {
        for (const auto &rad : radicals_) {
            if (!starts(rad.name)) continue;
            pos_ += rad.name.size();
            std::int64_t k = exponent() * sign;
            XMonomial inner = MonomialParser(g_, rad.radicand, radicals_, depth_ + 1).run();
            for (std::size_t s = 0; s < out.exps.size(); ++s) out.exps[s] += inner.exps[s] * k / rad.root;
            // principal q-th root of the radicand's own twist
            RootOfUnity t = RootOfUnity::from_fraction(inner.twist.exp, inner.twist.order * rad.root);
            out.twist = out.twist * t.pow(k);
            return;
        }
        std::size_t start = pos_;
        while (std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
        std::string stem = s_.substr(start, pos_ - start);
        std::size_t dstart = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (stem.empty() || dstart == pos_) parse_fail(src_, "variable expected at position " + std::to_string(start));
        std::string name = stem + s_.substr(dstart, pos_ - dstart);
        auto slot = g_.slot_by_param(name);
        if (!slot) parse_fail(src_, "unknown variable " + name);
        out.exps[*slot] += Rational(exponent() * sign);
    }

    std::int64_t exponent() {
        if (peek() != '^') return 1;
        ++pos_;
        return integer();
    }

    const GroupDatum &g_;
    std::string src_, s_;
    const std::vector<Radical> &radicals_;
    int depth_;
    std::size_t pos_ = 0;
};

// x_{C,j} = zeta_{e_C}^j v^mu: root part of x^exps under the per-variable principal branch
RootOfUnity slot_root_part(const GroupDatum &g, const RatVec &exps) {
    Rational frac(0);
    for (std::size_t s = 0; s < exps.size(); ++s) {
        auto [orbit, j] = g.slot(s);
        if (j && exps[s].numerator() != 0) frac += exps[s] * j / g.orbits[orbit].order;
    }
    return root_from_rational(frac);
}

IntVec integral_v_exponents(const GroupDatum &g, const RatVec &exps, const std::string &what) {
    IntVec w(exps.size());
    for (std::size_t s = 0; s < exps.size(); ++s) {
        Rational r = exps[s] * g.mu_order;
        if (r.denominator() != 1)
            throw ValidationError(what + ": exponent of " + g.slot_display(s) + " is not integral after x -> v");
        w[s] = r.numerator();
    }
    return w;
}

CycInt root_value(const RootOfUnity &r) { return CycInt::root(r); }

CycInt phi_at(std::int64_t n, const RootOfUnity &r) {
    const Poly &phi = cyclotomic_poly(n);
    CycInt acc(r.order);
    for (std::size_t k = 0; k < phi.size(); ++k)
        if (phi[k]) acc = acc + CycInt::root(r.pow(static_cast<std::int64_t>(k)), r.order) * phi[k];
    return acc;
}

}  // namespace

XMonomial parse_monomial(const GroupDatum &g, const std::string &expr, const std::vector<Radical> &radicals) {
    return MonomialParser(g, expr, radicals).run();
}

SchurFactorX parse_factor(const GroupDatum &g, const std::string &expr, const std::vector<Radical> &radicals) {
    static const std::regex re(R"(^\s*Phi(\d+)\((.*)\)(\^(\d+))?\s*$)");
    std::smatch m;
    if (!std::regex_match(expr, m, re)) parse_fail(expr, "expected Phi<n>(<monomial>)[^k]");
    SchurFactorX f;
    f.cyc_index = std::stoll(m[1]);
    if (f.cyc_index < 1) parse_fail(expr, "cyclotomic index must be positive");
    f.mult = m[4].matched ? std::stoll(m[4]) : 1;
    if (f.mult < 1) parse_fail(expr, "multiplicity must be positive");
    XMonomial mono = parse_monomial(g, m[2], radicals);
    f.twist = mono.twist;
    std::int64_t den = 1;
    for (auto &r : mono.exps) den = lcm64(den, r.denominator());
    f.den = den;
    f.num.resize(mono.exps.size());
    for (std::size_t s = 0; s < mono.exps.size(); ++s) f.num[s] = (mono.exps[s] * den).numerator();
    return f;
}

ParsedXForm parse_xform(const GroupDatum &g, const XFormEntry &e) {
    ParsedXForm out;
    out.coeff = e.coeff;
    XMonomial lead = parse_monomial(g, e.lead, e.radicals);
    out.lead_twist = lead.twist;
    out.lead = lead.exps;
    for (const auto &f : e.factors) out.factors.push_back(parse_factor(g, f, e.radicals));
    return out;
}

SchurElement normalize_x_to_v(const GroupDatum &g, std::size_t char_index, const CycInt &coeff, const RatVec &lead_x,
                              const std::vector<SchurFactorX> &factors, RootOfUnity lead_twist) {
    const std::int64_t m = g.field_conductor;
    const std::string who = char_index < g.characters.size() ? g.characters[char_index].str() : "character";
    if (lead_x.size() != g.slot_count()) throw ValidationError(who + ": leading monomial has wrong length");
    SchurElement s;
    s.char_index = char_index;
    s.lead = integral_v_exponents(g, lead_x, who + " leading monomial");
    CycInt xi = coeff * root_value(lead_twist * slot_root_part(g, lead_x));

    // roots of every factor, pooled per primitive monomial; a factor whose twist lies outside K
    // only covers part of a K-orbit, its Galois partner supplies the rest
    std::map<IntVec, std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t>> roots;
    for (const auto &f : factors) {
        if (f.num.size() != g.slot_count()) throw ValidationError(who + ": factor has wrong length");
        RatVec exps(f.num.size());
        for (std::size_t k = 0; k < exps.size(); ++k) exps[k] = Rational(f.num[k], f.den);
        IntVec w = integral_v_exponents(g, exps, who);
        RootOfUnity rho = f.twist * slot_root_part(g, exps);
        auto [M, content] = primitive_part(w);
        if (content == 0) {
            CycInt c = phi_at(f.cyc_index, rho);
            if (c.is_zero()) throw ValidationError(who + ": a constant factor vanishes");
            xi = xi * c.pow(f.mult);
            continue;
        }
        const std::int64_t n = f.cyc_index;
        const std::int64_t G = content * lcm64(n, rho.order);
        std::int64_t count = 0;
        for (std::int64_t k = 0; k < G; ++k) {
            RootOfUnity tau = RootOfUnity::from_fraction(k, G);
            if ((rho * tau.pow(content)).order != n) continue;
            ++count;
            if (tau.order == 1)
                throw ValidationError(who + ": factor produces a first cyclotomic polynomial, which never appears");
            roots[M][{tau.order, tau.exp}] += f.mult;
        }
        if (count != content * euler_phi(n)) throw std::logic_error("normalize: root count mismatch");
        xi = xi * root_value(rho.pow(euler_phi(n) * f.mult));
    }
    for (auto &[M, rs] : roots) {
        while (!rs.empty()) {
            auto [key, mult] = *rs.begin();
            KCyclotomic psi(m, RootOfUnity{key.first, key.second});
            for (auto e : psi.orbit()) {
                auto it = rs.find({key.first, e});
                if (it == rs.end() || it->second != mult)
                    throw ValidationError(who + ": factors do not combine into K-cyclotomic polynomials");
                rs.erase(it);
            }
            s.factors.push_back({psi, M, mult});
        }
    }
    auto down = xi.descend(m);
    if (!down) throw ValidationError(who + ": coefficient " + xi.minimal().str() + " does not lie in K");
    s.xi = *down;
    return canonical_form(std::move(s));
}

SchurElement from_vform(const GroupDatum &g, std::size_t char_index, const VFormEntry &e) {
    SchurElement s;
    s.char_index = char_index;
    auto down = e.xi.descend(g.field_conductor);
    if (!down) throw ValidationError(e.character + ": coefficient does not lie in K");
    s.xi = *down;
    s.lead = e.lead;
    if (s.lead.size() != g.slot_count()) throw ValidationError(e.character + ": leading monomial has wrong length");
    for (const auto &f : e.factors) {
        if (f.order < 2) throw ValidationError(e.character + ": factor of root order 1, which never appears");
        if (std::gcd(f.exp, f.order) != 1) throw ValidationError(e.character + ": root exponent not prime to order");
        if (f.monomial.size() != g.slot_count()) throw ValidationError(e.character + ": monomial has wrong length");
        if (f.mult < 1) throw ValidationError(e.character + ": multiplicity must be positive");
        KCyclotomic psi(g.field_conductor, RootOfUnity::from_fraction(f.exp, f.order));
        auto [M, content] = primitive_part(f.monomial);
        if (content == 0) {
            s.xi = s.xi * psi.value_at_one().pow(f.mult);
            continue;
        }
        if (content == 1) {
            s.factors.push_back({psi, f.monomial, f.mult});
            continue;
        }
        // Psi(W^c) splits over the c-th roots of its roots
        std::set<std::pair<std::int64_t, std::int64_t>> taus;
        for (auto k : psi.orbit())
            for (std::int64_t t = 0; t < content; ++t) {
                RootOfUnity tau = RootOfUnity::from_fraction(k + f.order * t, f.order * content);
                taus.insert({tau.order, tau.exp});
            }
        while (!taus.empty()) {
            auto [d, k] = *taus.begin();
            KCyclotomic part(g.field_conductor, RootOfUnity{d, k});
            for (auto e2 : part.orbit()) taus.erase({d, e2});
            s.factors.push_back({part, M, f.mult});
        }
    }
    return s;
}

SchurElement canonical_form(SchurElement s) {
    std::map<std::pair<KCyclotomic, IntVec>, std::int64_t> merged;
    for (auto &f : s.factors) {
        IntVec canon = sign_canonical(f.monomial);
        if (canon == f.monomial) {
            merged[{f.psi, f.monomial}] += f.mult;
            continue;
        }
        // Psi_O(W^-1) = unit * W^-|O| * Psi_{O^-1}(W), W = v^canon
        s.xi = s.xi * f.psi.inversion_unit().pow(f.mult);
        std::int64_t k = f.psi.degree() * f.mult;
        for (std::size_t i = 0; i < s.lead.size(); ++i) s.lead[i] -= k * canon[i];
        merged[{f.psi.inverse_roots(), canon}] += f.mult;
    }
    s.factors.clear();
    for (auto &[key, mult] : merged) s.factors.push_back({key.first, key.second, mult});
    std::sort(s.factors.begin(), s.factors.end(), [](const SchurFactorV &a, const SchurFactorV &b) {
        if (a.monomial != b.monomial) return a.monomial < b.monomial;
        if (a.psi != b.psi) return a.psi < b.psi;
        return a.mult < b.mult;
    });
    return s;
}

bool same_schur(const SchurElement &a, const SchurElement &b) {
    SchurElement x = canonical_form(a), y = canonical_form(b);
    return x.xi == y.xi && x.lead == y.lead && x.factors == y.factors;
}

SchurElement resolve_entry(const GroupDatum &g, const SchurEntry &e) {
    if (auto *v = std::get_if<VFormEntry>(&e)) {
        auto idx = g.char_index(v->character);
        if (!idx) throw ValidationError("schur entry for unknown character " + v->character);
        return from_vform(g, *idx, *v);
    }
    const auto &x = std::get<XFormEntry>(e);
    auto idx = g.char_index(x.character);
    if (!idx) throw ValidationError("schur entry for unknown character " + x.character);
    ParsedXForm p = parse_xform(g, x);
    return normalize_x_to_v(g, *idx, p.coeff, p.lead, p.factors, p.lead_twist);
}

void resolve_schur(GroupDatum &g) {
    g.schur.assign(g.characters.size(), std::nullopt);
    for (const auto &e : g.schur_entries) {
        SchurElement s = resolve_entry(g, e);
        if (g.schur[s.char_index])
            throw ValidationError("duplicate schur entry for " + g.characters[s.char_index].str());
        g.schur[s.char_index] = std::move(s);
    }
}

}  // namespace hecke
