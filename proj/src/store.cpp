#include "hecke/store.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "hecke/clifford.hpp"
#include "hecke/group_blocks.hpp"
#include "hecke/schur.hpp"

namespace hecke {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string &where, const std::string &what) { throw ValidationError(where + ": " + what); }

const json &field(const json &j, const std::string &key, const std::string &where) {
    if (!j.is_object()) fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(where, "missing field \"" + key + "\"");
    return *it;
}

std::int64_t get_int(const json &j, const std::string &where) {
    if (!j.is_number_integer()) fail(where, "expected an integer");
    return j.get<std::int64_t>();
}

std::string get_str(const json &j, const std::string &where) {
    if (!j.is_string()) fail(where, "expected a string");
    return j.get<std::string>();
}

const json &get_arr(const json &j, const std::string &where) {
    if (!j.is_array()) fail(where, "expected an array");
    return j;
}

IntVec get_intvec(const json &j, const std::string &where) {
    IntVec out;
    std::size_t i = 0;
    for (const auto &x : get_arr(j, where)) out.push_back(get_int(x, where + "[" + std::to_string(i++) + "]"));
    return out;
}

std::string opt_str(const json &j, const std::string &key) {
    auto it = j.find(key);
    return it != j.end() && it->is_string() ? it->get<std::string>() : std::string();
}

std::string sub(const std::string &where, const std::string &key) { return where + "." + key; }
std::string idx(const std::string &where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

// block lists: arrays of character names or 1-based indices; raw 0-based parts, no partition check
std::vector<std::vector<std::size_t>> parse_parts(const GroupDatum &g, const json &j, const std::string &where) {
    std::vector<std::vector<std::size_t>> parts;
    std::size_t pi = 0;
    for (const auto &part : get_arr(j, where)) {
        std::string w = idx(where, pi++);
        std::vector<std::size_t> p;
        for (const auto &e : get_arr(part, w)) {
            if (e.is_string()) {
                auto c = g.char_index(e.get<std::string>());
                if (!c) fail(w, "unknown character " + e.get<std::string>());
                p.push_back(*c);
            } else {
                std::int64_t k = get_int(e, w);
                if (k < 1) fail(w, "block indices are 1-based");
                p.push_back(static_cast<std::size_t>(k - 1));
            }
        }
        parts.push_back(std::move(p));
    }
    return parts;
}

std::string name_of(const GroupDatum &g, std::size_t i) {
    return i < g.characters.size() ? g.characters[i].str() : "#" + std::to_string(i + 1);
}

std::string part_str(const GroupDatum &g, const std::vector<std::size_t> &p) {
    std::string s = "{";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + name_of(g, p[i]);
    return s + "}";
}

// names the offending parts, then builds the partition
Partition checked_partition(const GroupDatum &g, const std::vector<std::vector<std::size_t>> &parts, const std::string &where) {
    const std::size_t n = g.characters.size();
    std::vector<std::string> problems;
    std::vector<std::optional<std::size_t>> owner(n);
    for (std::size_t pi = 0; pi < parts.size(); ++pi) {
        if (parts[pi].empty()) problems.push_back("part " + std::to_string(pi + 1) + " is empty");
        for (auto e : parts[pi]) {
            if (e >= n) {
                problems.push_back("part " + part_str(g, parts[pi]) + " names character #" + std::to_string(e + 1) +
                                   ", out of range");
                continue;
            }
            if (owner[e] && *owner[e] != pi)
                problems.push_back("parts " + part_str(g, parts[*owner[e]]) + " and " + part_str(g, parts[pi]) +
                                   " overlap in " + name_of(g, e));
            else if (owner[e])
                problems.push_back("part " + part_str(g, parts[pi]) + " repeats " + name_of(g, e));
            owner[e] = pi;
        }
    }
    for (std::size_t e = 0; e < n; ++e)
        if (!owner[e]) problems.push_back(name_of(g, e) + " is in no part");
    if (!problems.empty()) {
        std::string msg = where + ": not a partition";
        for (auto &p : problems) msg += "; " + p;
        throw ValidationError(msg, problems);
    }
    return Partition(n, parts);
}

json parts_to_json(const GroupDatum &g, const Partition &p) {
    json out = json::array();
    for (const auto &part : p.parts()) {
        json a = json::array();
        for (auto i : part) a.push_back(g.characters[i].str());
        out.push_back(a);
    }
    return out;
}

Orbit parse_orbit(const json &j, const std::string &w) {
    Orbit o;
    o.letter = get_str(field(j, "letter", w), sub(w, "letter"));
    o.param = get_str(field(j, "param", w), sub(w, "param"));
    o.order = get_int(field(j, "order", w), sub(w, "order"));
    if (o.order < 1) fail(sub(w, "order"), "orbit order must be positive");
    if (o.letter.empty() || o.param.empty()) fail(w, "empty letter or param");
    return o;
}

SchurEntry parse_schur_entry(const json &j, const std::string &w) {
    std::string form = get_str(field(j, "form", w), sub(w, "form"));
    std::string ch = get_str(field(j, "character", w), sub(w, "character"));
    if (form == "x") {
        XFormEntry e;
        e.character = ch;
        if (j.contains("coeff")) e.coeff = cycint_from_json(j["coeff"], sub(w, "coeff"));
        if (j.contains("lead")) e.lead = get_str(j["lead"], sub(w, "lead"));
        std::size_t i = 0;
        for (const auto &f : get_arr(field(j, "factors", w), sub(w, "factors")))
            e.factors.push_back(get_str(f, idx(sub(w, "factors"), i++)));
        if (j.contains("radicals")) {
            i = 0;
            for (const auto &r : get_arr(j["radicals"], sub(w, "radicals"))) {
                std::string rw = idx(sub(w, "radicals"), i++);
                Radical rad;
                rad.name = get_str(field(r, "name", rw), sub(rw, "name"));
                rad.root = get_int(field(r, "root", rw), sub(rw, "root"));
                rad.radicand = get_str(field(r, "radicand", rw), sub(rw, "radicand"));
                if (rad.root < 2) fail(sub(rw, "root"), "radical index must be at least 2");
                e.radicals.push_back(rad);
            }
        }
        return e;
    }
    if (form == "v") {
        VFormEntry e;
        e.character = ch;
        if (j.contains("xi")) e.xi = cycint_from_json(j["xi"], sub(w, "xi"));
        e.lead = get_intvec(field(j, "lead", w), sub(w, "lead"));
        std::size_t i = 0;
        for (const auto &f : get_arr(field(j, "factors", w), sub(w, "factors"))) {
            std::string fw = idx(sub(w, "factors"), i++);
            VFormFactor vf;
            IntVec root = get_intvec(field(f, "root", fw), sub(fw, "root"));
            if (root.size() != 2) fail(sub(fw, "root"), "expected [order, exponent]");
            vf.order = root[0];
            vf.exp = root[1];
            vf.monomial = get_intvec(field(f, "monomial", fw), sub(fw, "monomial"));
            if (f.contains("mult")) vf.mult = get_int(f["mult"], sub(fw, "mult"));
            e.factors.push_back(vf);
        }
        return e;
    }
    fail(sub(w, "form"), "expected \"x\" or \"v\", got \"" + form + "\"");
}

json schur_entry_to_json(const SchurEntry &e) {
    if (auto *x = std::get_if<XFormEntry>(&e)) {
        json j{{"character", x->character}, {"form", "x"}, {"coeff", cycint_to_json(x->coeff)}, {"lead", x->lead},
               {"factors", x->factors}};
        if (!x->radicals.empty()) {
            json rs = json::array();
            for (auto &r : x->radicals) rs.push_back({{"name", r.name}, {"root", r.root}, {"radicand", r.radicand}});
            j["radicals"] = rs;
        }
        return j;
    }
    const auto &v = std::get<VFormEntry>(e);
    json fs = json::array();
    for (auto &f : v.factors)
        fs.push_back({{"root", {f.order, f.exp}}, {"monomial", f.monomial}, {"mult", f.mult}});
    return {{"character", v.character}, {"form", "v"}, {"xi", cycint_to_json(v.xi)}, {"lead", v.lead}, {"factors", fs}};
}

CharacterTable parse_table(const GroupDatum &g, const json &j, const std::string &w) {
    CharacterTable t;
    t.conductor = get_int(field(j, "conductor", w), sub(w, "conductor"));
    if (t.conductor < 1) fail(sub(w, "conductor"), "must be positive");
    t.class_sizes = get_intvec(field(j, "class_sizes", w), sub(w, "class_sizes"));
    if (j.contains("class_labels")) {
        std::size_t i = 0;
        for (const auto &l : get_arr(j["class_labels"], sub(w, "class_labels")))
            t.class_labels.push_back(get_str(l, idx(sub(w, "class_labels"), i++)));
    }
    const json &rows = get_arr(field(j, "values", w), sub(w, "values"));
    std::size_t r = 0;
    for (const auto &row : rows) {
        std::string rw = idx(sub(w, "values"), r++);
        std::vector<CycInt> vals;
        std::size_t c = 0;
        for (const auto &v : get_arr(row, rw)) vals.push_back(cycint_from_json(v, idx(rw, c++)).lift(t.conductor));
        t.values.push_back(std::move(vals));
    }
    (void)g;
    return t;
}

HyperplaneTable parse_hyperplane_table(const GroupDatum &g, const json &j, const std::string &w) {
    HyperplaneTable t;
    const json &n = field(j, "normal", w);
    if (!n.is_null()) t.normal = get_intvec(n, sub(w, "normal"));
    if (j.contains("primes")) t.primes = get_intvec(j["primes"], sub(w, "primes"));
    t.blocks = checked_partition(g, parse_parts(g, field(j, "blocks", w), sub(w, "blocks")), sub(w, "blocks"));
    if (j.contains("per_prime")) {
        const json &pp = j["per_prime"];
        if (!pp.is_object()) fail(sub(w, "per_prime"), "expected an object keyed by prime");
        for (auto it = pp.begin(); it != pp.end(); ++it) {
            std::string pw = sub(sub(w, "per_prime"), it.key());
            std::int64_t p = 0;
            try {
                p = std::stoll(it.key());
            } catch (const std::exception &) {
                fail(pw, "key is not a prime");
            }
            t.per_prime[p] = checked_partition(g, parse_parts(g, it.value(), pw), pw);
        }
    }
    t.notes = opt_str(j, "notes");
    return t;
}

CliffordLink parse_link(const json &j, const std::string &w) {
    CliffordLink l;
    l.parent = get_str(field(j, "parent", w), sub(w, "parent"));
    l.child = get_str(field(j, "child", w), sub(w, "child"));
    l.cyclic_order = get_int(field(j, "cyclic_order", w), sub(w, "cyclic_order"));
    std::size_t i = 0;
    for (const auto &s : get_arr(field(j, "parameter_spec", w), sub(w, "parameter_spec")))
        l.parameter_spec.push_back(get_str(s, idx(sub(w, "parameter_spec"), i++)));
    if (j.contains("induction")) {
        i = 0;
        for (const auto &row : get_arr(j["induction"], sub(w, "induction"))) {
            std::string rw = idx(sub(w, "induction"), i++);
            InductionRow r;
            r.child = get_str(field(row, "child", rw), sub(rw, "child"));
            std::size_t k = 0;
            for (const auto &p : get_arr(field(row, "parents", rw), sub(rw, "parents")))
                r.parents.push_back(get_str(p, idx(sub(rw, "parents"), k++)));
            l.induction.push_back(r);
        }
    }
    if (j.contains("schur_pairs")) {
        i = 0;
        for (const auto &sp : get_arr(j["schur_pairs"], sub(w, "schur_pairs"))) {
            std::string sw = idx(sub(w, "schur_pairs"), i++);
            l.schur_pairs.push_back({get_str(field(sp, "parent", sw), sub(sw, "parent")),
                                     get_str(field(sp, "child", sw), sub(sw, "child"))});
        }
    }
    l.notes = opt_str(j, "notes");
    return l;
}

}  // namespace

CycInt cycint_from_json(const json &j, const std::string &where) {
    if (j.is_number_integer()) return CycInt::integer(j.get<std::int64_t>());
    std::int64_t n = get_int(field(j, "conductor", where), sub(where, "conductor"));
    if (n < 1) fail(sub(where, "conductor"), "must be positive");
    IntVec c = get_intvec(field(j, "coeffs", where), sub(where, "coeffs"));
    if (static_cast<std::int64_t>(c.size()) > euler_phi(n))
        fail(sub(where, "coeffs"), "more coefficients than the degree of Q(zeta_" + std::to_string(n) + ")");
    return CycInt(n, c);
}

json cycint_to_json(const CycInt &c) {
    if (auto v = c.as_integer()) return *v;
    return {{"conductor", c.conductor()}, {"coeffs", c.coeffs()}};
}

GroupDatum datum_from_json(const json &j) {
    GroupDatum g;
    const std::string w = "$";
    g.name = get_str(field(j, "name", w), "$.name");
    const std::string gw = g.name;
    g.field_conductor = get_int(field(j, "field_conductor", gw), gw + ".field_conductor");
    g.mu_order = get_int(field(j, "mu_order", gw), gw + ".mu_order");
    g.group_order = get_int(field(j, "group_order", gw), gw + ".group_order");
    if (g.field_conductor < 1 || g.mu_order < 1 || g.group_order < 1) fail(gw, "conductor, mu_order and group_order must be positive");
    std::size_t i = 0;
    for (const auto &o : get_arr(field(j, "orbits", gw), gw + ".orbits")) g.orbits.push_back(parse_orbit(o, idx(gw + ".orbits", i++)));
    i = 0;
    for (const auto &c : get_arr(field(j, "characters", gw), gw + ".characters")) {
        std::string cw = idx(gw + ".characters", i++);
        auto lab = CharLabel::parse(get_str(c, cw));
        if (!lab) fail(cw, "bad character label " + c.get<std::string>());
        for (auto &prev : g.characters)
            if (prev == *lab) fail(cw, "duplicate character " + lab->str());
        g.characters.push_back(*lab);
    }
    if (j.contains("schur")) {
        i = 0;
        for (const auto &e : get_arr(j["schur"], gw + ".schur")) g.schur_entries.push_back(parse_schur_entry(e, idx(gw + ".schur", i++)));
    }
    if (j.contains("character_table") && !j["character_table"].is_null())
        g.character_table = parse_table(g, j["character_table"], gw + ".character_table");
    if (j.contains("hyperplane_tables")) {
        i = 0;
        for (const auto &t : get_arr(j["hyperplane_tables"], gw + ".hyperplane_tables"))
            g.hyperplane_tables.push_back(parse_hyperplane_table(g, t, idx(gw + ".hyperplane_tables", i++)));
    }
    if (j.contains("clifford_links")) {
        i = 0;
        for (const auto &l : get_arr(j["clifford_links"], gw + ".clifford_links"))
            g.clifford_links.push_back(parse_link(l, idx(gw + ".clifford_links", i++)));
    }
    if (j.contains("partial")) {
        if (!j["partial"].is_boolean()) fail(gw + ".partial", "expected a boolean");
        g.partial = j["partial"].get<bool>();
    }
    if (j.contains("notes")) {
        i = 0;
        for (const auto &n : get_arr(j["notes"], gw + ".notes")) g.notes.push_back(get_str(n, idx(gw + ".notes", i++)));
    }
    return g;
}

json datum_to_json(const GroupDatum &g) {
    json j;
    j["name"] = g.name;
    j["field_conductor"] = g.field_conductor;
    j["mu_order"] = g.mu_order;
    j["group_order"] = g.group_order;
    j["orbits"] = json::array();
    for (auto &o : g.orbits) j["orbits"].push_back({{"letter", o.letter}, {"param", o.param}, {"order", o.order}});
    j["characters"] = json::array();
    for (auto &c : g.characters) j["characters"].push_back(c.str());
    if (g.partial) j["partial"] = true;
    if (!g.notes.empty()) j["notes"] = g.notes;
    if (!g.schur_entries.empty()) {
        j["schur"] = json::array();
        for (auto &e : g.schur_entries) j["schur"].push_back(schur_entry_to_json(e));
    }
    if (g.character_table) {
        const auto &t = *g.character_table;
        json vals = json::array();
        for (auto &row : t.values) {
            json r = json::array();
            for (auto &v : row) r.push_back(cycint_to_json(v));
            vals.push_back(r);
        }
        j["character_table"] = {{"conductor", t.conductor}, {"class_sizes", t.class_sizes}, {"values", vals}};
        if (!t.class_labels.empty()) j["character_table"]["class_labels"] = t.class_labels;
    }
    j["hyperplane_tables"] = json::array();
    for (auto &t : g.hyperplane_tables) {
        json tj;
        tj["normal"] = t.normal ? json(*t.normal) : json(nullptr);
        tj["primes"] = t.primes;
        tj["blocks"] = parts_to_json(g, t.blocks);
        if (!t.per_prime.empty()) {
            json pp = json::object();
            for (auto &[p, part] : t.per_prime) pp[std::to_string(p)] = parts_to_json(g, part);
            tj["per_prime"] = pp;
        }
        if (!t.notes.empty()) tj["notes"] = t.notes;
        j["hyperplane_tables"].push_back(tj);
    }
    if (!g.clifford_links.empty()) {
        j["clifford_links"] = json::array();
        for (auto &l : g.clifford_links) {
            json lj{{"parent", l.parent}, {"child", l.child}, {"cyclic_order", l.cyclic_order}, {"parameter_spec", l.parameter_spec}};
            json rows = json::array();
            for (auto &r : l.induction) rows.push_back({{"child", r.child}, {"parents", r.parents}});
            lj["induction"] = rows;
            json sps = json::array();
            for (auto &sp : l.schur_pairs) sps.push_back({{"parent", sp.parent}, {"child", sp.child}});
            lj["schur_pairs"] = sps;
            if (!l.notes.empty()) lj["notes"] = l.notes;
            j["clifford_links"].push_back(lj);
        }
    }
    return j;
}

std::vector<std::string> datum_problems(const GroupDatum &g) {
    std::vector<std::string> out;
    const std::string tag = g.name + ": ";
    std::set<std::string> letters, params;
    for (auto &o : g.orbits) {
        if (!letters.insert(o.letter).second) out.push_back(tag + "orbit letter " + o.letter + " used twice");
        if (!params.insert(o.param).second) out.push_back(tag + "orbit parameter " + o.param + " used twice");
    }
    for (auto &c : g.characters)
        if (g.group_order % c.degree != 0) out.push_back(tag + c.str() + " has a degree not dividing the group order");
    for (const auto &s : g.schur)
        if (s)
            for (auto &p : validate(g, *s)) out.push_back(tag + p);
    if (g.character_table)
        for (auto &p : table_problems(g, *g.character_table)) out.push_back(tag + p);

    std::set<IntVec> seen;
    std::size_t base_count = 0;
    for (std::size_t i = 0; i < g.hyperplane_tables.size(); ++i) {
        const auto &t = g.hyperplane_tables[i];
        std::string tw = tag + "hyperplane table " + std::to_string(i + 1) + ": ";
        for (auto p : t.primes)
            if (p < 2 || prime_divisors(p).size() != 1 || prime_divisors(p)[0] != p || g.group_order % p != 0)
                out.push_back(tw + "prime " + std::to_string(p) + " does not divide the group order");
        if (!t.normal) {
            ++base_count;
            continue;
        }
        const IntVec &n = *t.normal;
        if (n.size() != g.slot_count()) {
            out.push_back(tw + "normal has " + std::to_string(n.size()) + " entries, expected " + std::to_string(g.slot_count()));
            continue;
        }
        if (is_zero(n) || !is_primitive(n)) out.push_back(tw + "normal is not primitive");
        auto sums = orbit_sums(g, n);
        for (std::size_t c = 0; c < sums.size(); ++c)
            if (sums[c] != 0) out.push_back(tw + "normal has a nonzero sum over orbit " + g.orbits[c].letter);
        if (!seen.insert(sign_canonical(n)).second) out.push_back(tw + "hyperplane listed twice");
        for (auto &[p, part] : t.per_prime)
            if (!part.refines(t.blocks)) out.push_back(tw + "per-prime blocks at " + std::to_string(p) + " are not finer than the union");
    }
    if (!g.hyperplane_tables.empty() && base_count != 1)
        out.push_back(tag + std::to_string(base_count) + " tables without a hyperplane, expected exactly one");
    if (const HyperplaneTable *base = g.no_hyperplane_table())
        for (const auto &t : g.hyperplane_tables)
            if (t.normal && !base->blocks.refines(t.blocks))
                out.push_back(tag + "the no-hyperplane blocks are not finer than the table of " + t.blocks.str());
    return out;
}

GroupDatum parse_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw HeckeError("cannot open " + path, 5);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error &e) {
        // report a line number rather than a byte offset
        std::ifstream again(path);
        std::string text((std::istreambuf_iterator<char>(again)), std::istreambuf_iterator<char>());
        std::size_t line = 1 + std::count(text.begin(), text.begin() + std::min(e.byte, text.size()), '\n');
        throw ValidationError(path + ":" + std::to_string(line) + ": JSON parse error: " + e.what());
    }
    try {
        GroupDatum g = datum_from_json(j);
        resolve_schur(g);
        return g;
    } catch (const ValidationError &e) {
        throw ValidationError(path + ": " + e.what(), e.problems);
    }
}

GroupDatum load(const std::string &path) {
    GroupDatum g = parse_file(path);
    auto problems = datum_problems(g);
    if (!problems.empty()) {
        std::string msg = path + ": validation failed";
        for (auto &p : problems) msg += "\n  " + p;
        throw ValidationError(msg, problems);
    }
    return g;
}

void save(const GroupDatum &g, const std::string &path) {
    std::ofstream out(path);
    if (!out) throw HeckeError("cannot write " + path, 1);
    out << datum_to_json(g).dump(2) << "\n";
}

std::string default_db_dir() {
    if (const char *env = std::getenv("HECKE_DB"); env && *env) return env;
#ifdef HECKE_DEFAULT_DB
    return HECKE_DEFAULT_DB;
#else
    return "data";
#endif
}

Database Database::open(const std::string &dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw MissingPayloadError("database directory " + dir + " not found");
    std::vector<fs::path> files;
    for (const auto &e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    Database db;
    for (auto &f : files) db.add(load(f.string()));
    return db;
}

void Database::add(GroupDatum g) {
    std::string n = g.name;
    if (groups_.count(n)) throw ValidationError("group " + n + " defined twice");
    groups_.emplace(n, std::move(g));
}

const GroupDatum *Database::find(const std::string &name) const {
    auto it = groups_.find(name);
    return it == groups_.end() ? nullptr : &it->second;
}

const GroupDatum &Database::get(const std::string &name) const {
    if (auto *g = find(name)) return *g;
    throw MissingPayloadError("no data for group " + name);
}

}  // namespace hecke
