#include <iostream>

#include "CLI11.hpp"

#include "hecke/block_engine.hpp"
#include "hecke/render.hpp"
#include "hecke/store.hpp"
#include "hecke/verify.hpp"

using namespace hecke;

namespace {

std::string cond_str(const IntVec &n) {
    std::string s = "[";
    for (std::size_t i = 0; i < n.size(); ++i) s += (i ? "," : "") + std::to_string(n[i]);
    return s + "]";
}

std::string render_blocks(const GroupDatum &g, const Partition &p, const std::string &display) {
    return display == "index" ? render_partition_index(p) : render_partition_names(g, p);
}

int essential(const std::string &group, std::int64_t p) {
    Database db = Database::open(default_db_dir());
    const GroupDatum &g = db.get(group);
    for (auto &h : essential_hyperplanes(g, p)) std::cout << render_hyperplane(g, h) << "\n";
    return 0;
}

int all_blocks(const std::string &group, const std::string &display) {
    Database db = Database::open(default_db_dir());
    const GroupDatum &g = db.get(group);
    const HyperplaneTable *base = g.no_hyperplane_table();
    if (!base) throw MissingPayloadError(group + ": no stored block tables");
    std::cout << "No essential hyperplane\n" << render_blocks(g, base->blocks, display) << "\n";
    for (const auto &t : g.hyperplane_tables) {
        if (!t.normal) continue;
        std::cout << render_hyperplane(g, *t.normal) << "  cond=" << cond_str(*t.normal) << "\n"
                  << render_blocks(g, t.blocks, display) << "\n";
    }
    return 0;
}

int rouquier(const std::string &group, const std::string &exps, const std::string &path, const std::string &display) {
    Database db = Database::open(default_db_dir());
    const GroupDatum &g = db.get(group);
    IntVec n = parse_exponents(exps, g.slot_count());
    Partition p;
    std::vector<IntVec> hit;
    if (path == "schur") {
        p = rouquier_from_schur(g, n);
        for (auto &h : essential_hyperplanes(g, 0, HyperplaneSource::schur))
            if (dot(h, n) == 0) hit.push_back(h);
    } else {
        p = rouquier_from_tables(g, n);
        for (auto *t : hyperplanes_containing(g.hyperplane_tables, n)) hit.push_back(*t->normal);
    }
    std::cout << "hyperplanes:";
    if (hit.empty()) std::cout << " none";
    for (std::size_t i = 0; i < hit.size(); ++i) std::cout << (i ? "; " : " ") << render_hyperplane(g, hit[i]);
    std::cout << "\n" << render_blocks(g, p, display) << "\n";
    return 0;
}

int verify(std::vector<std::string> paths) {
    if (paths.empty()) paths.push_back(default_db_dir());
    VerifyReport rep = verify_paths(paths);
    std::cout << rep.to_json().dump(2) << "\n";
    return rep.ok() ? 0 : 5;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Rouquier blocks and essential hyperplanes of cyclotomic Hecke algebras"};
    app.require_subcommand(1);

    std::string group, display = "name", path = "tables", exps;
    std::int64_t prime = 0;
    std::vector<std::string> paths;

    auto *eh = app.add_subcommand("essential-hyperplanes", "list the p-essential hyperplanes (p = 0: all primes)");
    eh->add_option("group", group)->required();
    eh->add_option("--prime,-p", prime, "prime dividing the group order, 0 for all");

    auto *ab = app.add_subcommand("all-blocks", "print every stored block table");
    ab->add_option("group", group)->required();
    ab->add_option("--display", display)->check(CLI::IsMember({"index", "name", ""}));

    auto *rb = app.add_subcommand("rouquier-blocks", "Rouquier blocks of a cyclotomic specialization");
    rb->add_option("group", group)->required();
    rb->add_option("--exponents,-e", exps, "comma separated n_{C,j} in slot order")->required();
    rb->add_option("--path", path)->check(CLI::IsMember({"tables", "schur"}));
    rb->add_option("--display", display)->check(CLI::IsMember({"index", "name", ""}));

    auto *vd = app.add_subcommand("verify-db", "run every validator over database files or directories");
    vd->add_option("paths", paths);

    CLI11_PARSE(app, argc, argv);
    if (display.empty()) display = "name";

    try {
        if (*eh) return essential(group, prime);
        if (*ab) return all_blocks(group, display);
        if (*rb) return rouquier(group, exps, path, display);
        if (*vd) return verify(paths);
    } catch (const HeckeError &e) {
        std::cerr << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
