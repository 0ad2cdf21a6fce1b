#include "hecke/verify.hpp"

#include <filesystem>

#include "hecke/clifford.hpp"

namespace hecke {

nlohmann::json VerifyReport::to_json() const {
    return {{"ok", ok()}, {"files", files}, {"problem_count", problems.size()}, {"problems", problems}};
}

std::vector<std::string> cross_group_problems(const std::map<std::string, GroupDatum> &groups) {
    std::vector<std::string> out;
    for (const auto &[name, parent] : groups) {
        for (const auto &link : parent.clifford_links) {
            const std::string tag = name + ": link " + link.parent + "->" + link.child + ": ";
            if (link.parent != name) {
                out.push_back(tag + "stored in the file of " + name + " but names another parent");
                continue;
            }
            auto it = groups.find(link.child);
            // the other end is not part of this run
            if (it == groups.end()) continue;
            const GroupDatum &child = it->second;
            auto lp = link_problems(link, parent, child);
            for (auto &p : lp) out.push_back(name + ": " + p);
            if (!lp.empty()) continue;
            for (auto &p : validate_schur_scaling(link, parent, child)) out.push_back(name + ": " + p);
            try {
                for (auto &p : transport_mismatches(link, parent, child)) out.push_back(name + ": " + p);
            } catch (const HeckeError &e) {
                out.push_back(name + ": " + e.what());
            }
        }
    }
    return out;
}

VerifyReport verify_paths(const std::vector<std::string> &paths) {
    namespace fs = std::filesystem;
    VerifyReport rep;
    std::vector<std::string> files;
    for (const auto &p : paths) {
        if (fs::is_directory(p)) {
            std::vector<std::string> in_dir;
            for (const auto &e : fs::directory_iterator(p))
                if (e.is_regular_file() && e.path().extension() == ".json") in_dir.push_back(e.path().string());
            std::sort(in_dir.begin(), in_dir.end());
            files.insert(files.end(), in_dir.begin(), in_dir.end());
        } else if (fs::is_regular_file(p)) {
            files.push_back(p);
        } else {
            rep.problems.push_back(p + ": no such file or directory");
        }
    }
    std::map<std::string, GroupDatum> groups;
    for (const auto &f : files) {
        rep.files.push_back(f);
        try {
            GroupDatum g = parse_file(f);
            for (auto &p : datum_problems(g)) rep.problems.push_back(f + ": " + p);
            if (groups.count(g.name))
                rep.problems.push_back(f + ": group " + g.name + " defined twice");
            else
                groups.emplace(g.name, std::move(g));
        } catch (const ValidationError &e) {
            rep.problems.push_back(e.what());
        } catch (const HeckeError &e) {
            rep.problems.push_back(f + ": " + e.what());
        }
    }
    for (auto &p : cross_group_problems(groups)) rep.problems.push_back(p);
    return rep;
}

}  // namespace hecke
