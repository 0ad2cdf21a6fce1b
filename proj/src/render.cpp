#include "hecke/render.hpp"

#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

std::string render_hyperplane(const GroupDatum &g, const IntVec &normal) {
    std::string out;
    for (std::size_t s = 0; s < normal.size(); ++s) {
        std::int64_t c = normal[s];
        if (!c) continue;
        if (c < 0)
            out += '-';
        else if (!out.empty())
            out += '+';
        std::int64_t a = c < 0 ? -c : c;
        if (a != 1) out += std::to_string(a);
        out += g.slot_display(s);
    }
    if (out.empty()) out = "0";
    return out + "=0";
}

std::string render_partition_index(const Partition &p) { return p.str(); }

std::string render_partition_names(const GroupDatum &g, const Partition &p) {
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < p.parts().size(); ++k) {
        os << (k ? "," : "") << '[';
        const auto &part = p.parts()[k];
        for (std::size_t i = 0; i < part.size(); ++i) os << (i ? "," : "") << '"' << g.characters.at(part[i]).str() << '"';
        os << ']';
    }
    os << ']';
    return os.str();
}

IntVec parse_exponents(const std::string &text, std::size_t expected) {
    IntVec out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long long v = std::stoll(item, &used);
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
        if (used != item.size()) throw std::invalid_argument("bad exponent '" + item + "'");
        out.push_back(v);
    }
    if (out.size() != expected)
        throw ArityError("expected " + std::to_string(expected) + " exponents, got " + std::to_string(out.size()));
    return out;
}

}  // namespace hecke
