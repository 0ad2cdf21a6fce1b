#include "hecke/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hecke {

namespace {

struct UnionFind {
    std::vector<std::size_t> up;
    explicit UnionFind(std::size_t n) : up(n) { std::iota(up.begin(), up.end(), 0); }
    std::size_t find(std::size_t x) {
        while (up[x] != x) x = up[x] = up[up[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a), b = find(b);
        if (a != b) up[std::max(a, b)] = std::min(a, b);
    }
};

Partition from_roots(UnionFind &uf, std::size_t n) {
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i) groups[uf.find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> parts;
    for (auto &[_, v] : groups) parts.push_back(std::move(v));
    return Partition(n, std::move(parts));
}

}  // namespace

std::vector<std::string> partition_problems(std::size_t n, const std::vector<std::vector<std::size_t>> &parts) {
    std::vector<std::string> out;
    std::vector<int> owner(n, -1);
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (parts[k].empty()) out.push_back("part " + std::to_string(k + 1) + " is empty");
        for (auto x : parts[k]) {
            if (x >= n) {
                out.push_back("element " + std::to_string(x + 1) + " out of range");
                continue;
            }
            if (owner[x] >= 0)
                out.push_back("element " + std::to_string(x + 1) + " appears in parts " + std::to_string(owner[x] + 1) +
                              " and " + std::to_string(k + 1));
            else
                owner[x] = static_cast<int>(k);
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (owner[i] < 0) out.push_back("element " + std::to_string(i + 1) + " is in no part");
    return out;
}

Partition::Partition(std::size_t n) : n_(n) {
    for (std::size_t i = 0; i < n; ++i) parts_.push_back({i});
}

Partition::Partition(std::size_t n, std::vector<std::vector<std::size_t>> parts) : n_(n), parts_(std::move(parts)) {
    auto problems = partition_problems(n, parts_);
    if (!problems.empty()) throw std::invalid_argument("not a partition: " + problems.front());
    canonicalize();
}

Partition Partition::whole(std::size_t n) {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    return n ? Partition(n, {all}) : Partition(0);
}

Partition Partition::from_one_based(std::size_t n, const std::vector<std::vector<std::size_t>> &parts) {
    auto p = parts;
    for (auto &part : p)
        for (auto &x : part) {
            if (x == 0) throw std::invalid_argument("not a partition: index 0 in 1-based list");
            --x;
        }
    return Partition(n, std::move(p));
}

void Partition::canonicalize() {
    for (auto &p : parts_) std::sort(p.begin(), p.end());
    std::sort(parts_.begin(), parts_.end());
}

std::vector<std::size_t> Partition::part_ids() const {
    std::vector<std::size_t> id(n_);
    for (std::size_t k = 0; k < parts_.size(); ++k)
        for (auto x : parts_[k]) id[x] = k;
    return id;
}

bool Partition::same_part(std::size_t a, std::size_t b) const {
    auto id = part_ids();
    return id.at(a) == id.at(b);
}

bool Partition::refines(const Partition &coarser) const {
    if (n_ != coarser.n_) throw std::invalid_argument("partition size mismatch");
    auto id = coarser.part_ids();
    for (auto &p : parts_)
        for (auto x : p)
            if (id[x] != id[p.front()]) return false;
    return true;
}

std::vector<std::vector<std::size_t>> Partition::one_based() const {
    auto p = parts_;
    for (auto &part : p)
        for (auto &x : part) ++x;
    return p;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k) os << ',';
        os << '[';
        for (std::size_t i = 0; i < parts_[k].size(); ++i) os << (i ? "," : "") << parts_[k][i] + 1;
        os << ']';
    }
    os << ']';
    return os.str();
}

Partition meet(const Partition &a, const Partition &b) {
    if (a.size() != b.size()) throw std::invalid_argument("meet: partition size mismatch");
    auto ia = a.part_ids(), ib = b.part_ids();
    std::vector<std::pair<std::size_t, std::size_t>> keys(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) keys[i] = {ia[i], ib[i]};
    return Partition::from_keys(keys);
}

Partition join(const Partition &a, const Partition &b) { return join(std::vector<Partition>{a, b}); }

Partition join(const std::vector<Partition> &ps) {
    if (ps.empty()) throw std::invalid_argument("join: no partitions");
    std::size_t n = ps.front().size();
    UnionFind uf(n);
    for (auto &p : ps) {
        if (p.size() != n) throw std::invalid_argument("join: partition size mismatch");
        for (auto &part : p.parts())
            for (auto x : part) uf.unite(part.front(), x);
    }
    return from_roots(uf, n);
}

}  // namespace hecke
