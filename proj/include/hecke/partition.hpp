#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace hecke {

// Set partition of {0, ..., n-1}. Always kept canonical: parts sorted, parts ordered by least element.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::size_t n);  // singletons
    Partition(std::size_t n, std::vector<std::vector<std::size_t>> parts);  // throws on overlap / gaps

    static Partition singletons(std::size_t n) { return Partition(n); }
    static Partition whole(std::size_t n);
    // parts given as 1-based indices
    static Partition from_one_based(std::size_t n, const std::vector<std::vector<std::size_t>> &parts);
    // equal labels -> same part
    template <class Key>
    static Partition from_keys(const std::vector<Key> &keys);

    std::size_t size() const { return n_; }
    const std::vector<std::vector<std::size_t>> &parts() const { return parts_; }
    std::vector<std::size_t> part_ids() const;  // element -> index of its part
    bool same_part(std::size_t a, std::size_t b) const;
    bool refines(const Partition &coarser) const;
    bool is_singletons() const { return parts_.size() == n_; }

    std::vector<std::vector<std::size_t>> one_based() const;
    std::string str() const;  // [[1],[2,3]]

    bool operator==(const Partition &) const = default;

private:
    void canonicalize();
    std::size_t n_ = 0;
    std::vector<std::vector<std::size_t>> parts_;
};

Partition meet(const Partition &a, const Partition &b);
Partition join(const Partition &a, const Partition &b);
Partition join(const std::vector<Partition> &ps);  // ps nonempty

// Problems with a list of parts meant to partition {0..n-1}: overlaps, missing and out-of-range elements.
std::vector<std::string> partition_problems(std::size_t n, const std::vector<std::vector<std::size_t>> &parts);

template <class Key>
Partition Partition::from_keys(const std::vector<Key> &keys) {
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> rep;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        std::size_t k = 0;
        while (k < rep.size() && !(keys[rep[k]] == keys[i])) ++k;
        if (k == rep.size()) {
            rep.push_back(i);
            parts.push_back({});
        }
        parts[k].push_back(i);
    }
    return Partition(keys.size(), std::move(parts));
}

}  // namespace hecke
