#ifndef QPROFILE_PARTITION_HPP
#define QPROFILE_PARTITION_HPP

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qprofile {

// Weakly decreasing positive integers; trailing zeros are never stored.
struct Partition {
    std::vector<std::size_t> parts;

    Partition() = default;
    explicit Partition(std::vector<std::size_t> p) : parts(std::move(p)) {
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        for (std::size_t i = 0; i + 1 < parts.size(); ++i)
            if (parts[i] < parts[i + 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
    }

    std::size_t weight() const {
        return std::accumulate(parts.begin(), parts.end(), std::size_t{0});
    }
    std::size_t length() const { return parts.size(); }
    bool empty() const { return parts.empty(); }
    std::size_t part(std::size_t i) const { return i < parts.size() ? parts[i] : 0; }

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        s += ")";
        return s;
    }
};

// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
inline std::vector<Partition> partitions_of(std::size_t n) {
    std::vector<Partition> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t rem, std::size_t maxpart) -> void {
        if (rem == 0) {
            out.emplace_back(Partition{cur});
            return;
        }
        for (std::size_t p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

inline std::vector<Partition> partitions_with_first_part(std::size_t n, std::size_t m) {
    std::vector<Partition> out;
    for (auto& mu : partitions_of(n))
        if (!mu.empty() && mu.parts[0] == m) out.push_back(mu);
    return out;
}

inline Partition conjugate(const Partition& mu) {
    if (mu.empty()) return {};
    std::vector<std::size_t> c(mu.parts[0], 0);
    for (std::size_t p : mu.parts)
        for (std::size_t i = 0; i < p; ++i) ++c[i];
    return Partition(std::move(c));
}

}  // namespace qprofile

#endif
