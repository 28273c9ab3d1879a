#pragma once
#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace hlb {

// Weakly decreasing sequence of positive integers; the empty partition is {}.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;                 // |lambda|
    int length() const { return (int)parts_.size(); }
    int part(int i) const { return i < (int)parts_.size() ? parts_[i] : 0; } // 0-based
    long n_stat() const;              // sum (i-1)*lambda_i
    int mult(int i) const;            // m_i
    Partition transpose() const;
    bool contains(const Partition& mu) const;

    auto operator<=>(const Partition&) const = default;
    std::string str() const;          // "(3,1)" or "()"

private:
    std::vector<int> parts_;
};

struct PartitionHash {
    size_t operator()(const Partition& p) const {
        size_t h = 1469598103934665603ull;
        for (int x : p.parts()) { h ^= (size_t)x; h *= 1099511628211ull; }
        return h;
    }
};

// All partitions of n in reverse lexicographic order: (n) first, (1^n) last.
std::vector<Partition> enumerate_partitions(int n);

// Covers mu -> lambda by one box; returns (lambda, column k of the added box).
std::vector<std::pair<Partition, int>> single_covers(const Partition& mu);

// Two-box growth: vertical domino in column k, or one box in each of
// columns k and k+1.  Boxes in columns further apart are not covers here.
struct DoubleCoverCase {
    enum Kind { VerticalDomino, ConsecutiveColumns } kind;
    int column; // k (the lower column for ConsecutiveColumns)
    bool operator==(const DoubleCoverCase&) const = default;
};
std::vector<std::pair<Partition, DoubleCoverCase>> double_covers(const Partition& mu);

// Repeatedly strip 2-rim-hooks (dominoes); result is empty or a staircase.
Partition two_core(const Partition& lambda);

} // namespace hlb
