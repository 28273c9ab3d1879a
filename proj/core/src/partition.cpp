#include "hlb/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hlb {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
            throw std::invalid_argument("parts must be weakly decreasing and positive");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

long Partition::n_stat() const {
    long s = 0;
    for (size_t i = 0; i < parts_.size(); ++i) s += (long)i * parts_[i];
    return s;
}

int Partition::mult(int i) const {
    return (int)std::count(parts_.begin(), parts_.end(), i);
}

Partition Partition::transpose() const {
    if (parts_.empty()) return {};
    std::vector<int> t(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++t[j];
    return Partition(std::move(t));
}

bool Partition::contains(const Partition& mu) const {
    for (int i = 0; i < mu.length(); ++i)
        if (part(i) < mu.parts()[i]) return false;
    return true;
}

std::string Partition::str() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

namespace {
void enum_rec(int n, int maxpart, std::vector<int>& acc, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        acc.push_back(p);
        enum_rec(n - p, p, acc, out);
        acc.pop_back();
    }
}
} // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("negative n");
    std::vector<Partition> out;
    std::vector<int> acc;
    enum_rec(n, n, acc, out);
    if (n == 0) out = {Partition{}};
    return out;
}

std::vector<std::pair<Partition, int>> single_covers(const Partition& mu) {
    std::vector<std::pair<Partition, int>> out;
    int rows = mu.length();
    for (int i = 0; i <= rows; ++i) {
        // add a box at the end of row i (0-based); legal iff it stays decreasing
        if (i > 0 && mu.part(i) == mu.part(i - 1)) continue;
        std::vector<int> p(mu.parts());
        if (i == rows) p.push_back(1); else ++p[i];
        out.emplace_back(Partition(std::move(p)), mu.part(i) + 1);
    }
    return out;
}

std::vector<std::pair<Partition, DoubleCoverCase>> double_covers(const Partition& mu) {
    std::vector<std::pair<Partition, DoubleCoverCase>> out;
    for (const Partition& lam : enumerate_partitions(mu.size() + 2)) {
        if (!lam.contains(mu)) continue;
        // columns of the two added boxes
        std::vector<int> cols;
        int rows = std::max(lam.length(), mu.length());
        for (int i = 0; i < rows; ++i)
            for (int j = mu.part(i); j < lam.part(i); ++j) cols.push_back(j + 1);
        if (cols.size() != 2) continue;
        std::sort(cols.begin(), cols.end());
        if (cols[1] == cols[0])
            out.emplace_back(lam, DoubleCoverCase{DoubleCoverCase::VerticalDomino, cols[0]});
        else if (cols[1] == cols[0] + 1)
            out.emplace_back(lam, DoubleCoverCase{DoubleCoverCase::ConsecutiveColumns, cols[0]});
        // columns further apart: not a cover for this graph
    }
    return out;
}

Partition two_core(const Partition& lambda) {
    // beta-set trick: first-column hook lengths lambda_i + (l-1-i); remove a
    // domino = decrease some beta value by 2 keeping the set distinct.
    std::vector<int> parts(lambda.parts());
    bool removed = true;
    while (removed) {
        removed = false;
        int l = (int)parts.size();
        for (int i = 0; i < l && !removed; ++i) {
            std::vector<int> beta(l);
            for (int j = 0; j < l; ++j) beta[j] = parts[j] + (l - 1 - j);
            int b = beta[i] - 2;
            if (b < 0) continue;
            if (std::find(beta.begin(), beta.end(), b) != beta.end()) continue;
            beta[i] = b;
            std::sort(beta.rbegin(), beta.rend());
            for (int j = 0; j < l; ++j) beta[j] -= l - 1 - j;
            while (!beta.empty() && beta.back() == 0) beta.pop_back();
            parts = beta;
            removed = true;
        }
    }
    return Partition(std::move(parts));
}

} // namespace hlb
