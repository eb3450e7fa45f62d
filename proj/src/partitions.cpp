#include "reconkit/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace reconkit {

std::vector<std::vector<int>> integer_partitions(int m, int min_part, int max_part) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int rest, int cap) {
        if (rest == 0) {
            out.push_back(current);
            return;
        }
        for (int part = std::min(rest, cap); part >= min_part; --part) {
            current.push_back(part);
            rec(rest - part, part);
            current.pop_back();
        }
    };
    if (m == 0) return {{}};
    if (min_part < 1) min_part = 1;
    rec(m, max_part);
    return out;
}

namespace {

using CountVector = std::vector<int>;

// Parts are count vectors over the distinct values (descending). Blocks are
// generated in non-increasing lexicographic order so each multiset partition
// appears once.
void vector_partitions(const CountVector& remaining, const CountVector& cap, std::vector<CountVector>& current,
                       std::vector<std::vector<CountVector>>& out) {
    if (std::all_of(remaining.begin(), remaining.end(), [](int x) { return x == 0; })) {
        out.push_back(current);
        return;
    }
    const std::size_t d = remaining.size();
    CountVector part(d, 0);
    // Enumerate all nonzero sub-vectors of `remaining` that are <= cap
    // lexicographically, in decreasing lexicographic order.
    std::function<void(std::size_t, bool)> choose = [&](std::size_t pos, bool below_cap) {
        if (pos == d) {
            if (std::any_of(part.begin(), part.end(), [](int x) { return x != 0; })) {
                CountVector rest(d);
                for (std::size_t i = 0; i < d; ++i) rest[i] = remaining[i] - part[i];
                current.push_back(part);
                vector_partitions(rest, part, current, out);
                current.pop_back();
            }
            return;
        }
        const int hi = below_cap ? remaining[pos] : std::min(remaining[pos], cap[pos]);
        for (int k = hi; k >= 0; --k) {
            part[pos] = k;
            choose(pos + 1, below_cap || k < cap[pos]);
        }
        part[pos] = 0;
    };
    choose(0, false);
}

}  // namespace

std::vector<MultisetPartition> multiset_partitions(const std::vector<int>& a, int blocks) {
    std::map<int, int, std::greater<>> mult;
    for (int x : a) ++mult[x];
    std::vector<int> values;
    CountVector counts;
    for (auto [value, m] : mult) {
        values.push_back(value);
        counts.push_back(m);
    }
    std::vector<std::vector<CountVector>> raw;
    std::vector<CountVector> current;
    if (!a.empty()) vector_partitions(counts, counts, current, raw);

    Integer numerator = 1;
    for (int m : counts) numerator *= factorial(m);

    std::vector<MultisetPartition> out;
    for (const auto& parts : raw) {
        if (blocks > 0 && static_cast<int>(parts.size()) != blocks) continue;
        MultisetPartition mp;
        Integer denominator = 1;
        std::map<CountVector, int> repeats;
        for (const CountVector& part : parts) {
            std::vector<int> seq;
            for (std::size_t i = 0; i < values.size(); ++i) {
                denominator *= factorial(part[i]);
                for (int k = 0; k < part[i]; ++k) seq.push_back(values[i]);
            }
            ++repeats[part];
            mp.parts.push_back(std::move(seq));
        }
        for (const auto& [part, r] : repeats) denominator *= factorial(r);
        mp.set_partitions = numerator / denominator;
        out.push_back(std::move(mp));
    }
    return out;
}

bool refines(const std::vector<int>& finer, const std::vector<int>& coarser) {
    std::vector<int> f = finer, bins = coarser;
    std::sort(f.begin(), f.end(), std::greater<>());
    int sf = 0, sc = 0;
    for (int x : f) sf += x;
    for (int x : bins) sc += x;
    if (sf != sc || f.size() < bins.size()) return false;
    std::function<bool(std::size_t)> place = [&](std::size_t i) {
        if (i == f.size()) return std::all_of(bins.begin(), bins.end(), [](int b) { return b == 0; });
        for (std::size_t b = 0; b < bins.size(); ++b) {
            if (bins[b] < f[i]) continue;
            bool seen = false;
            for (std::size_t c = 0; c < b; ++c) seen = seen || bins[c] == bins[b];
            if (seen) continue;
            bins[b] -= f[i];
            if (place(i + 1)) return true;
            bins[b] += f[i];
        }
        return false;
    };
    return place(0);
}

Integer multiplicity_factorial(const std::vector<int>& a) {
    std::map<int, int> mult;
    for (int x : a) ++mult[x];
    Integer r = 1;
    for (auto [value, m] : mult) r *= factorial(m);
    return r;
}

}  // namespace reconkit
