#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace reconkit::canon {

/// Ordered partition of [0, n) into cells.
using Cells = std::vector<std::vector<int>>;

/// Result of a canonical labelling search. `order[i]` is the original vertex
/// placed at canonical position i; `certificate` is the minimal leaf certificate.
struct Labelling {
    std::vector<int> order;
    std::vector<std::uint64_t> certificate;
    std::vector<std::vector<int>> automorphisms;
};

/// Individualisation-refinement search for the lexicographically least leaf
/// certificate. `Traits` supplies:
///   using Key = ...;                        // totally ordered
///   Key key(int x, const std::vector<int>& cell) const;
///   std::vector<std::uint64_t> certificate(const std::vector<int>& order) const;
/// `key` must be invariant under relabelling, i.e. depend only on how x relates
/// to the members of `cell`.
template <class Traits>
class Search {
public:
    Search(const Traits& traits, Cells initial) : traits_(traits), initial_(std::move(initial)) {}

    Labelling run() {
        Cells cells = initial_;
        std::vector<int> seq;
        descend(cells, seq);
        return {best_order_, best_cert_, automorphisms_};
    }

private:
    static constexpr int kContinue = INT_MAX;

    void refine(Cells& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t w = 0; w < cells.size(); ++w) {
                const std::vector<int> splitter = cells[w];
                for (std::size_t x = 0; x < cells.size(); ++x) {
                    if (cells[x].size() == 1) continue;
                    using Key = typename Traits::Key;
                    std::vector<std::pair<Key, int>> keyed;
                    keyed.reserve(cells[x].size());
                    for (int v : cells[x]) keyed.emplace_back(traits_.key(v, splitter), v);
                    std::stable_sort(keyed.begin(), keyed.end(),
                                     [](const auto& a, const auto& b) { return a.first < b.first; });
                    if (!(keyed.front().first < keyed.back().first)) continue;
                    std::vector<std::vector<int>> parts;
                    for (std::size_t k = 0; k < keyed.size(); ++k) {
                        if (k == 0 || keyed[k - 1].first < keyed[k].first) parts.emplace_back();
                        parts.back().push_back(keyed[k].second);
                    }
                    cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(x));
                    cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(x), parts.begin(), parts.end());
                    changed = true;
                }
            }
        }
    }

    static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
        std::size_t k = 0;
        while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
        return static_cast<int>(k);
    }

    std::vector<int> automorphism_between(const std::vector<int>& from, const std::vector<int>& to) const {
        std::vector<int> gamma(from.size());
        for (std::size_t i = 0; i < from.size(); ++i) gamma[from[i]] = to[i];
        return gamma;
    }

    int leaf(const Cells& cells, const std::vector<int>& seq) {
        std::vector<int> order;
        order.reserve(cells.size());
        for (const auto& c : cells) order.push_back(c.front());
        std::vector<std::uint64_t> cert = traits_.certificate(order);
        if (!have_first_) {
            have_first_ = true;
            first_cert_ = best_cert_ = std::move(cert);
            first_order_ = best_order_ = order;
            first_seq_ = best_seq_ = seq;
            return kContinue;
        }
        if (cert == first_cert_) {
            automorphisms_.push_back(automorphism_between(first_order_, order));
            return common_prefix(seq, first_seq_);
        }
        if (cert < best_cert_) {
            best_cert_ = std::move(cert);
            best_order_ = order;
            best_seq_ = seq;
            return kContinue;
        }
        if (cert == best_cert_) {
            automorphisms_.push_back(automorphism_between(best_order_, order));
            return common_prefix(seq, best_seq_);
        }
        return kContinue;
    }

    bool same_orbit(const std::vector<int>& seq, const std::vector<int>& explored, int v) const {
        const std::size_t n = initial_size();
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& gamma : automorphisms_) {
            bool fixes = std::all_of(seq.begin(), seq.end(), [&](int s) { return gamma[s] == s; });
            if (!fixes) continue;
            for (std::size_t x = 0; x < n; ++x) {
                int a = find(static_cast<int>(x)), b = find(gamma[x]);
                if (a != b) parent[a] = b;
            }
        }
        const int root = find(v);
        return std::any_of(explored.begin(), explored.end(), [&](int u) { return find(u) == root; });
    }

    std::size_t initial_size() const {
        std::size_t n = 0;
        for (const auto& c : initial_) n += c.size();
        return n;
    }

    int descend(Cells& cells, std::vector<int>& seq) {
        refine(cells);
        const auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
        if (target == cells.end()) return leaf(cells, seq);
        const auto index = static_cast<std::size_t>(target - cells.begin());
        const int depth = static_cast<int>(seq.size());
        std::vector<int> candidates = cells[index];
        std::sort(candidates.begin(), candidates.end());
        std::vector<int> explored;
        for (int v : candidates) {
            if (!explored.empty() && same_orbit(seq, explored, v)) continue;
            Cells child = cells;
            std::vector<int> rest;
            for (int u : child[index])
                if (u != v) rest.push_back(u);
            child[index] = {v};
            child.insert(child.begin() + static_cast<std::ptrdiff_t>(index) + 1, rest);
            seq.push_back(v);
            const int r = descend(child, seq);
            seq.pop_back();
            explored.push_back(v);
            if (r < depth) return r;
        }
        return kContinue;
    }

    const Traits& traits_;
    Cells initial_;
    bool have_first_ = false;
    std::vector<std::uint64_t> first_cert_, best_cert_;
    std::vector<int> first_order_, best_order_, first_seq_, best_seq_;
    std::vector<std::vector<int>> automorphisms_;
};

template <class Traits>
Labelling canonical_labelling(const Traits& traits, Cells initial) {
    return Search<Traits>(traits, std::move(initial)).run();
}

}  // namespace reconkit::canon
