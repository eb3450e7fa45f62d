#include "reconkit/deck.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <unordered_map>

#include "reconkit/canon.hpp"
#include "reconkit/errors.hpp"

namespace reconkit {

namespace {

struct Subsets {
    std::vector<int> class_of;  // per vertex mask, -1 when edgeless
    std::vector<VertexMask> witness;
    LambdaDeck deck;
};

Subsets classify_subsets(const Graph& g) {
    if (g.size() == 0) throw DomainError("graph has no nonempty induced subgraphs");
    if (g.order() > 16) throw UnsupportedError("N-matrix construction is limited to 16 vertices");
    const VertexMask total = VertexMask{1} << g.order();
    std::vector<int> raw(total, -1);
    std::unordered_map<CanonicalCode, int> index;
    std::vector<IsoClass> found;
    std::vector<VertexMask> first_mask;
    for (VertexMask s = 1; s < total; ++s) {
        if (std::popcount(s) < 2) continue;
        Graph h = induced_subgraph(g, s);
        if (h.size() == 0) continue;
        IsoClass c = iso_class(h);
        auto [it, inserted] = index.emplace(c.code, static_cast<int>(found.size()));
        if (inserted) {
            found.push_back(std::move(c));
            first_mask.push_back(s);
        }
        raw[s] = it->second;
    }
    std::vector<int> order(found.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return found[a].code < found[b].code; });
    std::vector<int> rank_of(found.size());
    for (std::size_t i = 0; i < order.size(); ++i) rank_of[order[i]] = static_cast<int>(i);

    Subsets out;
    out.class_of.assign(total, -1);
    for (VertexMask s = 0; s < total; ++s)
        if (raw[s] >= 0) out.class_of[s] = rank_of[raw[s]];
    for (int i : order) {
        out.deck.classes.push_back(found[i]);
        out.witness.push_back(first_mask[i]);
    }
    return out;
}

struct MatrixTraits {
    using Key = std::vector<std::pair<Count, Count>>;
    const NMatrix& m;
    const std::vector<VE>& ve;

    Key key(int x, const std::vector<int>& cell) const {
        Key k;
        k.reserve(cell.size());
        for (int y : cell) k.emplace_back(m.at(x, y), m.at(y, x));
        std::sort(k.begin(), k.end());
        return k;
    }

    std::vector<std::uint64_t> certificate(const std::vector<int>& order) const {
        std::vector<std::uint64_t> cert;
        const std::size_t n = order.size();
        cert.reserve(2 * n + n * n);
        for (int x : order) {
            cert.push_back(static_cast<std::uint64_t>(ve[x].v));
            cert.push_back(static_cast<std::uint64_t>(ve[x].e));
        }
        for (int x : order)
            for (int y : order) cert.push_back(m.at(x, y));
        return cert;
    }
};

}  // namespace

LambdaDeck lambda_deck(const Graph& g) { return classify_subsets(g).deck; }

NMatrix nmatrix(const Graph& g) {
    Subsets s = classify_subsets(g);
    const std::size_t size = s.deck.classes.size();
    NMatrix out;
    out.rows.assign(size, std::vector<Count>(size, 0));
    for (std::size_t i = 0; i < size; ++i) {
        const VertexMask w = s.witness[i];
        for (VertexMask t = w;; t = (t - 1) & w) {
            if (t != 0 && s.class_of[t] >= 0) ++out.rows[i][s.class_of[t]];
            if (t == 0) break;
        }
    }
    out.labels = std::move(s.deck);
    return out;
}

NMatrix strip(const NMatrix& n) { return NMatrix{n.rows, std::nullopt}; }

void validate_shape(const NMatrix& n) {
    if (n.size() == 0) throw InvalidMatrixError("empty N-matrix");
    for (int i = 0; i < n.size(); ++i) {
        if (static_cast<int>(n.rows[i].size()) != n.size()) throw InvalidMatrixError("N-matrix is not square");
        if (n.rows[i][i] != 1) throw InvalidMatrixError("N-matrix diagonal entry is not 1");
    }
}

int k2_row(const NMatrix& n) {
    validate_shape(n);
    int found = -1;
    for (int i = 0; i < n.size(); ++i) {
        int nonzero = 0;
        for (Count x : n.rows[i]) nonzero += x != 0;
        if (nonzero == 1) {
            if (found >= 0) throw InvalidMatrixError("N-matrix has more than one row with a single nonzero entry");
            found = i;
        }
    }
    if (found < 0) throw InvalidMatrixError("N-matrix has no K2 row");
    return found;
}

int top_row(const NMatrix& n) {
    validate_shape(n);
    int found = -1;
    for (int i = 0; i < n.size(); ++i) {
        bool below_other = false;
        for (int k = 0; k < n.size() && !below_other; ++k) below_other = k != i && n.rows[k][i] != 0;
        if (!below_other) {
            if (found >= 0) throw InvalidMatrixError("N-matrix has more than one maximal row");
            found = i;
        }
    }
    if (found < 0) throw InvalidMatrixError("N-matrix has no maximal row");
    return found;
}

std::vector<VE> infer_v_e(const NMatrix& n) {
    const int k2 = k2_row(n);
    const int size = n.size();
    for (int i = 0; i < size; ++i) {
        if (n.rows[i][k2] == 0) throw InvalidMatrixError("a row does not contain K2");
        for (int j = 0; j < i; ++j) {
            if (n.rows[i][j] != 0 && n.rows[j][i] != 0) throw InvalidMatrixError("N-matrix order is not antisymmetric");
        }
    }
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) {
            if (j == i || n.rows[i][j] == 0) continue;
            for (int k = 0; k < size; ++k)
                if (n.rows[j][k] != 0 && n.rows[i][k] == 0) throw InvalidMatrixError("N-matrix order is not transitive");
        }
    std::vector<int> down(static_cast<std::size_t>(size), 0);
    for (int i = 0; i < size; ++i)
        for (Count x : n.rows[i]) down[i] += x != 0;
    std::vector<int> order(static_cast<std::size_t>(size));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return down[a] < down[b]; });

    std::vector<int> rank(static_cast<std::size_t>(size), 0);
    for (int i : order) {
        int r = 2;
        for (int j = 0; j < size; ++j)
            if (j != i && n.rows[i][j] != 0) r = std::max(r, rank[j] + 1);
        rank[i] = r;
    }
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) {
            if (j == i || n.rows[i][j] == 0) continue;
            bool cover = true;
            for (int m = 0; m < size && cover; ++m) {
                if (m != i && m != j && n.rows[i][m] != 0 && n.rows[m][j] != 0) cover = false;
            }
            if (cover && rank[i] != rank[j] + 1) throw InvalidMatrixError("N-matrix poset is not graded");
        }
    top_row(n);
    std::vector<VE> out(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) {
        const Count e = n.rows[i][k2];
        if (e > static_cast<Count>(rank[i]) * static_cast<Count>(rank[i] - 1) / 2) {
            throw InvalidMatrixError("N-matrix row has more edges than its vertex count allows");
        }
        out[i] = {rank[i], static_cast<int>(e)};
    }
    return out;
}

NMatrix permute(const NMatrix& n, const std::vector<int>& perm) {
    NMatrix out;
    const std::size_t size = perm.size();
    out.rows.assign(size, std::vector<Count>(size, 0));
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) out.rows[i][j] = n.rows[perm[i]][perm[j]];
    if (n.labels) {
        LambdaDeck deck;
        for (int p : perm) deck.classes.push_back(n.labels->classes[p]);
        out.labels = std::move(deck);
    }
    return out;
}

NMatrix sort_by_ve(const NMatrix& n) {
    const std::vector<VE> ve = infer_v_e(n);
    std::vector<int> perm(ve.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return ve[a] < ve[b]; });
    return permute(n, perm);
}

NMatrix principal_submatrix(const NMatrix& n, const std::vector<int>& rows) { return permute(n, rows); }

Elp elp_from_nmatrix(const NMatrix& n) {
    const std::vector<VE> ve = infer_v_e(n);
    Elp p;
    for (const VE& x : ve) p.ranks.push_back(x.v);
    for (int i = 0; i < n.size(); ++i)
        for (int j = 0; j < n.size(); ++j)
            if (ve[i].v == ve[j].v + 1 && n.rows[i][j] != 0) p.covers.push_back({j, i, n.rows[i][j]});
    return p;
}

NMatrix nmatrix_from_elp(const Elp& p) {
    const int size = p.size();
    if (size == 0) throw InvalidMatrixError("empty poset");
    std::vector<std::vector<Count>> label(static_cast<std::size_t>(size), std::vector<Count>(size, 0));
    for (const ElpCover& c : p.covers) {
        if (c.from < 0 || c.to < 0 || c.from >= size || c.to >= size) throw InvalidMatrixError("cover node out of range");
        if (p.ranks[c.to] != p.ranks[c.from] + 1) throw InvalidMatrixError("cover does not raise rank by one");
        if (c.label == 0) throw InvalidMatrixError("cover label must be positive");
        if (label[c.to][c.from] != 0) throw InvalidMatrixError("duplicate cover");
        label[c.to][c.from] = c.label;
    }
    std::vector<int> order(static_cast<std::size_t>(size));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return p.ranks[a] < p.ranks[b]; });
    if (p.ranks[order.front()] != 2) throw InvalidMatrixError("minimum rank must be 2");

    NMatrix out;
    out.rows.assign(static_cast<std::size_t>(size), std::vector<Count>(size, 0));
    for (int i : order) {
        out.rows[i][i] = 1;
        const int r = p.ranks[i] - 1;
        for (int j : order) {
            if (p.ranks[j] > r) break;
            if (p.ranks[j] == r) {
                out.rows[i][j] = label[i][j];
                continue;
            }
            Integer sum = 0;
            for (int k = 0; k < size; ++k) {
                if (p.ranks[k] != r || label[i][k] == 0) continue;
                sum += Integer(label[i][k]) * out.rows[k][j];
            }
            Integer q = exact_div<InvalidMatrixError>(sum, Integer(r + 1 - p.ranks[j]), "nmatrix_from_elp");
            out.rows[i][j] = static_cast<Count>(q);
        }
    }
    return out;
}

std::vector<ChildMatrix> child_nmatrices(const NMatrix& n) {
    const std::vector<VE> ve = infer_v_e(n);
    const int top = top_row(n);
    std::map<std::vector<std::vector<Count>>, Count> merged;
    for (int j = 0; j < n.size(); ++j) {
        if (ve[j].v != ve[top].v - 1) continue;
        std::vector<int> keep;
        for (int k = 0; k < n.size(); ++k)
            if (n.rows[j][k] != 0) keep.push_back(k);
        NMatrix child = canonical_nmatrix(principal_submatrix(strip(n), keep));
        Count& m = merged[child.rows];
        m = checked_add(m, n.rows[top][j]);
    }
    std::vector<ChildMatrix> out;
    for (auto& [rows, mult] : merged) out.push_back({NMatrix{rows, std::nullopt}, mult});
    return out;
}

Integer count_empty_induced(const NMatrix& n, int r) {
    const std::vector<VE> ve = infer_v_e(n);
    const int top = top_row(n);
    const int v = ve[top].v;
    if (r < 2 || r > v) throw DomainError("count_empty_induced: r outside [2, v(G)]");
    Integer total = binomial(v, r);
    for (int j = 0; j < n.size(); ++j)
        if (ve[j].v == r) total -= n.rows[top][j];
    if (total < 0) throw InvalidMatrixError("negative edgeless subgraph count");
    return total;
}

std::vector<std::vector<int>> elp_automorphisms(const Elp& p) {
    const int size = p.size();
    std::vector<std::vector<Count>> up(static_cast<std::size_t>(size), std::vector<Count>(size, 0));
    for (const ElpCover& c : p.covers) up[c.from][c.to] = c.label;

    // Colour refinement on the labelled Hasse diagram.
    std::vector<int> colour(p.ranks.begin(), p.ranks.end());
    for (int round = 0; round < size + 1; ++round) {
        using Signature = std::pair<int, std::vector<std::tuple<int, Count, int>>>;
        std::vector<Signature> sig(static_cast<std::size_t>(size));
        for (int x = 0; x < size; ++x) {
            sig[x].first = colour[x];
            for (int y = 0; y < size; ++y) {
                if (up[x][y]) sig[x].second.emplace_back(1, up[x][y], colour[y]);
                if (up[y][x]) sig[x].second.emplace_back(0, up[y][x], colour[y]);
            }
            std::sort(sig[x].second.begin(), sig[x].second.end());
        }
        std::map<Signature, int> ids;
        for (const auto& s : sig) ids.emplace(s, 0);
        int next = 0;
        for (auto& [s, id] : ids) id = next++;
        std::vector<int> refined(static_cast<std::size_t>(size));
        for (int x = 0; x < size; ++x) refined[x] = ids[sig[x]];
        const bool stable = std::set<int>(refined.begin(), refined.end()).size() ==
                            std::set<int>(colour.begin(), colour.end()).size();
        colour = std::move(refined);
        if (stable) break;
    }

    std::vector<int> order(static_cast<std::size_t>(size));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return p.ranks[a] < p.ranks[b]; });

    std::vector<std::vector<int>> found;
    std::vector<int> image(static_cast<std::size_t>(size), -1);
    std::vector<bool> used(static_cast<std::size_t>(size), false);
    auto extend = [&](auto&& self, std::size_t step) -> void {
        if (step == order.size()) {
            bool identity = true;
            for (int x = 0; x < size; ++x) identity = identity && image[x] == x;
            if (!identity) found.push_back(image);
            return;
        }
        const int x = order[step];
        for (int y = 0; y < size; ++y) {
            if (used[y] || colour[y] != colour[x]) continue;
            bool ok = true;
            for (std::size_t s = 0; s < step && ok; ++s) {
                const int a = order[s];
                ok = up[a][x] == up[image[a]][y] && up[x][a] == up[y][image[a]];
            }
            if (!ok) continue;
            image[x] = y;
            used[y] = true;
            self(self, step + 1);
            used[y] = false;
            image[x] = -1;
        }
    };
    extend(extend, 0);
    return found;
}

NMatrix canonical_nmatrix(const NMatrix& n) {
    const std::vector<VE> ve = infer_v_e(n);
    std::map<VE, std::vector<int>> groups;
    for (int i = 0; i < n.size(); ++i) groups[ve[i]].push_back(i);
    canon::Cells initial;
    for (auto& [key, members] : groups) initial.push_back(members);
    MatrixTraits traits{n, ve};
    canon::Labelling l = canon::canonical_labelling(traits, std::move(initial));
    NMatrix out = permute(strip(n), l.order);
    return out;
}

}  // namespace reconkit
