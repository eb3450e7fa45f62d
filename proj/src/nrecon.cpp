#include "reconkit/nrecon.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "reconkit/errors.hpp"
#include "reconkit/oracle.hpp"
#include "reconkit/partitions.hpp"

namespace reconkit {

namespace {

Integer sign(int exponent) { return exponent % 2 == 0 ? Integer(1) : Integer(-1); }

CycleSeq twos(int k) { return CycleSeq(static_cast<std::size_t>(k), 2); }

// Largest connected union of cycles with these lengths.
int connected_vertex_bound(const CycleSeq& a) {
    int bound = a.front();
    for (std::size_t i = 1; i < a.size(); ++i) bound += a[i] - 1;
    return bound;
}

Integer family_multiplicity(const FamilySpec& spec) {
    Integer r = 1;
    for (std::size_t i = 0; i < spec.size();) {
        std::size_t j = i;
        while (j < spec.size() && spec[j] == spec[i]) ++j;
        r *= factorial(static_cast<int>(j - i));
        i = j;
    }
    return r;
}

}  // namespace

Reconstruction::Reconstruction(const NMatrix& n) {
    const std::vector<VE> ve = infer_v_e(n);
    std::vector<int> perm(ve.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return ve[a] < ve[b]; });
    n_ = permute(strip(n), perm);
    for (int p : perm) ve_.push_back(ve[p]);
    sorted_of_.assign(perm.size(), 0);
    for (std::size_t i = 0; i < perm.size(); ++i) sorted_of_[perm[i]] = static_cast<int>(i);
    if (ve_.front() != VE{2, 1}) throw InvalidMatrixError("smallest row is not K2");
    for (int i = 0; i + 1 < size(); ++i)
        if (ve_[i].v == ve_.back().v) throw InvalidMatrixError("top row is not unique");
}

std::vector<int> Reconstruction::rows_below(int node, int v) const {
    std::vector<int> out;
    for (int j = 0; j <= node; ++j)
        if (ve_[j].v == v && n_.at(node, j) != 0) out.push_back(j);
    return out;
}

Integer Reconstruction::psi(int node, int i) {
    const VE x = ve_[node];
    if (i < 2 || i > x.v) return 0;
    if (i == 2) return x.e;
    if (i == x.v) return ham(node);
    const auto key = std::make_pair(node, i);
    if (auto it = psi_cache_.find(key); it != psi_cache_.end()) return it->second;
    Integer sum = 0;
    for (int j : rows_below(node, x.v - 1)) sum += Integer(n_.at(node, j)) * psi(j, i);
    Integer value = exact_div<InvalidMatrixError>(sum, Integer(x.v - i), "cycle count reduction");
    psi_cache_.emplace(key, value);
    return value;
}

Integer Reconstruction::p(int node, const CycleSeq& a) {
    Integer r = 1;
    for (int len : a) r *= psi(node, len);
    return r;
}

Integer Reconstruction::c(int node, const CycleSeq& raw) {
    if (raw.empty()) throw DomainError("cycle sequence must be nonempty");
    const CycleSeq a = normalized(raw);
    const int v = ve_[node].v;
    if (a.back() < 2) throw DomainError("cycle lengths must be at least 2");
    if (a.front() > v) return 0;
    if (a.front() == v) return p(node, a);
    const auto key = std::make_pair(node, a);
    if (auto it = c_cache_.find(key); it != c_cache_.end()) return it->second;
    Integer total = 0;
    for (int j = 0; j <= node; ++j) {
        const Count mult = n_.at(node, j);
        if (mult == 0) continue;
        total += sign(v - ve_[j].v) * Integer(mult) * p(j, a);
    }
    c_cache_.emplace(key, total);
    return total;
}

Integer Reconstruction::w(int node, const CycleSeq& a, int b) {
    const auto key = std::make_tuple(node, a, b);
    if (auto it = w_cache_.find(key); it != w_cache_.end()) return it->second;
    Integer total = 0;
    for (int j : rows_below(node, b)) total += Integer(n_.at(node, j)) * con(j, a);
    w_cache_.emplace(key, total);
    return total;
}

Integer Reconstruction::q(int node, const std::vector<CycleSeq>& a, const std::vector<int>& b, int m) {
    if (a.size() != b.size()) throw DomainError("Q: sequence list and size list differ in length");
    Integer total = 0;
    for (int r : rows_below(node, m)) {
        Integer prod = n_.at(node, r);
        for (std::size_t i = 0; i < a.size() && prod != 0; ++i) prod *= w(r, normalized(a[i]), b[i]);
        total += prod;
    }
    return total;
}

Integer Reconstruction::t(int node, const std::vector<CycleSeq>& a, const std::vector<int>& b, int m) {
    const int v = ve_[node].v;
    int floor = 2;
    for (int x : b) floor = std::max(floor, x);
    Integer total = 0;
    for (int pp = floor; pp <= m; ++pp) total += sign(m - pp) * binomial(v - pp, m - pp) * q(node, a, b, pp);
    return total;
}

Integer Reconstruction::con(int node, const CycleSeq& raw) {
    if (raw.empty()) throw DomainError("cycle sequence must be nonempty");
    const CycleSeq a = normalized(raw);
    const int v = ve_[node].v;
    if (a.back() < 2) throw DomainError("cycle lengths must be at least 2");
    if (a.front() > v) return 0;
    if (a.front() == v) return c(node, a);
    const auto key = std::make_pair(node, a);
    if (auto it = con_cache_.find(key); it != con_cache_.end()) return it->second;

    Integer value = c(node, a);
    for (const MultisetPartition& mp : multiset_partitions(a)) {
        const int parts = static_cast<int>(mp.parts.size());
        if (parts < 2 || 2 * parts > v) continue;
        std::vector<int> lo, hi;
        for (const CycleSeq& part : mp.parts) {
            lo.push_back(std::max(2, part.front()));
            hi.push_back(std::min(v - 2 * (parts - 1), connected_vertex_bound(part)));
        }
        std::vector<int> b(static_cast<std::size_t>(parts));
        Integer sum_t = 0;
        std::function<void(int, int)> choose = [&](int i, int left) {
            if (i == parts - 1) {
                if (left < lo[i] || left > hi[i]) return;
                b[i] = left;
                sum_t += t(node, mp.parts, b, v);
                return;
            }
            for (int x = lo[i]; x <= hi[i] && x <= left; ++x) {
                b[i] = x;
                choose(i + 1, left - x);
            }
        };
        choose(0, v);
        value -= mp.set_partitions * sum_t;
    }
    if (value < 0) throw InvalidMatrixError("negative connected cover count");
    con_cache_.emplace(key, value);
    return value;
}

Integer Reconstruction::tr(int node) {
    const int v = ve_[node].v;
    if (v == 2) return 1;
    if (auto it = tr_cache_.find(node); it != tr_cache_.end()) return it->second;
    Integer value = exact_div<InvalidMatrixError>(con(node, twos(v - 1)), factorial(v - 1), "spanning tree count");
    tr_cache_.emplace(node, value);
    return value;
}

Integer Reconstruction::uni(int node, int r) {
    const int v = ve_[node].v;
    if (r < 3 || r > v) return 0;
    if (r == v) return ham(node);
    CycleSeq a = twos(v - r + 1);
    a.front() = r;
    return exact_div<InvalidMatrixError>(con(node, a), factorial(v - r), "unicyclic count");
}

Integer Reconstruction::ham(int node) {
    const int v = ve_[node].v;
    if (v == 2) return 1;
    if (auto it = ham_cache_.find(node); it != ham_cache_.end()) return it->second;
    Integer rest = con(node, twos(v)) - factorial(v - 1) * stirling2(v, v - 1) * tr(node);
    for (int i = 3; i < v; ++i) rest -= factorial(v) * uni(node, i);
    Integer value = exact_div<InvalidMatrixError>(rest, factorial(v), "hamiltonian cycle count");
    if (value < 0) throw InvalidMatrixError("negative hamiltonian cycle count");
    ham_cache_.emplace(node, value);
    return value;
}

Integer Reconstruction::elementary_count(int node, const std::vector<int>& raw) {
    const std::vector<int> lambda = normalized(raw);
    const int v = ve_[node].v;
    if (std::accumulate(lambda.begin(), lambda.end(), 0) != v || lambda.back() < 2) {
        throw DomainError("elementary type must be a partition of v(G) into parts >= 2");
    }
    if (lambda.size() == 1) return ham(node);
    return exact_div<InvalidMatrixError>(c(node, lambda), multiplicity_factorial(lambda), "elementary count");
}

Polynomial Reconstruction::charpoly(int node) {
    if (auto it = poly_cache_.find(node); it != poly_cache_.end()) return it->second;
    const int v = ve_[node].v;
    Polynomial poly;
    poly.coeffs.assign(static_cast<std::size_t>(v) + 1, 0);
    poly.coeffs[0] = 1;
    if (v == 2) {
        poly.coeffs[2] = -1;
    } else {
        const std::vector<int> children = rows_below(node, v - 1);
        for (int i = 1; i < v; ++i) {
            Integer sum = 0;
            for (int j : children) sum += Integer(n_.at(node, j)) * charpoly(j).coeffs[i];
            poly.coeffs[i] = exact_div<InvalidMatrixError>(sum, Integer(v - i), "characteristic coefficient");
        }
        Integer top = 0;
        for (const auto& lambda : integer_partitions(v, 2, v)) {
            int cyc = 0;
            for (int part : lambda) cyc += part >= 3;
            Integer weight = Integer(1) << cyc;
            if (lambda.size() % 2 == 1) weight = -weight;
            top += weight * elementary_count(node, lambda);
        }
        poly.coeffs[v] = top;
    }
    poly_cache_.emplace(node, poly);
    return poly;
}

Integer Reconstruction::kedge(int node, int k) {
    const VE x = ve_[node];
    if (k < x.v - 1 || k > x.e) return 0;
    if (k == x.v - 1) return tr(node);
    const auto key = std::make_pair(node, k);
    if (auto it = kedge_cache_.find(key); it != kedge_cache_.end()) return it->second;
    Integer rest = con(node, twos(k));
    for (int i = x.v - 1; i < k; ++i) rest -= factorial(i) * stirling2(k, i) * kedge(node, i);
    Integer value = exact_div<InvalidMatrixError>(rest, factorial(k), "connected spanning subgraph count");
    if (value < 0) throw InvalidMatrixError("negative connected spanning subgraph count");
    kedge_cache_.emplace(key, value);
    return value;
}

Integer Reconstruction::lcompo(int node, FamilySpec spec) {
    std::sort(spec.begin(), spec.end(), std::greater<>());
    int total_vertices = 0;
    for (auto [nv, m] : spec) {
        if (nv < 2 || m < nv - 1) throw DomainError("family components need at least a spanning tree");
        total_vertices += nv;
    }
    if (total_vertices != ve_[node].v) throw DomainError("family does not span the graph");
    for (auto [nv, m] : spec)
        if (m > nv * (nv - 1) / 2) return 0;
    if (spec.size() == 1) return kedge(node, spec.front().second);
    const auto key = std::make_pair(node, spec);
    if (auto it = lcompo_cache_.find(key); it != lcompo_cache_.end()) return it->second;

    std::vector<CycleSeq> a;
    std::vector<int> b;
    for (auto [nv, m] : spec) {
        a.push_back(twos(m));
        b.push_back(nv);
    }
    Integer rest = t(node, a, b, ve_[node].v);
    const std::size_t l = spec.size();
    std::vector<int> qs(l);
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
        if (i == l) {
            bool all_max = true;
            for (std::size_t k = 0; k < l; ++k) all_max = all_max && qs[k] == spec[k].second;
            if (all_max) return;
            FamilySpec smaller;
            Integer coeff = 1;
            for (std::size_t k = 0; k < l; ++k) {
                smaller.emplace_back(spec[k].first, qs[k]);
                coeff *= factorial(qs[k]) * stirling2(spec[k].second, qs[k]);
            }
            std::sort(smaller.begin(), smaller.end(), std::greater<>());
            rest -= coeff * family_multiplicity(smaller) * lcompo(node, smaller);
            return;
        }
        const int nv = spec[i].first;
        for (int qi = nv - 1; qi <= std::min(spec[i].second, nv * (nv - 1) / 2); ++qi) {
            qs[i] = qi;
            walk(i + 1);
        }
    };
    walk(0);
    Integer den = family_multiplicity(spec);
    for (auto [nv, m] : spec) den *= factorial(m);
    Integer value = exact_div<InvalidMatrixError>(rest, den, "spanning family count");
    if (value < 0) throw InvalidMatrixError("negative spanning family count");
    lcompo_cache_.emplace(key, value);
    return value;
}

Integer Reconstruction::w_kedge(int node, int nv, int k) {
    const auto key = std::make_tuple(node, nv, k);
    if (auto it = wk_cache_.find(key); it != wk_cache_.end()) return it->second;
    Integer total = 0;
    for (int j : rows_below(node, nv)) total += Integer(n_.at(node, j)) * kedge(j, k);
    wk_cache_.emplace(key, total);
    return total;
}

Integer Reconstruction::lcompo_direct(int node, FamilySpec spec) {
    std::sort(spec.begin(), spec.end(), std::greater<>());
    if (spec.size() == 1) return kedge(node, spec.front().second);
    const int v = ve_[node].v;
    int floor = 2;
    for (auto [nv, m] : spec) floor = std::max(floor, nv);
    Integer total = 0;
    for (int pp = floor; pp <= v; ++pp) {
        Integer qp = 0;
        for (int r : rows_below(node, pp)) {
            Integer prod = n_.at(node, r);
            for (std::size_t i = 0; i < spec.size() && prod != 0; ++i)
                prod *= w_kedge(r, spec[i].first, spec[i].second);
            qp += prod;
        }
        total += sign(v - pp) * qp;
    }
    return exact_div<InvalidMatrixError>(total, family_multiplicity(spec), "spanning family count");
}

RankPolynomial Reconstruction::rankpoly(int node) {
    RankPolynomial out;
    out[{0, 0}] = 1;
    for (int h = 0; h <= node; ++h) {
        const Count mult = n_.at(node, h);
        if (mult == 0) continue;
        const VE x = ve_[h];
        for (const auto& sizes : integer_partitions(x.v, 2, x.v)) {
            const std::size_t l = sizes.size();
            FamilySpec spec(l);
            std::function<void(std::size_t, int)> walk = [&](std::size_t i, int edges) {
                if (i == l) {
                    Integer count = lcompo(h, spec);
                    if (count == 0) return;
                    const int li = static_cast<int>(l);
                    out[{x.v - li, edges - x.v + li}] += Integer(mult) * count;
                    return;
                }
                const int nv = sizes[i];
                int cap = nv * (nv - 1) / 2;
                if (i > 0 && sizes[i - 1] == nv) cap = std::min(cap, spec[i - 1].second);
                for (int qi = nv - 1; qi <= cap && edges + qi <= x.e; ++qi) {
                    spec[i] = {nv, qi};
                    walk(i + 1, edges + qi);
                }
            };
            walk(0, 0);
        }
    }
    return out;
}

InvariantReport Reconstruction::report(bool with_rankpoly) {
    const int g = top();
    const int v = ve_[g].v;
    InvariantReport r;
    r.charpoly = charpoly(g);
    r.tr = tr(g);
    r.ham = ham(g);
    for (int i = 2; i <= v; ++i) r.psi[i] = psi(g, i);
    for (int i = 3; i <= v; ++i) r.uni[i] = uni(g, i);
    if (with_rankpoly) r.rankpoly = rankpoly(g);
    return r;
}

InvariantReport reconstruct(const NMatrix& n, bool with_rankpoly) {
    return Reconstruction(n).report(with_rankpoly);
}

InvariantReport direct_report(const Graph& g, bool with_rankpoly) {
    InvariantReport r;
    r.charpoly = oracle::charpoly(g);
    r.tr = oracle::tr(g);
    r.ham = oracle::ham(g);
    for (int i = 2; i <= g.order(); ++i) r.psi[i] = oracle::psi(g, i);
    for (int i = 3; i <= g.order(); ++i) r.uni[i] = oracle::uni(g, i);
    if (with_rankpoly) r.rankpoly = oracle::rankpoly(g);
    return r;
}

}  // namespace reconkit
