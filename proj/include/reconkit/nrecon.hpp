#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "reconkit/deck.hpp"
#include "reconkit/integer.hpp"
#include "reconkit/polynomial.hpp"

namespace reconkit {

/// Spanning-family descriptor: (vertices, edges) per component.
using FamilySpec = std::vector<std::pair<int, int>>;

/// Invariants of the top graph of an N-matrix.
struct InvariantReport {
    Polynomial charpoly;
    Integer tr = 0;
    Integer ham = 0;
    std::map<int, Integer> psi;  // i in [2, v]
    std::map<int, Integer> uni;  // r in [3, v]
    std::optional<RankPolynomial> rankpoly;
};

/// Invariants reconstructed from an unlabelled N-matrix alone. Every node of
/// the poset is a row of the (v, e)-sorted matrix; node values are computed on
/// demand and memoised, always from strictly smaller nodes or from already
/// known quantities of the same node. Not thread-safe; use one instance per
/// thread.
class Reconstruction {
public:
    explicit Reconstruction(const NMatrix& n);

    int size() const noexcept { return static_cast<int>(ve_.size()); }
    int top() const noexcept { return size() - 1; }
    const NMatrix& matrix() const noexcept { return n_; }
    VE ve(int node) const { return ve_[node]; }
    /// Row index of the (v, e)-sorted matrix for a given original row.
    const std::vector<int>& sorted_from_original() const noexcept { return sorted_of_; }

    Integer psi(int node, int i);
    Integer p(int node, const CycleSeq& a);
    Integer c(int node, const CycleSeq& a);
    Integer con(int node, const CycleSeq& a);
    Integer q(int node, const std::vector<CycleSeq>& a, const std::vector<int>& b, int m);
    Integer t(int node, const std::vector<CycleSeq>& a, const std::vector<int>& b, int m);

    Integer tr(int node);
    Integer ham(int node);
    Integer uni(int node, int r);
    Polynomial charpoly(int node);
    /// <G, F_lambda> for an elementary spanning type lambda (partition of v).
    Integer elementary_count(int node, const std::vector<int>& lambda);

    Integer kedge(int node, int k);
    /// Spanning subgraphs with the given component shapes (all with edges).
    Integer lcompo(int node, FamilySpec spec);
    /// The same count assembled from k-edge counts of smaller nodes.
    Integer lcompo_direct(int node, FamilySpec spec);
    RankPolynomial rankpoly(int node);

    InvariantReport report(bool with_rankpoly);

private:
    Integer w(int node, const CycleSeq& a, int b);
    Integer w_kedge(int node, int n, int k);
    std::vector<int> rows_below(int node, int v) const;

    NMatrix n_;
    std::vector<VE> ve_;
    std::vector<int> sorted_of_;
    std::map<std::pair<int, int>, Integer> psi_cache_;
    std::map<std::pair<int, CycleSeq>, Integer> c_cache_, con_cache_;
    std::map<std::tuple<int, CycleSeq, int>, Integer> w_cache_;
    std::map<std::tuple<int, int, int>, Integer> wk_cache_;
    std::map<int, Integer> tr_cache_, ham_cache_;
    std::map<std::pair<int, int>, Integer> kedge_cache_;
    std::map<std::pair<int, FamilySpec>, Integer> lcompo_cache_;
    std::map<int, Polynomial> poly_cache_;
};

/// Convenience wrapper: the top-node report.
InvariantReport reconstruct(const NMatrix& n, bool with_rankpoly = false);

/// Ground-truth report straight from the graph via the oracles.
InvariantReport direct_report(const Graph& g, bool with_rankpoly = false);

}  // namespace reconkit
