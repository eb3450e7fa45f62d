#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "reconkit/integer.hpp"

namespace reconkit {

/// Monic-style coefficient list c_0..c_n of sum c_i x^(n-i).
struct Polynomial {
    std::vector<Integer> coeffs;

    int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
    const Integer& operator[](int i) const { return coeffs[i]; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

/// d/dx, as a polynomial of degree n-1 in the same coefficient convention.
Polynomial derivative(const Polynomial& p);
/// Sum of polynomials of equal degree.
Polynomial add(const Polynomial& a, const Polynomial& b);
/// Human readable form, e.g. "x^3 - 2x".
std::string to_string(const Polynomial& p, const std::string& var = "x");

/// Rank polynomial sum rho_rs x^r y^s, keyed by (r, s). Zero terms are absent.
using RankPolynomial = std::map<std::pair<int, int>, Integer>;

std::string to_string(const RankPolynomial& p);

/// Non-increasing sequence of cycle lengths, each >= 2 (2 stands for K2).
using CycleSeq = std::vector<int>;

/// Sorts into the canonical non-increasing order.
CycleSeq normalized(CycleSeq a);

}  // namespace reconkit
