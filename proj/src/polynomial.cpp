#include "reconkit/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace reconkit {

Polynomial derivative(const Polynomial& p) {
    const int n = p.degree();
    Polynomial d;
    for (int i = 0; i < n; ++i) d.coeffs.push_back(p.coeffs[i] * (n - i));
    return d;
}

Polynomial add(const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) throw DomainError("add: polynomial degrees differ");
    Polynomial s = a;
    for (std::size_t i = 0; i < s.coeffs.size(); ++i) s.coeffs[i] += b.coeffs[i];
    return s;
}

std::string to_string(const Polynomial& p, const std::string& var) {
    std::ostringstream os;
    const int n = p.degree();
    bool first = true;
    for (int i = 0; i <= n; ++i) {
        const Integer& c = p.coeffs[i];
        if (c == 0) continue;
        const int power = n - i;
        Integer mag = c < 0 ? Integer(-c) : c;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || power == 0) os << mag;
        if (power >= 1) os << var;
        if (power >= 2) os << '^' << power;
        first = false;
    }
    if (first) os << '0';
    return os.str();
}

std::string to_string(const RankPolynomial& p) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [rs, count] : p) {
        if (!first) os << " + ";
        first = false;
        if (count != 1 || (rs.first == 0 && rs.second == 0)) os << count;
        if (rs.first >= 1) os << 'x';
        if (rs.first >= 2) os << '^' << rs.first;
        if (rs.second >= 1) os << 'y';
        if (rs.second >= 2) os << '^' << rs.second;
    }
    if (first) os << '0';
    return os.str();
}

CycleSeq normalized(CycleSeq a) {
    std::sort(a.begin(), a.end(), std::greater<>());
    return a;
}

}  // namespace reconkit
