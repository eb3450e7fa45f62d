#include "reconkit/integer.hpp"

#include <algorithm>
#include <vector>

namespace reconkit {

Integer factorial(int n) {
    if (n < 0) throw DomainError("factorial of a negative number");
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Integer binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Integer r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Integer stirling2(int n, int k) {
    if (n < 0 || k < 0) return 0;
    if (k > n) return 0;
    std::vector<Integer> row(static_cast<std::size_t>(k) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j) row[j] = row[j] * j + row[j - 1];
        row[0] = 0;
    }
    return row[k];
}

Integer surjections(int n, int k) { return factorial(k) * stirling2(n, k); }

}  // namespace reconkit
