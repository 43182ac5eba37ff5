#include "occsat/tau.hpp"

#include <algorithm>
#include <cmath>

#include "occsat/literals.hpp"

namespace occsat {

double tau(const std::vector<int>& eliminations) {
    if (eliminations.empty()) throw ContractError("tau: empty branch vector");
    for (int n : eliminations)
        if (n < 1) throw ContractError("tau: entries must be >= 1");

    std::size_t k = eliminations.size();
    if (k == 1) return 1.0;
    int n_min = *std::min_element(eliminations.begin(), eliminations.end());

    auto value = [&](double x) {
        double s = 0.0;
        for (int n : eliminations) s += std::pow(x, -static_cast<double>(n));
        return s - 1.0;
    };

    // f(1) = k - 1 >= 0 and f(k^(1/n_min)) <= 0; f is strictly decreasing
    // on x >= 1, so the root is bracketed. The upper end is nudged outward
    // so rounding in pow cannot leave it on the wrong side.
    double lo = 1.0;
    double hi = std::pow(static_cast<double>(k), 1.0 / static_cast<double>(n_min)) * (1.0 + 1e-9);
    if (value(lo) < 0.0 || value(hi) > 0.0) throw InternalError("tau: bracket check failed");

    while (hi - lo > 1e-12) {
        double mid = 0.5 * (lo + hi);
        (value(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace occsat
