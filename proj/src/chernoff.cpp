#include "zklab/chernoff.hpp"

#include <cmath>
#include <stdexcept>

namespace zklab {

double chernoff_bound(ChernoffKind kind, std::uint64_t m, const Rat& p, const Rat& delta) {
    if (m == 0) throw std::invalid_argument("chernoff_bound: m == 0");
    if (!is_probability(p)) throw std::invalid_argument("chernoff_bound: p outside [0,1]");
    const double pd = rat_double(p);
    const double dd = rat_double(delta);
    switch (kind) {
        case ChernoffKind::MultAbove:
            if (!(delta > 0 && delta < 1))
                throw std::invalid_argument("chernoff_bound: mult kinds need 0 < delta < 1");
            return std::exp(-dd * dd * static_cast<double>(m) * pd / 3.0);
        case ChernoffKind::MultBelow:
            if (!(delta > 0 && delta < 1))
                throw std::invalid_argument("chernoff_bound: mult kinds need 0 < delta < 1");
            return std::exp(-dd * dd * static_cast<double>(m) * pd / 2.0);
        case ChernoffKind::Additive:
            if (delta < 0) throw std::invalid_argument("chernoff_bound: additive needs Delta >= 0");
            return 2.0 * std::exp(-dd * dd / static_cast<double>(m));
    }
    throw std::logic_error("chernoff_bound: unreachable");
}

double chernoff_interval_halfwidth(std::uint64_t m, double alpha) {
    if (m == 0 || alpha <= 0 || alpha >= 1)
        throw std::invalid_argument("chernoff_interval_halfwidth: bad arguments");
    return std::sqrt(std::log(2.0 / alpha) / static_cast<double>(m));
}

}  // namespace zklab
