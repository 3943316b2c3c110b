#pragma once

#include "qmk/rational.hpp"
#include "qmk/truncated_series.hpp"

#include <vector>

namespace qmk {

// Limit data {c_k} of an LLN-appropriate sequence together with the derived
// series H'(x) = sum_k c_k (x-1)^{k-1}/(k-1)!, stored around center 1. Only
// H' ever enters a formula; H itself is never materialized.
template <class K>
struct AsymptoticProfile {
    std::vector<K> c;  // c[0] = c_1, c[1] = c_2, ...

    // H' as a series in t = x - 1, truncated at the given order.
    TruncatedSeries<K> hprime(int order) const {
        std::vector<K> v(order + 1, K(0));
        K fact(1);  // (k-1)! for k = j+1
        for (size_t j = 0; j < c.size(); ++j) {
            if (j >= 1) fact = fact * K(static_cast<int>(j));
            if (static_cast<int>(j) <= order) v[j] = c[j] / fact;
        }
        return TruncatedSeries<K>(1, std::move(v));
    }

    // Round trip back to the c_k from the stored series coefficients.
    std::vector<K> c_from_hprime(int order) const {
        auto hp = hprime(order);
        std::vector<K> out(order + 1);
        K fact(1);
        for (int j = 0; j <= order; ++j) {
            if (j >= 1) fact = fact * K(j);
            out[j] = hp.coeff(j) * fact;
        }
        return out;
    }
};

using RationalProfile = AsymptoticProfile<Rat>;
using NumericProfile = AsymptoticProfile<double>;

}  // namespace qmk
