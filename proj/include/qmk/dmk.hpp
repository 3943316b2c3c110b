#pragma once

#include "qmk/truncated_series.hpp"

#include <stdexcept>
#include <vector>

namespace qmk {

// The moment-generating-function relation between the limiting measures:
// with F(z) = sum m_k z^k and G(z) = sum d_k z^k / k,
//   e^{G(z)} = (e^{z F(z)} - 1) / z.
// Both directions below are exact series algebra through the common order.

// m_0..m_K -> d_1..d_K.
template <class K>
std::vector<K> dmk_m_to_d(const std::vector<K>& m) {
    if (m.empty() || m[0] != K(1)) throw std::invalid_argument("dmk_m_to_d: need m_0 = 1");
    const int ord = static_cast<int>(m.size()) - 1;
    std::vector<K> zf(ord + 2, K(0));
    for (int j = 0; j <= ord; ++j) zf[j + 1] = m[j];
    TruncatedSeries<K> zF(0, std::move(zf));
    auto E = exp_series(zF);  // order ord+1
    // (E - 1)/z has constant term m_0 = 1.
    std::vector<K> a(ord + 1);
    for (int j = 0; j <= ord; ++j) a[j] = E.coeff(j + 1);
    auto G = log_series(TruncatedSeries<K>(0, std::move(a)));
    std::vector<K> d(ord);
    for (int k = 1; k <= ord; ++k) d[k - 1] = K(k) * G.coeff(k);
    return d;
}

// d_1..d_K -> m_0..m_K with m_0 = 1; inverse of dmk_m_to_d through order K:
// z F = log(1 + z e^{G(z)}).
template <class K>
std::vector<K> dmk_d_to_m(const std::vector<K>& d) {
    const int ord = static_cast<int>(d.size());
    std::vector<K> g(ord + 1, K(0));
    for (int k = 1; k <= ord; ++k) g[k] = d[k - 1] / K(k);
    auto Eg = exp_series(TruncatedSeries<K>(0, std::move(g)));
    // 1 + z e^G, then log, then strip one power of z.
    std::vector<K> a(ord + 2, K(0));
    a[0] = K(1);
    for (int j = 0; j <= ord; ++j) a[j + 1] = Eg.coeff(j);
    auto zF = log_series(TruncatedSeries<K>(0, std::move(a)));
    std::vector<K> m(ord + 1);
    for (int j = 0; j <= ord; ++j) m[j] = zF.coeff(j + 1);
    return m;
}

}  // namespace qmk
