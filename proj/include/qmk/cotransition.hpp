#pragma once

#include "qmk/signature.hpp"

#include <random>

namespace qmk {

struct CotransitionOptions {
    // Levels up to this size sample with exact integer determinants; larger
    // levels use scaled long-double arithmetic with an exact fallback when a
    // CDF decision is too close to call or a stability guard trips.
    int exact_level_cap = 16;
    double float_margin = 1e-9;
    double cancel_guard = 1e-8;
};

// One step of the projection map: an exact draw from branching_law(lambda)
// without enumerating the support. The interlacing mu is sampled coordinate
// by coordinate; P(mu|lambda) is proportional to the Vandermonde of the
// shifted coordinates, which range over disjoint integer intervals, so
// marginals are ratios of determinants whose rows are (weighted) interval
// power sums.
Signature cotransition_sample(const Signature& lambda, std::mt19937_64& rng,
                              const CotransitionOptions& opt = {});

// Iterated cotransition down to the target level: an exact sample from
// rho[V^lambda_N restricted to U(M)].
Signature projection_chain(const Signature& lambda, int target_level, std::mt19937_64& rng,
                           const CotransitionOptions& opt = {});

}  // namespace qmk
