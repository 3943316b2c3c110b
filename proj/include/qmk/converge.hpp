#pragma once

#include "qmk/cotransition.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qmk {

// Empirical law-of-large-numbers experiment: sample projection chains, form
// empirical m and d moments at the target level, and compare the empirical
// d moments against the ones predicted from the empirical m moments via the
// moment-generating-function relation.
struct ConvergeConfig {
    std::string family = "block";  // "block" (sampled) or "trivial" (deterministic)
    std::vector<int> levels = {8, 16, 32, 64};
    int samples = 2000;
    int kmax = 3;
    std::uint64_t seed = 20240901;
    int batches = 20;  // batch means for the Monte-Carlo sigma estimate
};

struct ConvergeRow {
    int level = 0;
    int k = 0;
    double m_hat = 0;       // empirical moment of m at the target level
    double d_hat = 0;       // empirical moment of d
    double d_pred = 0;      // dmk_m_to_d applied to the empirical m moments
    double defect = 0;      // |d_hat - d_pred|
    double sigma = 0;       // batch estimate of the std of (d_hat - d_pred)
    double z = 0;
};

struct ConvergeReport {
    std::vector<ConvergeRow> rows;
    bool defect_decreasing = false;   // strictly, in N, for every k
    bool final_within_3sigma = false; // last level only
};

ConvergeReport converge_experiment(const ConvergeConfig& cfg);

// lambda(N) = (floor(N/2) repeated floor(N/2) times, then zeros).
Signature block_staircase(int level);

}  // namespace qmk
