#include "qmk/converge.hpp"

#include "qmk/dmk.hpp"
#include "qmk/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace qmk {

Signature block_staircase(int level) {
    if (level < 2) throw std::invalid_argument("block_staircase: level must be >= 2");
    std::vector<long long> parts(level, 0);
    for (int i = 0; i < level / 2; ++i) parts[i] = level / 2;
    return Signature(parts);
}

namespace {
// int x^k m[T] and int x^k d[T, U] at level M, in doubles.
double m_integrand(const Signature& T, int k) {
    const double M = T.n();
    double s = 0;
    for (long long sh : T.shifted()) s += std::pow(double(sh) / M, k);
    return s / M;
}

double d_integrand(const Signature& T, const Signature& U, int k) {
    const double M = T.n();
    double s = 0;
    for (long long sh : T.shifted()) s += std::pow(double(sh) / M, k);
    for (long long sh : U.shifted()) s -= std::pow(double(sh) / M, k);
    return s;
}

std::vector<double> predict_d(const std::vector<double>& m_hat) {
    std::vector<double> m(m_hat.size() + 1);
    m[0] = 1.0;
    for (size_t j = 0; j < m_hat.size(); ++j) m[j + 1] = m_hat[j];
    return dmk_m_to_d(m);
}
}  // namespace

ConvergeReport converge_experiment(const ConvergeConfig& cfg) {
    if (cfg.kmax < 1) throw std::invalid_argument("converge: kmax must be >= 1");
    if (cfg.family != "block" && cfg.family != "trivial")
        throw std::invalid_argument("converge: unknown family '" + cfg.family + "'");
    const bool trivial = cfg.family == "trivial";
    const int samples = trivial ? 1 : cfg.samples;
    const int batches = trivial ? 1 : cfg.batches;
    if (samples < batches || batches < 1)
        throw std::invalid_argument("converge: need at least one sample per batch");

    ConvergeReport report;
    std::vector<std::vector<double>> defects(cfg.kmax);  // per k, per level
    std::vector<double> final_sigma(cfg.kmax, 0.0), final_defect(cfg.kmax, 0.0);

    for (size_t li = 0; li < cfg.levels.size(); ++li) {
        const int N = cfg.levels[li];
        if (N < 4 || N % 2 != 0) throw std::invalid_argument("converge: levels must be even and >= 4");
        const int M = N / 2;
        const Signature lambda = trivial ? Signature(std::vector<long long>(N, 0)) : block_staircase(N);

        std::vector<std::vector<double>> msum(batches, std::vector<double>(cfg.kmax, 0.0));
        std::vector<std::vector<double>> dsum(batches, std::vector<double>(cfg.kmax, 0.0));
        std::vector<int> bcount(batches, 0);
        for (int s = 0; s < samples; ++s) {
            auto rng = rng_for_stream(cfg.seed, (std::uint64_t(N) << 32) | std::uint64_t(s));
            Signature T = projection_chain(lambda, M, rng);
            Signature U = cotransition_sample(T, rng);
            const int b = s % batches;
            ++bcount[b];
            for (int k = 1; k <= cfg.kmax; ++k) {
                msum[b][k - 1] += m_integrand(T, k);
                dsum[b][k - 1] += d_integrand(T, U, k);
            }
        }

        std::vector<double> m_hat(cfg.kmax, 0.0), d_hat(cfg.kmax, 0.0);
        for (int b = 0; b < batches; ++b)
            for (int k = 0; k < cfg.kmax; ++k) {
                m_hat[k] += msum[b][k];
                d_hat[k] += dsum[b][k];
            }
        for (int k = 0; k < cfg.kmax; ++k) {
            m_hat[k] /= samples;
            d_hat[k] /= samples;
        }
        auto d_pred = predict_d(m_hat);

        // batch means of the defect for the Monte-Carlo band
        std::vector<double> sigma(cfg.kmax, 0.0);
        if (batches > 1) {
            std::vector<std::vector<double>> bd(batches);
            for (int b = 0; b < batches; ++b) {
                std::vector<double> mb(cfg.kmax), db(cfg.kmax);
                for (int k = 0; k < cfg.kmax; ++k) {
                    mb[k] = msum[b][k] / bcount[b];
                    db[k] = dsum[b][k] / bcount[b];
                }
                auto pb = predict_d(mb);
                bd[b].resize(cfg.kmax);
                for (int k = 0; k < cfg.kmax; ++k) bd[b][k] = db[k] - pb[k];
            }
            for (int k = 0; k < cfg.kmax; ++k) {
                double mean = 0;
                for (int b = 0; b < batches; ++b) mean += bd[b][k];
                mean /= batches;
                double var = 0;
                for (int b = 0; b < batches; ++b) var += (bd[b][k] - mean) * (bd[b][k] - mean);
                var /= (batches - 1);
                sigma[k] = std::sqrt(var / batches);
            }
        }

        for (int k = 1; k <= cfg.kmax; ++k) {
            ConvergeRow row;
            row.level = N;
            row.k = k;
            row.m_hat = m_hat[k - 1];
            row.d_hat = d_hat[k - 1];
            row.d_pred = d_pred[k - 1];
            row.defect = std::abs(d_hat[k - 1] - d_pred[k - 1]);
            row.sigma = sigma[k - 1];
            row.z = sigma[k - 1] > 0 ? (d_hat[k - 1] - d_pred[k - 1]) / sigma[k - 1] : 0.0;
            report.rows.push_back(row);
            defects[k - 1].push_back(row.defect);
            if (li + 1 == cfg.levels.size()) {
                final_sigma[k - 1] = row.sigma;
                final_defect[k - 1] = row.defect;
            }
        }
    }

    report.defect_decreasing = true;
    for (int k = 0; k < cfg.kmax; ++k)
        for (size_t li = 1; li < defects[k].size(); ++li)
            if (!(defects[k][li] < defects[k][li - 1])) report.defect_decreasing = false;

    report.final_within_3sigma = true;
    for (int k = 0; k < cfg.kmax; ++k) {
        if (trivial) continue;  // deterministic family has no Monte-Carlo band
        if (final_defect[k] > 3.0 * final_sigma[k]) report.final_within_3sigma = false;
    }
    return report;
}

}  // namespace qmk
