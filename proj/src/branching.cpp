#include "qmk/branching.hpp"

#include <stdexcept>

namespace qmk {

Rat BranchingLaw::probability_of(const Signature& mu) const {
    for (const auto& [s, p] : support)
        if (s == mu) return p;
    return Rat(0);
}

BranchingLaw branching_law(const Signature& lambda, long long enumeration_cap) {
    if (lambda.n() < 2) throw std::invalid_argument("branching_law: need N >= 2");
    BranchingLaw law;
    law.parent = lambda;
    const Int dim_parent = weyl_dimension(lambda);
    Rat total = 0;
    for (const auto& mu : enumerate_interlacing(lambda, enumeration_cap)) {
        Rat p(weyl_dimension(mu), dim_parent);
        total += p;
        law.support.emplace_back(mu, std::move(p));
    }
    if (total != 1) throw std::logic_error("branching_law: probabilities do not sum to 1");
    return law;
}

}  // namespace qmk
