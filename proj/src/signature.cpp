#include "qmk/signature.hpp"

namespace qmk {

bool interlaces(const Signature& lambda, const Signature& mu) {
    if (mu.n() != lambda.n() - 1)
        throw std::invalid_argument("interlaces: lower signature must be one shorter than upper (got " +
                                    std::to_string(mu.n()) + " vs " + std::to_string(lambda.n()) + ")");
    for (int i = 0; i < mu.n(); ++i)
        if (!(lambda.parts[i + 1] <= mu.parts[i] && mu.parts[i] <= lambda.parts[i])) return false;
    return true;
}

}  // namespace qmk
