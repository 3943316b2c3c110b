#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmk {

// Non-increasing integer tuple indexing an irreducible representation of the
// N-dimensional unitary group. Entries may be negative; everything downstream
// depends only on the shifted coordinates.
struct Signature {
    std::vector<long long> parts;

    Signature() = default;
    explicit Signature(std::vector<long long> p) : parts(std::move(p)) { validate(); }
    Signature(std::initializer_list<long long> p) : parts(p) { validate(); }

    int n() const { return static_cast<int>(parts.size()); }

    void validate() const {
        if (parts.empty()) throw std::invalid_argument("signature must have positive length");
        for (size_t i = 1; i < parts.size(); ++i)
            if (parts[i - 1] < parts[i])
                throw std::invalid_argument("signature parts must be non-increasing");
    }

    // shifted[i] = parts[i] + N - 1 - i (0-indexed); strictly decreasing.
    std::vector<long long> shifted() const {
        const long long N = n();
        std::vector<long long> s(parts.size());
        for (long long i = 0; i < N; ++i) s[i] = parts[i] + N - 1 - i;
        return s;
    }

    long long weight() const {
        long long w = 0;
        for (long long p : parts) w += p;
        return w;
    }

    bool operator==(const Signature& o) const { return parts == o.parts; }
    bool operator<(const Signature& o) const { return parts < o.parts; }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s + ")";
    }
};

// lambda_{i+1} <= mu_i <= lambda_i for all i; mu one shorter than lambda.
bool interlaces(const Signature& lambda, const Signature& mu);

struct InterlacingPair {
    Signature upper;  // length N
    Signature lower;  // length N-1

    InterlacingPair(Signature up, Signature low) : upper(std::move(up)), lower(std::move(low)) {
        if (!interlaces(upper, lower))
            throw std::invalid_argument("signatures do not interlace");
    }
};

}  // namespace qmk
