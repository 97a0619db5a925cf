#pragma once

// Shared corpus generators and brute-force oracles.  The oracles go straight
// from the definitions using plain integer arithmetic, deliberately sharing
// no code path with the library routines they check.

#include <matchbox/matrix.hpp>
#include <matchbox/odometer.hpp>
#include <matchbox/supernatural.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace support {

// --- corpus -----------------------------------------------------------

inline matchbox::BondingSequence random_sequence(std::mt19937& rng) {
    std::uniform_int_distribution<int> prefix_len(0, 3);
    std::uniform_int_distribution<int> period_len(1, 4);
    std::uniform_int_distribution<std::int64_t> entry(2, 30);
    std::vector<std::int64_t> prefix(static_cast<std::size_t>(prefix_len(rng)));
    for (auto& m : prefix) {
        m = entry(rng);
    }
    std::vector<std::int64_t> period(static_cast<std::size_t>(period_len(rng)));
    for (auto& m : period) {
        m = entry(rng);
    }
    return {std::move(prefix), std::move(period)};
}

// small entries and shallow depth, so full fiber scans stay cheap
inline matchbox::TowerRef random_tower(std::mt19937& rng) {
    std::uniform_int_distribution<int> period_len(1, 3);
    std::uniform_int_distribution<int> depth(1, 5);
    std::uniform_int_distribution<std::int64_t> entry(2, 6);
    std::vector<std::int64_t> period(static_cast<std::size_t>(period_len(rng)));
    for (auto& m : period) {
        m = entry(rng);
    }
    return matchbox::make_tower(matchbox::BondingSequence({}, std::move(period)), depth(rng));
}

inline matchbox::IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                                         int lo, int hi) {
    std::uniform_int_distribution<int> entry(lo, hi);
    matchbox::IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            m(r, c) = entry(rng);
        }
    }
    return m;
}

// --- snapshots --------------------------------------------------------

// membership table of a clopen set over the whole deepest fiber
inline std::set<long> members(const matchbox::ClopenSet& w) {
    std::set<long> out;
    const long m = w.tower()->fiber_modulus().convert_to<long>();
    for (long z = 0; z < m; ++z) {
        if (w.contains(z)) {
            out.insert(z);
        }
    }
    return out;
}

// --- oracles ----------------------------------------------------------

// Translate-tiling oracle, straight from the definition.  Every shift of a
// nonempty S covers Z/m jointly, so the distinct shifts tile exactly when
// they account for every element once: |distinct| * |S| = m.
inline bool oracle_collapsible(const std::set<long>& s, long m) {
    std::set<std::set<long>> distinct;
    for (long t = 0; t < m; ++t) {
        std::set<long> shifted;
        for (long z : s) {
            shifted.insert((z + t) % m);
        }
        distinct.insert(std::move(shifted));
    }
    return static_cast<long>(distinct.size()) * static_cast<long>(s.size()) == m;
}

// Abelian invariants of Z^2 / A Z^2 by coset enumeration, for |det A| in
// [1, 12].  A adj(A) = det(A) I puts det(A) Z^2 inside A Z^2, so the
// quotient equals G/S with G = (Z/D)^2, S the image of A, D = |det A|.  A
// finite abelian group on two generators is Z/d1 x Z/d2 with d1 | d2, and
// (order, exponent) = (d1 d2, d2) pins both down.  Returns the factors > 1.
inline std::vector<long> oracle_quotient_invariants(long a, long b, long c, long d) {
    const long det = a * d - b * c;
    const long D = det < 0 ? -det : det;
    if (D == 1) {
        return {};
    }
    auto at = [D](long x, long y) {
        return ((x % D + D) % D) * D + ((y % D + D) % D);
    };
    std::vector<char> in_s(static_cast<std::size_t>(D * D), 0);
    for (long x = 0; x < D; ++x) {
        for (long y = 0; y < D; ++y) {
            in_s[static_cast<std::size_t>(at(a * x + b * y, c * x + d * y))] = 1;
        }
    }
    long size_s = 0;
    for (char bit : in_s) {
        size_s += bit;
    }
    const long order = D * D / size_s;
    long exponent = 1;
    for (long x = 0; x < D; ++x) {
        for (long y = 0; y < D; ++y) {
            long t = 1;  // order of (x, y) in G/S divides the exponent D of G
            while (!in_s[static_cast<std::size_t>(at(t * x, t * y))]) {
                ++t;
            }
            exponent = std::max(exponent, t);
        }
    }
    const long d2 = exponent;
    const long d1 = order / exponent;
    std::vector<long> out;
    if (d1 > 1) {
        out.push_back(d1);
    }
    if (d2 > 1) {
        out.push_back(d2);
    }
    return out;
}

// cofactor expansion along the first row; fine for n <= 4
inline matchbox::Int oracle_determinant(const matchbox::IntMatrix& a) {
    const std::size_t n = a.rows();
    if (n == 1) {
        return a(0, 0);
    }
    matchbox::Int sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
        matchbox::IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c != j) {
                    minor(r - 1, cc++) = a(r, c);
                }
            }
        }
        const matchbox::Int term = a(0, j) * oracle_determinant(minor);
        sum += (j % 2 == 0) ? term : -term;
    }
    return sum;
}

}  // namespace support
