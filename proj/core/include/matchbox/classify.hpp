#pragma once

#include <matchbox/bundles.hpp>

#include <optional>
#include <string>
#include <utility>

namespace matchbox {

// Outcome of a classification query, with a machine-checkable certificate:
// the tag of the classification rule applied plus the witness that decided
// it (for inequivalence, the separating prime).
struct Verdict {
    enum class Kind { Homeomorphic, NotHomeomorphic, ConsistentAtDepth, NotCoveredByTheory };

    Kind kind;
    int depth = 0;       // ConsistentAtDepth only
    std::string reason;  // NotCoveredByTheory only
    std::string theorem;
    std::string certificate;
    std::optional<std::int64_t> witness_prime;
};

// classification rule tags carried by verdict records
inline constexpr const char* kRuleVietoris = "8.4";
inline constexpr const char* kRuleTorusBundle = "8.6";
inline constexpr const char* kRuleGenusObstruction = "8.7(1)";
inline constexpr const char* kRuleHigherGenus = "8.7(2)";
inline constexpr const char* kRuleCounterexample = "8.7(3)";
inline constexpr const char* kRuleReturnEquivalence = "8.8";

// Homeomorphic exactly when the sequences are return equivalent; a
// NotHomeomorphic verdict names the smallest prime with an infinite exponent
// on one side only.
Verdict classify_vietoris(const BondingSequence& a, const BondingSequence& b);

// Case analysis on the genera:
//   both 1: homeomorphic iff the sequences are return equivalent;
//   exactly one 1: never homeomorphic, the Euler characteristic obstructs;
//   equal and > 1: homeomorphic iff the characteristics are equal, witnessed
//     by the smallest prime with different exponents otherwise;
//   distinct and both > 1: not covered by the classification.
Verdict classify_adic_surfaces(const AdicSurface& a, const AdicSurface& b);

// Return equivalence of the bundles ignores the genus entirely.
bool adic_surfaces_return_equivalent(const AdicSurface& a, const AdicSurface& b);

// A pair of same-genus bundles that are return equivalent but not
// homeomorphic: prepend to m the smallest prime p1 >= 3 with zero exponent in
// its characteristic.  The two characteristics then differ exactly at p1.
// Requires genus >= 2; over the torus return equivalence already implies
// homeomorphism, so no such pair exists there.
std::pair<AdicSurface, AdicSurface> generate_counterexample(int genus,
                                                            const BondingSequence& m);

}  // namespace matchbox
