#pragma once

#include <matchbox/integers.hpp>

#include <cstddef>
#include <set>
#include <vector>

namespace matchbox {

// Eventually periodic sequence of covering degrees m_1, m_2, ...: the first
// entries are the prefix, after which the period repeats forever.  Every
// entry is at least 2 (each stage is a proper covering).
class BondingSequence {
public:
    BondingSequence(std::vector<std::int64_t> prefix, std::vector<std::int64_t> period);

    const std::vector<std::int64_t>& prefix() const noexcept { return prefix_; }
    const std::vector<std::int64_t>& period() const noexcept { return period_; }

    // m_j, 1-based
    std::int64_t entry(std::size_t j) const;

    // the purely periodic tail, with the prefix deleted
    BondingSequence without_prefix() const { return BondingSequence({}, period_); }

    friend bool operator==(const BondingSequence&, const BondingSequence&) = default;

private:
    std::vector<std::int64_t> prefix_;
    std::vector<std::int64_t> period_;
};

// Formal product over primes p^e(p) with e(p) in {1, 2, ...} or infinite.
// finite_part holds the finite exponents; infinite_primes the rest.  The two
// supports are disjoint.
struct SupernaturalNumber {
    Factorization finite_part;
    std::set<std::int64_t> infinite_primes;

    friend bool operator==(const SupernaturalNumber&, const SupernaturalNumber&) = default;
};

// Exponent sum of each prime over the whole infinite sequence.  A prime
// dividing some period entry accumulates forever and lands in
// infinite_primes; a prime dividing only prefix entries keeps the finite sum
// of its prefix exponents.
SupernaturalNumber characteristic(const BondingSequence& seq);

bool characteristics_equal(const BondingSequence& a, const BondingSequence& b);

// True iff the characteristics agree at all but finitely many primes and
// assign an infinite exponent to exactly the same primes.  For eventually
// periodic sequences both characteristics have finite support outside their
// infinite primes, so the first condition is automatic and the decision
// reduces to equality of the infinite-prime sets.
bool sequences_return_equivalent(const BondingSequence& a, const BondingSequence& b);

}  // namespace matchbox
