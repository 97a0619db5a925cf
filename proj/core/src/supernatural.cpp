#include <matchbox/supernatural.hpp>

#include <stdexcept>
#include <utility>

namespace matchbox {

namespace {

void check_entries(const std::vector<std::int64_t>& entries, const char* which) {
    for (std::int64_t m : entries) {
        if (m < 2) {
            throw std::invalid_argument(std::string("BondingSequence: ") + which +
                                        " entries must be >= 2");
        }
    }
}

}  // namespace

BondingSequence::BondingSequence(std::vector<std::int64_t> prefix,
                                 std::vector<std::int64_t> period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
    if (period_.empty()) {
        throw std::invalid_argument("BondingSequence: period must be nonempty");
    }
    check_entries(prefix_, "prefix");
    check_entries(period_, "period");
}

std::int64_t BondingSequence::entry(std::size_t j) const {
    if (j == 0) {
        throw std::invalid_argument("BondingSequence::entry: index is 1-based");
    }
    if (j <= prefix_.size()) {
        return prefix_[j - 1];
    }
    return period_[(j - prefix_.size() - 1) % period_.size()];
}

SupernaturalNumber characteristic(const BondingSequence& seq) {
    SupernaturalNumber c;
    for (std::int64_t m : seq.period()) {
        for (const auto& [p, e] : factor(m)) {
            c.infinite_primes.insert(p);
        }
    }
    for (std::int64_t m : seq.prefix()) {
        for (const auto& [p, e] : factor(m)) {
            if (!c.infinite_primes.count(p)) {
                c.finite_part[p] += e;
            }
        }
    }
    return c;
}

bool characteristics_equal(const BondingSequence& a, const BondingSequence& b) {
    return characteristic(a) == characteristic(b);
}

bool sequences_return_equivalent(const BondingSequence& a, const BondingSequence& b) {
    // Outside their infinite primes both characteristics are finitely
    // supported, so they already agree at all but finitely many primes.
    return characteristic(a).infinite_primes == characteristic(b).infinite_primes;
}

}  // namespace matchbox
