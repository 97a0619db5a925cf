#include <matchbox/classify.hpp>

#include <sstream>
#include <stdexcept>

namespace matchbox {

namespace {

std::string prime_set_text(const std::set<std::int64_t>& primes) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (std::int64_t p : primes) {
        if (!first) {
            out << ',';
        }
        out << p;
        first = false;
    }
    out << '}';
    return out.str();
}

// smallest prime with an infinite exponent on exactly one side
std::int64_t infinite_witness(const SupernaturalNumber& ca, const SupernaturalNumber& cb) {
    std::set<std::int64_t> diff;
    for (std::int64_t p : ca.infinite_primes) {
        if (!cb.infinite_primes.count(p)) {
            diff.insert(p);
        }
    }
    for (std::int64_t p : cb.infinite_primes) {
        if (!ca.infinite_primes.count(p)) {
            diff.insert(p);
        }
    }
    return *diff.begin();
}

// exponent of p, with infinity encoded as -1
std::int64_t exponent_of(const SupernaturalNumber& c, std::int64_t p) {
    if (c.infinite_primes.count(p)) {
        return -1;
    }
    auto it = c.finite_part.find(p);
    return it == c.finite_part.end() ? 0 : it->second;
}

std::string exponent_text(std::int64_t e) {
    return e < 0 ? "infinity" : std::to_string(e);
}

// smallest prime where the characteristics disagree
std::int64_t characteristic_witness(const SupernaturalNumber& ca, const SupernaturalNumber& cb) {
    std::set<std::int64_t> support;
    for (const auto& [p, e] : ca.finite_part) {
        support.insert(p);
    }
    for (const auto& [p, e] : cb.finite_part) {
        support.insert(p);
    }
    support.insert(ca.infinite_primes.begin(), ca.infinite_primes.end());
    support.insert(cb.infinite_primes.begin(), cb.infinite_primes.end());
    for (std::int64_t p : support) {
        if (exponent_of(ca, p) != exponent_of(cb, p)) {
            return p;
        }
    }
    throw std::logic_error("characteristic_witness: characteristics agree everywhere");
}

Verdict homeomorphic_by_return_equivalence(const char* rule,
                                           const SupernaturalNumber& ca) {
    Verdict v;
    v.kind = Verdict::Kind::Homeomorphic;
    v.theorem = rule;
    v.certificate = "return equivalent: infinite-prime sets coincide, " +
                    prime_set_text(ca.infinite_primes);
    return v;
}

Verdict not_homeomorphic_by_infinite_prime(const char* rule, const SupernaturalNumber& ca,
                                           const SupernaturalNumber& cb) {
    Verdict v;
    v.kind = Verdict::Kind::NotHomeomorphic;
    v.theorem = rule;
    v.witness_prime = infinite_witness(ca, cb);
    std::ostringstream text;
    text << "not return equivalent: prime " << *v.witness_prime
         << " has an infinite exponent on one side only (" << prime_set_text(ca.infinite_primes)
         << " vs " << prime_set_text(cb.infinite_primes) << ")";
    v.certificate = text.str();
    return v;
}

}  // namespace

Verdict classify_vietoris(const BondingSequence& a, const BondingSequence& b) {
    const SupernaturalNumber ca = characteristic(a);
    const SupernaturalNumber cb = characteristic(b);
    if (ca.infinite_primes == cb.infinite_primes) {
        return homeomorphic_by_return_equivalence(kRuleVietoris, ca);
    }
    return not_homeomorphic_by_infinite_prime(kRuleVietoris, ca, cb);
}

Verdict classify_adic_surfaces(const AdicSurface& a, const AdicSurface& b) {
    const int ga = a.genus();
    const int gb = b.genus();

    if (ga == 1 && gb == 1) {
        // over the torus the fiberwise classification collapses to return
        // equivalence of the sequences
        const SupernaturalNumber ca = characteristic(a.sequence());
        const SupernaturalNumber cb = characteristic(b.sequence());
        if (ca.infinite_primes == cb.infinite_primes) {
            return homeomorphic_by_return_equivalence(kRuleTorusBundle, ca);
        }
        return not_homeomorphic_by_infinite_prime(kRuleTorusBundle, ca, cb);
    }

    if ((ga == 1) != (gb == 1)) {
        Verdict v;
        v.kind = Verdict::Kind::NotHomeomorphic;
        v.theorem = kRuleGenusObstruction;
        std::ostringstream text;
        text << "Euler characteristic obstruction: finite covers of a genus-"
             << (ga == 1 ? gb : ga)
             << " surface have negative Euler characteristic, torus covers have zero";
        v.certificate = text.str();
        return v;
    }

    if (ga == gb) {
        const SupernaturalNumber ca = characteristic(a.sequence());
        const SupernaturalNumber cb = characteristic(b.sequence());
        if (ca == cb) {
            Verdict v;
            v.kind = Verdict::Kind::Homeomorphic;
            v.theorem = kRuleHigherGenus;
            v.certificate = "characteristics agree at every prime";
            return v;
        }
        Verdict v;
        v.kind = Verdict::Kind::NotHomeomorphic;
        v.theorem = kRuleHigherGenus;
        v.witness_prime = characteristic_witness(ca, cb);
        std::ostringstream text;
        text << "characteristics differ at prime " << *v.witness_prime << " (exponent "
             << exponent_text(exponent_of(ca, *v.witness_prime)) << " vs "
             << exponent_text(exponent_of(cb, *v.witness_prime)) << ")";
        v.certificate = text.str();
        return v;
    }

    Verdict v;
    v.kind = Verdict::Kind::NotCoveredByTheory;
    std::ostringstream text;
    text << "distinct genera " << ga << " and " << gb
         << " above the torus: the classification covers distinct genera only when one is 1";
    v.reason = text.str();
    return v;
}

bool adic_surfaces_return_equivalent(const AdicSurface& a, const AdicSurface& b) {
    return sequences_return_equivalent(a.sequence(), b.sequence());
}

std::pair<AdicSurface, AdicSurface> generate_counterexample(int genus,
                                                            const BondingSequence& m) {
    if (genus < 2) {
        throw std::invalid_argument(
            "generate_counterexample: genus must be >= 2; over the torus return "
            "equivalence already implies homeomorphism");
    }
    const SupernaturalNumber cm = characteristic(m);
    std::int64_t p1 = 3;
    while (cm.infinite_primes.count(p1) || cm.finite_part.count(p1) || !is_prime(p1)) {
        p1 += 2;
    }
    std::vector<std::int64_t> prefix;
    prefix.reserve(m.prefix().size() + 1);
    prefix.push_back(p1);
    prefix.insert(prefix.end(), m.prefix().begin(), m.prefix().end());
    BondingSequence n(std::move(prefix), m.period());
    return {AdicSurface(genus, m), AdicSurface(genus, std::move(n))};
}

}  // namespace matchbox
