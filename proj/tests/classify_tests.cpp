#include <matchbox/classify.hpp>
#include <matchbox/pseudogroup.hpp>

#include <doctest.h>

#include "test_support.hpp"

#include <random>
#include <string>
#include <vector>

using namespace matchbox;

namespace {

BondingSequence seq(std::vector<std::int64_t> prefix, std::vector<std::int64_t> period) {
    return BondingSequence(std::move(prefix), std::move(period));
}

bool contains(const std::string& text, const std::string& piece) {
    return text.find(piece) != std::string::npos;
}

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("vietoris classification fixtures") {
    const Verdict same = classify_vietoris(seq({}, {2}), seq({}, {4}));
    CHECK(same.kind == Verdict::Kind::Homeomorphic);
    CHECK(same.theorem == kRuleVietoris);
    CHECK(!same.witness_prime.has_value());
    CHECK(contains(same.certificate, "return equivalent"));

    const Verdict split = classify_vietoris(seq({}, {2}), seq({}, {3}));
    CHECK(split.kind == Verdict::Kind::NotHomeomorphic);
    CHECK(split.theorem == kRuleVietoris);
    REQUIRE(split.witness_prime.has_value());
    CHECK(*split.witness_prime == 2);
    CHECK(contains(split.certificate, "prime 2"));

    CHECK(classify_vietoris(seq({6}, {5}), seq({}, {5})).kind == Verdict::Kind::Homeomorphic);
    CHECK(classify_vietoris(seq({3}, {2}), seq({}, {2})).kind == Verdict::Kind::Homeomorphic);
}

TEST_CASE("the verdict witness is the least separating prime") {
    const Verdict v = classify_vietoris(seq({}, {35}), seq({}, {3}));
    REQUIRE(v.witness_prime.has_value());
    CHECK(*v.witness_prime == 3);  // infinite sets {5,7} vs {3}
    const Verdict w = classify_vietoris(seq({}, {6}), seq({}, {2}));
    REQUIRE(w.witness_prime.has_value());
    CHECK(*w.witness_prime == 3);  // {2,3} vs {2}

    std::mt19937 rng(71);
    for (int i = 0; i < 150; ++i) {
        const BondingSequence a = support::random_sequence(rng);
        const BondingSequence b = support::random_sequence(rng);
        const Verdict verdict = classify_vietoris(a, b);
        CHECK((verdict.kind == Verdict::Kind::Homeomorphic) ==
              sequences_return_equivalent(a, b));
        if (verdict.kind == Verdict::Kind::NotHomeomorphic) {
            REQUIRE(verdict.witness_prime.has_value());
            const auto ia = characteristic(a).infinite_primes;
            const auto ib = characteristic(b).infinite_primes;
            const std::int64_t p = *verdict.witness_prime;
            CHECK(ia.count(p) != ib.count(p));
            for (std::int64_t q = 2; q < p; ++q) {
                CHECK(ia.count(q) == ib.count(q));
            }
        }
    }
}

TEST_CASE("torus bundles classify by return equivalence") {
    const Verdict same =
        classify_adic_surfaces(AdicSurface(1, seq({}, {2})), AdicSurface(1, seq({}, {4})));
    CHECK(same.kind == Verdict::Kind::Homeomorphic);
    CHECK(same.theorem == kRuleTorusBundle);

    const Verdict split =
        classify_adic_surfaces(AdicSurface(1, seq({}, {2})), AdicSurface(1, seq({}, {3})));
    CHECK(split.kind == Verdict::Kind::NotHomeomorphic);
    CHECK(split.theorem == kRuleTorusBundle);
    CHECK(*split.witness_prime == 2);
}

TEST_CASE("mixed genus pairs fail on the euler characteristic") {
    const Verdict v =
        classify_adic_surfaces(AdicSurface(1, seq({}, {2})), AdicSurface(2, seq({}, {2})));
    CHECK(v.kind == Verdict::Kind::NotHomeomorphic);
    CHECK(v.theorem == kRuleGenusObstruction);
    CHECK(!v.witness_prime.has_value());
    CHECK(contains(v.certificate, "Euler characteristic"));
    CHECK(contains(v.certificate, "genus-2"));

    // the obstruction does not care which side is the torus
    const Verdict flipped =
        classify_adic_surfaces(AdicSurface(5, seq({}, {6})), AdicSurface(1, seq({}, {6})));
    CHECK(flipped.kind == Verdict::Kind::NotHomeomorphic);
    CHECK(flipped.theorem == kRuleGenusObstruction);
    CHECK(contains(flipped.certificate, "genus-5"));
}

TEST_CASE("equal higher genus compares full characteristics") {
    const Verdict differ =
        classify_adic_surfaces(AdicSurface(2, seq({}, {2})), AdicSurface(2, seq({3}, {2})));
    CHECK(differ.kind == Verdict::Kind::NotHomeomorphic);
    CHECK(differ.theorem == kRuleHigherGenus);
    REQUIRE(differ.witness_prime.has_value());
    CHECK(*differ.witness_prime == 3);
    CHECK(contains(differ.certificate, "exponent 0 vs 1"));

    // over genus 1 the same sequences are homeomorphic: the finite part
    // stops mattering once return equivalence is enough
    const Verdict relaxed =
        classify_adic_surfaces(AdicSurface(1, seq({}, {2})), AdicSurface(1, seq({3}, {2})));
    CHECK(relaxed.kind == Verdict::Kind::Homeomorphic);

    const Verdict equal =
        classify_adic_surfaces(AdicSurface(3, seq({}, {6})), AdicSurface(3, seq({2, 3}, {6})));
    CHECK(equal.kind == Verdict::Kind::Homeomorphic);
    CHECK(equal.theorem == kRuleHigherGenus);

    const Verdict infinite_vs_finite =
        classify_adic_surfaces(AdicSurface(2, seq({}, {4})), AdicSurface(2, seq({2}, {3})));
    CHECK(infinite_vs_finite.kind == Verdict::Kind::NotHomeomorphic);
    CHECK(*infinite_vs_finite.witness_prime == 2);
    CHECK(contains(infinite_vs_finite.certificate, "infinity vs 1"));
}

TEST_CASE("distinct higher genera fall outside the classification") {
    const Verdict v =
        classify_adic_surfaces(AdicSurface(2, seq({}, {2})), AdicSurface(3, seq({}, {2})));
    CHECK(v.kind == Verdict::Kind::NotCoveredByTheory);
    CHECK(contains(v.reason, "distinct genera 2 and 3"));
    CHECK(v.theorem.empty());
}

TEST_CASE("return equivalence of bundles ignores the genus") {
    const BondingSequence m = seq({}, {2});
    CHECK(adic_surfaces_return_equivalent(AdicSurface(2, m), AdicSurface(5, m)));
    CHECK(adic_surfaces_return_equivalent(AdicSurface(1, m), AdicSurface(7, seq({4}, {2}))));
    CHECK(!adic_surfaces_return_equivalent(AdicSurface(2, m), AdicSurface(2, seq({}, {3}))));

    std::mt19937 rng(72);
    std::uniform_int_distribution<int> genus(1, 6);
    for (int i = 0; i < 100; ++i) {
        const BondingSequence a = support::random_sequence(rng);
        const BondingSequence b = support::random_sequence(rng);
        CHECK(adic_surfaces_return_equivalent(AdicSurface(genus(rng), a),
                                              AdicSurface(genus(rng), b)) ==
              sequences_return_equivalent(a, b));
    }
}

TEST_CASE("generated counterexamples split exactly at the prepended prime") {
    const auto [a, b] = generate_counterexample(2, seq({}, {2}));
    CHECK(a.genus() == 2);
    CHECK(b.genus() == 2);
    CHECK(a.sequence() == seq({}, {2}));
    CHECK(b.sequence() == seq({3}, {2}));
    CHECK(adic_surfaces_return_equivalent(a, b));

    const Verdict v = classify_adic_surfaces(a, b);
    CHECK(v.kind == Verdict::Kind::NotHomeomorphic);
    CHECK(v.theorem == kRuleHigherGenus);
    CHECK(*v.witness_prime == 3);

    // the same sequences over the torus collapse back to homeomorphic
    const Verdict torus =
        classify_adic_surfaces(AdicSurface(1, a.sequence()), AdicSurface(1, b.sequence()));
    CHECK(torus.kind == Verdict::Kind::Homeomorphic);
    CHECK(torus.theorem == kRuleTorusBundle);

    CHECK_THROWS_AS(generate_counterexample(1, seq({}, {2})), std::invalid_argument);
    CHECK_THROWS_AS(generate_counterexample(0, seq({}, {2})), std::invalid_argument);
}

TEST_CASE("the prepended prime dodges the whole support and is minimal") {
    CHECK(generate_counterexample(2, seq({}, {3})).second.sequence() == seq({5}, {3}));
    CHECK(generate_counterexample(3, seq({}, {3, 5, 7})).second.sequence() ==
          seq({11}, {3, 5, 7}));
    CHECK(generate_counterexample(2, seq({9}, {2})).second.sequence() == seq({5, 9}, {2}));
    CHECK(generate_counterexample(2, seq({15}, {2})).second.sequence() == seq({7, 15}, {2}));

    std::mt19937 rng(73);
    std::uniform_int_distribution<int> genus(2, 5);
    for (int i = 0; i < 150; ++i) {
        const BondingSequence m = support::random_sequence(rng);
        const int g = genus(rng);
        const auto [a, b] = generate_counterexample(g, m);
        CHECK(a.genus() == g);
        CHECK(b.genus() == g);
        CHECK(a.sequence() == m);
        REQUIRE(b.sequence().prefix().size() == m.prefix().size() + 1);
        const std::int64_t p1 = b.sequence().prefix().front();
        CHECK(p1 >= 3);
        CHECK(is_prime(p1));
        const SupernaturalNumber cm = characteristic(m);
        CHECK(!cm.infinite_primes.count(p1));
        CHECK(!cm.finite_part.count(p1));
        for (std::int64_t q = 3; q < p1; q += 2) {
            // minimality: every smaller odd prime already appears
            if (is_prime(q)) {
                CHECK((cm.infinite_primes.count(q) || cm.finite_part.count(q)));
            }
        }
        CHECK(adic_surfaces_return_equivalent(a, b));
        const Verdict v = classify_adic_surfaces(a, b);
        CHECK(v.kind == Verdict::Kind::NotHomeomorphic);
        CHECK(*v.witness_prime == p1);
    }
}

TEST_CASE("verdicts stay consistent with the dynamical screen") {
    // a refutation of return equivalence shows up dynamically as well
    CHECK(!interleaving_consistent(seq({}, {2}), seq({}, {3}), 1));
    CHECK(classify_vietoris(seq({}, {2}), seq({}, {3})).kind ==
          Verdict::Kind::NotHomeomorphic);
    // and the homeomorphic fixtures never get refuted
    for (int depth = 1; depth <= 12; ++depth) {
        CHECK(interleaving_consistent(seq({3}, {2}), seq({}, {2}), depth));
        CHECK(interleaving_consistent(seq({6}, {5}), seq({}, {5}), depth));
    }
}

}  // TEST_SUITE
