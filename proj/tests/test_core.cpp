// Exact arithmetic, numerical monoids, f.g. Puiseux monoids and
// prime-reciprocal monoids.
#include <random>

#include <gtest/gtest.h>

#include "lengthsets/lengthsets.hpp"
#include "oracles.hpp"

using namespace lengthsets;

namespace
{

Rational R(const char *s)
{
    return Rational::parse(s);
}

std::vector<oracle::u64> as_u64(const std::vector<Integer> &v)
{
    std::vector<oracle::u64> out;
    for (const auto &x : v) {
        out.push_back(to_u64(x));
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Rational

TEST(Rational, NormalizesSignAndLowestTerms)
{
    EXPECT_EQ(Rational(Integer(6), Integer(-4)).str(), "-3/2");
    EXPECT_EQ(R("10/5").str(), "2");
    EXPECT_EQ(R("0/7"), Rational(0));
    EXPECT_TRUE(R("4/2").is_integer());
}

TEST(Rational, ArithmeticAndOrder)
{
    EXPECT_EQ(R("1/2") + R("1/3"), R("5/6"));
    EXPECT_EQ(R("1/2") - R("1/3"), R("1/6"));
    EXPECT_EQ(R("2/3") * R("9/4"), R("3/2"));
    EXPECT_EQ(R("1/2") / R("1/4"), Rational(2));
    EXPECT_LT(R("1/3"), R("1/2"));
    EXPECT_EQ(R("-7/2").floor(), Integer(-4));
    EXPECT_EQ(R("7/2").floor(), Integer(3));
}

TEST(Rational, RejectsMalformedText)
{
    EXPECT_THROW(R("1/0"), DomainError);
    EXPECT_THROW(R("x/2"), DomainError);
    EXPECT_THROW(R(""), DomainError);
    EXPECT_THROW(Rational::parse("1//2"), DomainError);
}

TEST(Rational, BeyondSixtyFourBits)
{
    const Rational big = R("340282366920938463463374607431768211457/3");
    EXPECT_EQ((big * Rational(3)).str(), "340282366920938463463374607431768211457");
    EXPECT_FALSE(fits_u64(big.num()));
}

TEST(Rational, RandomFieldLaws)
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> n(-50, 50), d(1, 40);
    for (int i = 0; i < 500; ++i) {
        const Rational a(Integer(n(rng)), Integer(d(rng)));
        const Rational b(Integer(n(rng)), Integer(d(rng)));
        const Rational c(Integer(n(rng)), Integer(d(rng)));
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, Rational(0));
        if (!b.is_zero()) {
            EXPECT_EQ((a / b) * b, a);
        }
        EXPECT_EQ(Rational::parse(a.str()), a);
    }
}

// ---------------------------------------------------------------------------
// Primes and valuations

TEST(Primes, MatchesTrialDivision)
{
    for (oracle::u64 n = 0; n < 5000; ++n) {
        EXPECT_EQ(is_prime(Integer(n)), oracle::naive_is_prime(n)) << n;
    }
}

TEST(Primes, LargeKnownValues)
{
    EXPECT_TRUE(is_prime(Integer("18446744073709551557")));         // largest prime < 2^64
    EXPECT_FALSE(is_prime(Integer("3317044064679887385961981")));    // strong pseudoprime to bases <= 37
    EXPECT_TRUE(is_prime(Integer("170141183460469231731687303715884105727"))); // 2^127 - 1
    EXPECT_FALSE(is_prime(Integer("170141183460469231731687303715884105729")));
}

TEST(Primes, NextPrimeAvoiding)
{
    EXPECT_EQ(next_prime_avoiding(Integer(676)), Integer(677));
    const std::vector<Integer> forbidden{Integer(677) * 10};
    EXPECT_EQ(next_prime_avoiding(Integer(676), forbidden), Integer(683));
    EXPECT_EQ(next_prime_avoiding(Integer(1)), Integer(2));
}

TEST(Primes, Factorization)
{
    const auto f = prime_factors(Integer(2) * 2 * 3 * 1000003 * Integer("1000000007"));
    ASSERT_EQ(f.size(), 4u);
    EXPECT_EQ(f.at(Integer(2)), 2u);
    EXPECT_EQ(f.at(Integer("1000000007")), 1u);
}

TEST(Valuation, OfRationals)
{
    EXPECT_EQ(vp(R("5/4"), Integer(2)), -2);
    EXPECT_EQ(vp(R("12/5"), Integer(2)), 2);
    EXPECT_EQ(vp(R("7/3"), Integer(5)), 0);
    EXPECT_THROW(vp(Rational(0), Integer(2)), DomainError);
    EXPECT_THROW(vp(Rational(3), Integer(4)), DomainError);
}

TEST(Arith, ModInverse)
{
    EXPECT_EQ(mod_inverse(Integer(6), Integer(7)), Integer(6));
    EXPECT_THROW(mod_inverse(Integer(4), Integer(6)), DomainError);
    EXPECT_EQ(mod_floor(Integer(-3), Integer(7)), Integer(4));
}

TEST(PrimeStream, ExplicitListValidation)
{
    EXPECT_THROW(PrimeStream::from_list({Integer(4), Integer(6)}), DomainError);
    EXPECT_THROW(PrimeStream::from_list({Integer(3), Integer(2)}), DomainError);
    EXPECT_THROW(PrimeStream::from_list({}), DomainError);
    const auto s = PrimeStream::from_list({Integer(4), Integer(9), Integer(25)});
    EXPECT_FALSE(s.all_prime());
    EXPECT_TRUE(s.contains(Integer(9)));
    EXPECT_EQ(PrimeStream::primes().first(6), (std::vector<Integer>{2, 3, 5, 7, 11, 13}));
    EXPECT_EQ(PrimeStream::primes().at(99), Integer(541));
}

// ---------------------------------------------------------------------------
// Numerical monoids

TEST(NumericalMonoid, MinimalizesGenerators)
{
    const auto m = NumericalMonoid::generated_by({3, 4, 5, 7});
    EXPECT_EQ(m.atoms(), (std::vector<Integer>{3, 4, 5}));
    EXPECT_THROW(NumericalMonoid::generated_by({4, 6}), DomainError);
    EXPECT_THROW(NumericalMonoid::generated_by({0, 3}), DomainError);
}

TEST(NumericalMonoid, LengthSetExamples)
{
    const auto m = NumericalMonoid::generated_by({3, 4, 5});
    EXPECT_EQ(m.length_set(Integer(10)), (LengthSet{2, 3}));
    EXPECT_EQ(m.length_set(Integer(0)), (LengthSet{0}));
    EXPECT_EQ(m.length_set(Integer(3)), (LengthSet{1}));
    EXPECT_TRUE(m.length_set(Integer(2)).empty());
}

TEST(NumericalMonoid, FactorizationOrder)
{
    const auto m = NumericalMonoid::generated_by({3, 4, 5});
    const auto z = m.factorizations(Integer(10));
    ASSERT_EQ(z.size(), 2u);
    EXPECT_EQ(z[0].counts, (std::vector<std::uint64_t>{2, 1, 0}));
    EXPECT_EQ(z[1].counts, (std::vector<std::uint64_t>{0, 0, 2}));
    for (const auto &f : z) {
        EXPECT_EQ(m.evaluate(f), Integer(10));
    }
}

TEST(NumericalMonoid, FrobeniusAndApery)
{
    EXPECT_EQ(NumericalMonoid::generated_by({3, 4, 5}).frobenius(), Integer(2));
    EXPECT_EQ(NumericalMonoid::generated_by({9, 89}).frobenius(), Integer(9 * 89 - 9 - 89));
    EXPECT_THROW(NumericalMonoid::generated_by({1}).frobenius(), DomainError);
    const auto ap = NumericalMonoid::generated_by({3, 5}).apery(Integer(3));
    EXPECT_EQ(ap, (std::vector<Integer>{0, 10, 5}));
}

TEST(NumericalMonoid, WholeN0)
{
    const auto n0 = NumericalMonoid::generated_by({1});
    EXPECT_TRUE(n0.is_whole_n0());
    EXPECT_EQ(n0.length_set(Integer(7)), (LengthSet{7}));
}

TEST(NumericalMonoid, BigGeneratorsUseSearch)
{
    const auto m = NumericalMonoid::generated_by({Integer("1000000007"), Integer("1000000009")});
    const Integer x = Integer("1000000007") * 3 + Integer("1000000009") * 2;
    EXPECT_EQ(m.length_set(x), (LengthSet{5}));
    EXPECT_FALSE(m.contains(x + 1));
}

TEST(NumericalMonoid, BudgetExhaustionReportsFrontier)
{
    const auto m = NumericalMonoid::generated_by({Integer(1000003), Integer(1000033), Integer(1000037), Integer(1000039)});
    try {
        m.factorizations(Integer(1000003) * 4000, NodeBudget{1000, 0});
        FAIL() << "expected BudgetExhausted";
    } catch (const BudgetExhausted &e) {
        EXPECT_FALSE(e.frontier().empty());
    }
}

TEST(NumericalMonoidProperty, LengthsMatchNaiveRecursion)
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> k(2, 4), a(2, 25), x(0, 150);
    for (int trial = 0; trial < 150; ++trial) {
        std::vector<Integer> gens;
        for (int i = k(rng); i > 0; --i) {
            gens.push_back(a(rng));
        }
        if (gcd_of(gens) != 1) {
            gens.push_back(gens.front() + 1);
        }
        const auto m = NumericalMonoid::generated_by(gens);
        const auto atoms = as_u64(m.atoms());
        EXPECT_EQ(atoms, oracle::minimal_generators(as_u64(gens)));
        const int v = x(rng);
        const auto expected = oracle::naive_lengths(atoms, v);
        EXPECT_EQ(m.contains(Integer(v)), !expected.empty()) << v;
        if (!expected.empty()) {
            EXPECT_EQ(m.length_set(Integer(v)), expected) << v;
            EXPECT_EQ(m.factorizations(Integer(v)).size(), oracle::naive_factorizations(atoms, v).size());
        }
        EXPECT_EQ(static_cast<long long>(m.frobenius()), oracle::gap_scan_frobenius(atoms));
    }
}

TEST(NumericalMonoidProperty, AperyIsLeastInEachClass)
{
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> a(2, 30);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Integer> gens{a(rng), a(rng), a(rng)};
        if (gcd_of(gens) != 1) {
            gens.push_back(gens.front() + 1);
        }
        const auto m = NumericalMonoid::generated_by(gens);
        const Integer mod = m.atoms().front();
        const auto ap = m.apery(mod);
        const auto in = oracle::membership(as_u64(m.atoms()), 2000);
        for (std::size_t r = 0; r < ap.size(); ++r) {
            const auto w = to_u64(ap[r]);
            EXPECT_EQ(w % to_u64(mod), r);
            EXPECT_TRUE(in[w]);
            if (w >= to_u64(mod)) {
                EXPECT_FALSE(in[w - to_u64(mod)]);
            }
        }
    }
}

TEST(NumericalMonoidProperty, SquarefreeMeansNoRepeatedAtom)
{
    const auto m = NumericalMonoid::generated_by({3, 4, 5});
    EXPECT_TRUE(m.is_squarefree(Integer(7)));    // 3 + 4
    EXPECT_FALSE(m.is_squarefree(Integer(12)));  // 12 - 8 = 4
    EXPECT_FALSE(m.is_squarefree(Integer(6)));   // 3 + 3 only
}

// ---------------------------------------------------------------------------
// Finitely generated Puiseux monoids

TEST(Puiseux, ScaledNumerical)
{
    const auto m = FgPuiseux::generated_by({"1/2", "1/3"});
    EXPECT_EQ(m.atoms(), (std::vector<Rational>{R("1/3"), R("1/2")}));
    EXPECT_TRUE(m.contains(R("5/6")));
    EXPECT_FALSE(m.contains(R("1/6")));
    EXPECT_FALSE(m.contains(R("1/4")));
    EXPECT_EQ(m.length_set(Rational(1)), (LengthSet{2, 3}));
    EXPECT_TRUE(m.is_atom(R("1/2")));
    EXPECT_FALSE(m.is_atom(Rational(1)));
}

TEST(Puiseux, RejectsNonPositiveGenerators)
{
    EXPECT_THROW(FgPuiseux::generated_by({"0", "1/2"}), DomainError);
    EXPECT_THROW(FgPuiseux::generated_by({"-1/2"}), DomainError);
    EXPECT_THROW(FgPuiseux::generated_by(std::vector<Rational>{}), DomainError);
}

TEST(Puiseux, RescalingPreservesLengths)
{
    const auto n = NumericalMonoid::generated_by({3, 4, 5});
    const auto m = FgPuiseux::scaled(n, R("1/10"));
    EXPECT_EQ(m.length_set(Rational(1)), n.length_set(Integer(10)));
    const auto r = m.rescaled(R("7/3"));
    EXPECT_EQ(r.length_set(R("7/3")), (LengthSet{2, 3}));
}

TEST(PuiseuxProperty, LengthsMatchScaledOracle)
{
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> num(1, 9), den(1, 7), count(2, 3), mult(0, 4);
    for (int trial = 0; trial < 80; ++trial) {
        std::vector<Rational> gens;
        for (int i = count(rng); i > 0; --i) {
            gens.emplace_back(Integer(num(rng)), Integer(den(rng)));
        }
        const auto m = FgPuiseux::generated_by(gens);
        Rational q(0);
        for (const auto &g : gens) {
            q += g * Rational(mult(rng));
        }
        const Integer d = lcm_of_denominators(m.atoms());
        std::vector<oracle::u64> scaled;
        for (const auto &a : m.atoms()) {
            scaled.push_back(to_u64((a * Rational(d)).num()));
        }
        const auto expected = oracle::naive_lengths(scaled, to_u64((q * Rational(d)).num()));
        ASSERT_TRUE(m.contains(q));
        EXPECT_EQ(m.length_set(q), expected);
        for (const auto &z : m.factorizations(q)) {
            EXPECT_EQ(m.evaluate(z), q);
        }
    }
}

// ---------------------------------------------------------------------------
// Prime-reciprocal monoids

TEST(PrimeReciprocal, CanonicalDecomposition)
{
    const PrimeReciprocal m;
    const auto d = std::get<CanonicalDecomposition>(m.decompose(R("5/6")));
    EXPECT_EQ(d.integer_part, Integer(0));
    EXPECT_EQ(d.coeffs, (std::map<Integer, Integer>{{2, 1}, {3, 1}}));
    const auto seven_sixths = std::get<CanonicalDecomposition>(m.decompose(R("7/6")));
    EXPECT_EQ(seven_sixths.integer_part, Integer(0));
    EXPECT_EQ(seven_sixths.coeffs, (std::map<Integer, Integer>{{2, 1}, {3, 2}}));
    const auto two = std::get<CanonicalDecomposition>(m.decompose(Rational(2)));
    EXPECT_EQ(two.integer_part, Integer(2));
    EXPECT_TRUE(two.coeffs.empty());
}

TEST(PrimeReciprocal, NonMembers)
{
    const PrimeReciprocal m;
    const auto miss = std::get<NotMember>(m.decompose(R("5/4")));
    EXPECT_EQ(miss.prime, Integer(2));
    EXPECT_EQ(miss.valuation, -2);
    EXPECT_FALSE(m.contains(R("1/6") - R("1/2")));
    const PrimeReciprocal small(PrimeStream::from_list({Integer(2), Integer(3)}));
    EXPECT_FALSE(small.contains(R("1/5")));
    // 1/6 = 1/2 + 2/3 - 1: the integer part would be negative.
    EXPECT_FALSE(m.contains(R("1/6")));
}

TEST(PrimeReciprocal, LengthSets)
{
    const PrimeReciprocal m;
    EXPECT_EQ(m.length_set(Rational(1)).enumerate(10), (LengthSet{2, 3, 5, 7}));
    EXPECT_EQ(m.length_set(R("5/6")).enumerate(100), (LengthSet{2}));
    EXPECT_TRUE(m.length_set(R("5/6")).is_finite());
    EXPECT_EQ(m.length_set(Rational(0)).enumerate(5), (LengthSet{0}));
    const auto two = m.length_set(Rational(2)).enumerate(12);
    EXPECT_EQ(two, (LengthSet{4, 5, 6, 7, 8, 9, 10, 12}));
    EXPECT_THROW(m.length_set(R("5/4")), DomainError);
}

TEST(PrimeReciprocal, RealizeFormula)
{
    const PrimeReciprocal m;
    const Rational q = m.realize(Integer(2), 3); // 2 + 1/2 + 1/3 + 1/5
    const auto l = m.length_set(q);
    ASSERT_TRUE(l.is_shifted());
    EXPECT_EQ(l.shifted().base, 3u);
    EXPECT_EQ(l.shifted().copies, 2u);
}

TEST(PrimeReciprocal, CompositeStreamNeedsBoundedSearch)
{
    const PrimeReciprocal m(PrimeStream::from_list({Integer(4), Integer(9), Integer(25)}));
    EXPECT_THROW(m.decompose(Rational(1)), UnsupportedConfiguration);
    EXPECT_EQ(m.bounded_length_set(Rational(1), Integer(25), 30), (LengthSet{4, 9, 25}));
}

TEST(PrimeReciprocalProperty, DecompositionRoundTripsAndBounds)
{
    std::mt19937_64 rng(17);
    const auto primes = PrimeStream::primes().first(10);
    std::uniform_int_distribution<int> a(0, 3);
    const PrimeReciprocal m;
    for (int trial = 0; trial < 300; ++trial) {
        Rational q(a(rng));
        for (const auto &p : primes) {
            std::uniform_int_distribution<long> c(0, static_cast<long>(p) + 3);
            q += Rational(Integer(c(rng)), p);
        }
        const auto d = std::get<CanonicalDecomposition>(m.decompose(q));
        EXPECT_EQ(d.value(), q);
        for (const auto &[p, c] : d.coeffs) {
            EXPECT_GE(c, 1);
            EXPECT_LT(c, p);
        }
    }
}

TEST(PrimeReciprocalProperty, SymbolicMatchesKnapsack)
{
    const std::vector<oracle::u64> ps{2, 3, 5, 7};
    const PrimeReciprocal m(PrimeStream::from_list({2, 3, 5, 7}));
    const oracle::u64 cap = 25;
    const auto table = oracle::reciprocal_length_table(ps, 3 * 210, cap);
    for (oracle::u64 v = 0; v < table.size(); ++v) {
        const Rational q(Integer(v), Integer(210));
        LengthSet expected;
        for (oracle::u64 k = 0; k <= cap; ++k) {
            if (table[v][k]) {
                expected.insert(k);
            }
        }
        if (!m.contains(q)) {
            ASSERT_TRUE(expected.empty()) << q;
            continue;
        }
        ASSERT_EQ(m.length_set(q).enumerate(cap), expected) << q;
        ASSERT_EQ(m.bounded_length_set(q, Integer(7), cap), expected) << q;
    }
}
