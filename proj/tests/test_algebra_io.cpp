// Monoid algebra Q[M] and JSON serialization.
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

using P = PuiseuxAlgebraElement;

} // namespace

TEST(Algebra, MonomialProducts)
{
    EXPECT_EQ(P::monomial(R("1/2")) * P::monomial(R("1/3")), P::monomial(R("5/6")));
    EXPECT_EQ(P::monomial(R("1/2"), Rational(2)) * P::monomial(R("1/2"), Rational(3)),
              P::monomial(Rational(1), Rational(6)));
    EXPECT_TRUE((P::monomial(R("1/2")) * P{}).is_zero());
}

TEST(Algebra, ConvolutionCancels)
{
    const auto f = P::parse("1*X^(1/2) + 1*X^(0)");
    const auto g = P::parse("1*X^(1/2) + -1*X^(0)");
    EXPECT_EQ((f * g).str(), "-1*X^(0) + 1*X^(1)");
    EXPECT_EQ((f + g).str(), "2*X^(1/2)");
}

TEST(Algebra, TextRoundTrip)
{
    const auto f = P::parse("3/2*X^(5/6) + -7*X^(0) + X^(2)");
    EXPECT_EQ(f.term_count(), 3u);
    EXPECT_EQ(P::parse(f.str()), f);
    EXPECT_EQ(P::parse("0"), P{});
    EXPECT_EQ(P::parse("4"), P::constant(Rational(4)));
    EXPECT_THROW(P::parse("2*X^(1/2"), DomainError);
    EXPECT_THROW(P::parse("2X^(1/2)"), DomainError);

    const auto c = CoproductAlgebraElement::parse("2*X^(L1:5/6;L2:1)");
    EXPECT_EQ(c.str(), "2*X^(L1:5/6;L2:1)");
    EXPECT_EQ(c.terms().begin()->first.get("L1"), R("5/6"));
}

TEST(Algebra, UnitsAreNonzeroConstants)
{
    EXPECT_EQ(*P::constant(R("2/3")).inverse(), P::constant(R("3/2")));
    EXPECT_FALSE(P{}.inverse());
    EXPECT_FALSE(P::monomial(R("1/2")).inverse());
    EXPECT_FALSE(P::parse("1*X^(0) + 1*X^(1/2)").inverse());
}

TEST(AlgebraProperty, NoInverseAmongSmallElements)
{
    // Brute force: no product of two small non-constant elements is 1.
    std::mt19937_64 rng(51);
    const std::vector<Rational> exps{R("0"), R("1/3"), R("1/2"), R("2/3"), R("5/6"), R("1")};
    std::uniform_int_distribution<int> coeff(-2, 2), pick(0, 5), terms(1, 3);
    auto random_element = [&] {
        P f;
        for (int i = terms(rng); i > 0; --i) {
            f.add_term(exps[pick(rng)], Rational(coeff(rng)));
        }
        return f;
    };
    const auto one = P::constant(Rational(1));
    for (int trial = 0; trial < 2000; ++trial) {
        const P f = random_element();
        const P g = random_element();
        if (f * g == one) {
            EXPECT_TRUE(f.is_constant() && g.is_constant());
        }
        EXPECT_EQ(f.inverse().has_value(), f.is_constant() && !f.is_zero());
        if (f.is_monomial() && g.is_monomial()) {
            const auto h = f * g;
            ASSERT_TRUE(h.is_monomial());
            EXPECT_EQ(h.terms().begin()->first, f.terms().begin()->first + g.terms().begin()->first);
        }
    }
}

TEST(Algebra, MonomialDivides)
{
    const auto m = FgPuiseux::generated_by({"1/2", "1/3"});
    EXPECT_TRUE(monomial_divides(R("1/2"), R("5/6"), m));
    EXPECT_FALSE(monomial_divides(R("1/3"), R("1/2"), m));
    EXPECT_TRUE(monomial_divides(Rational(0), R("5/6"), m));
    EXPECT_THROW(monomial_divides(R("1/6"), R("5/6"), m), DomainError);
    EXPECT_TRUE(monomial_divides(R("1/2"), R("5/6"), PrimeReciprocal()));
}

TEST(Algebra, MonomialLengthSets)
{
    const auto m = FgPuiseux::generated_by({"1/2", "1/3"});
    EXPECT_EQ(monomial_length_set(Rational(1), m), (LengthSet{2, 3}));
    EXPECT_EQ(monomial_length_set(Rational(0), m), (LengthSet{0}));
    EXPECT_THROW(monomial_length_set(R("1/6"), m), DomainError);
    EXPECT_EQ(monomial_length_set(Rational(1), PrimeReciprocal()).enumerate(10), (LengthSet{2, 3, 5, 7}));
}

TEST(Algebra, DivisorEnumerationAgrees)
{
    const auto m = FgPuiseux::generated_by({"1/2", "1/3"});
    const auto check = verify_monomial(Rational(2), m);
    EXPECT_TRUE(check.performed);
    EXPECT_TRUE(check.ok);
    EXPECT_EQ(check.irreducibles, (std::vector<Rational>{R("1/3"), R("1/2")}));
    EXPECT_EQ(check.lengths, (LengthSet{4, 5, 6}));
    EXPECT_GT(check.products_checked, 0u);
    EXPECT_GT(check.binomial_products_checked, 0u);
}

TEST(Algebra, DivisorEnumerationSkipsHugeExponents)
{
    const auto m = FgPuiseux::generated_by({"1/10007", "1/10009"});
    const auto check = verify_monomial(Rational(1), m);
    EXPECT_FALSE(check.performed);
    EXPECT_FALSE(check.skipped_reason.empty());
}

TEST(Algebra, ShiftRealizedMonomial)
{
    TraceStore store;
    const auto r = shift_realize({3, 5}, store);
    EXPECT_EQ(monomial_length_set(r.exponent, r.monoid), (LengthSet{3, 5}));
    const auto check = verify_monomial(r.exponent, r.monoid);
    ASSERT_TRUE(check.performed) << check.skipped_reason;
    EXPECT_TRUE(check.ok);
    EXPECT_EQ(check.lengths, (LengthSet{3, 5}));
}

TEST(AlgebraProperty, BridgeEqualsMonoidLengths)
{
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<int> num(1, 7), den(1, 6), mult(0, 3);
    for (int trial = 0; trial < 40; ++trial) {
        const auto m = FgPuiseux::generated_by(
            {Rational(Integer(num(rng)), Integer(den(rng))), Rational(Integer(num(rng)), Integer(den(rng)))});
        Rational e(0);
        for (const auto &a : m.atoms()) {
            e += a * Rational(mult(rng));
        }
        EXPECT_EQ(monomial_length_set(e, m), m.length_set(e));
        const auto check = verify_monomial(e, m);
        ASSERT_TRUE(check.performed);
        EXPECT_TRUE(check.ok) << (check.findings.empty() ? "" : check.findings.front());
    }
}

// ---------------------------------------------------------------------------
// JSON

TEST(Json, IntegersSwitchToStringsBeyondInt64)
{
    EXPECT_EQ(io::integer_json(Integer(42)).dump(), "42");
    EXPECT_EQ(io::integer_json(Integer("99999999999999999999")).dump(), "\"99999999999999999999\"");
    EXPECT_EQ(io::integer_from(io::integer_json(Integer("-99999999999999999999"))), Integer("-99999999999999999999"));
    EXPECT_THROW(io::integer_from(nlohmann::json(1.5)), DomainError);
}

TEST(Json, Decomposition)
{
    const auto j = io::decomposition_json(PrimeReciprocal().decompose(R("5/6")));
    EXPECT_EQ(j.dump(), R"({"N":0,"coeffs":{"2":1,"3":1},"member":true,"s":2})");
    const auto miss = io::decomposition_json(PrimeReciprocal().decompose(R("5/4")));
    EXPECT_EQ(miss["valuation"], -2);
    EXPECT_FALSE(miss["member"].get<bool>());
}

TEST(Json, SymbolicLengthSet)
{
    const auto j = io::symbolic_json(PrimeReciprocal().length_set(Rational(1)), 10);
    EXPECT_EQ(j["kind"], "shifted");
    EXPECT_EQ(j["stream"], "primes");
    EXPECT_EQ(j["enumerated"], nlohmann::json::parse("[2,3,5,7]"));
}

TEST(Json, TraceRoundTrip)
{
    const auto t = realize_length_set({2, 3, 10}, tail_from_list({13}), 1);
    const auto j = io::trace_json(t);
    EXPECT_EQ(j["stages"][0]["ell"], 13);
    EXPECT_EQ(j["atoms_per_stage"][0][0].type(), nlohmann::json::value_t::string);
    const auto back = io::trace_from(nlohmann::json::parse(j.dump()));
    EXPECT_EQ(back, t);
    EXPECT_EQ(io::trace_json(back).dump(), j.dump());
    EXPECT_TRUE(verify_trace(back).ok);
}

TEST(Json, CertificateRoundTrip)
{
    const auto t = realize_length_set({2, 3, 10}, tail_from_list({13}), 1);
    for (const auto &c : {certificate_for(t), non_atomic_certificate(),
                          AccpCertificate::coproduct({AccpCertificate::finitely_generated(
                              NumericalMonoid::generated_by({3, 4, 5}))})}) {
        const auto j = io::certificate_json(c);
        EXPECT_EQ(io::certificate_json(io::certificate_from(j)), j);
        EXPECT_EQ(io::check_json(check_certificate(io::certificate_from(j))), io::check_json(check_certificate(c)));
    }
    EXPECT_THROW(io::certificate_from(nlohmann::json::parse(R"({"rule":"Magic"})")), DomainError);
}
