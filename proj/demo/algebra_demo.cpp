// Monomials in Q[M] for M = <1/2, 1/3>, and the shift realization of
// {3, 4} in a coproduct, read off as the length set of a monomial.
#include <iostream>

#include "lengthsets/lengthsets.hpp"

using namespace lengthsets;

int main()
{
    const FgPuiseux m = FgPuiseux::generated_by({"1/2", "1/3"});
    const auto f = PuiseuxAlgebraElement::parse("2*X^(1/2) + 1*X^(0)");
    const auto g = PuiseuxAlgebraElement::parse("3*X^(1/3)");
    std::cout << "(" << f.str() << ") * (" << g.str() << ") = " << (f * g).str() << '\n';

    std::cout << "L(X^(1)) = " << to_string(monomial_length_set(Rational(1), m)) << '\n';
    const MonomialCheck check = verify_monomial(Rational(1), m);
    std::cout << "divisor enumeration: " << check.divisors << " monomial divisors, lengths "
              << to_string(check.lengths) << ", " << (check.ok ? "consistent" : "inconsistent") << '\n';

    TraceStore store;
    const ShiftRealization shift = shift_realize({3, 4}, store);
    std::cout << "X^(" << shift.exponent.str() << ") has lengths "
              << to_string(monomial_length_set(shift.exponent, shift.monoid)) << '\n';
    return check.ok ? 0 : 1;
}
