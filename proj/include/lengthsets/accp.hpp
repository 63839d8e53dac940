// ACCP certificates: proof trees whose nodes are the closure rules
//
//   FinitelyGenerated      reduced f.g. monoids are BF, hence ACCP
//   PrimeReciprocalAtomic  M_P has the ACCP for pairwise coprime P
//   PositiveSum            M_0 + N_0 has the ACCP when M_0 does and N_0 is
//                          reduced and finitely generated (ambient Q>=0)
//   AscendingUnion         a submonoid of a reduced ACCP monoid has the ACCP
//   Coproduct              coproducts of ACCP monoids have the ACCP
//
// The checker validates side conditions only. It does not decide the ACCP
// for arbitrary monoids.
#ifndef LENGTHSETS_ACCP_HPP
#define LENGTHSETS_ACCP_HPP

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lengthsets/arith.hpp"
#include "lengthsets/numerical_monoid.hpp"
#include "lengthsets/prime_reciprocal.hpp"
#include "lengthsets/puiseux.hpp"
#include "lengthsets/realize.hpp"

namespace lengthsets
{

/// A monoid the library cannot compute with, described by its properties.
struct OpaqueMonoid {
    std::string description;
    bool finitely_generated = false;
};

using MonoidHandle = std::variant<NumericalMonoid, FgPuiseux, PrimeReciprocal, OpaqueMonoid>;

struct AccpCertificate;

struct FinitelyGeneratedRule {
    MonoidHandle monoid;
};
struct PrimeReciprocalRule {
    PrimeReciprocal monoid;
};
struct PositiveSumRule {
    std::shared_ptr<const AccpCertificate> base;
    MonoidHandle summand;
};
struct AscendingUnionRule {
    std::shared_ptr<const AccpCertificate> ambient;
    /// Atom sets of the chain members, in order.
    std::vector<std::vector<Rational>> chain;
};
struct CoproductRule {
    std::vector<AccpCertificate> children;
};

struct AccpCertificate {
    std::variant<FinitelyGeneratedRule, PrimeReciprocalRule, PositiveSumRule, AscendingUnionRule, CoproductRule> node;

    static AccpCertificate finitely_generated(MonoidHandle m)
    {
        return {FinitelyGeneratedRule{std::move(m)}};
    }
    static AccpCertificate prime_reciprocal(PrimeReciprocal m)
    {
        return {PrimeReciprocalRule{std::move(m)}};
    }
    static AccpCertificate positive_sum(AccpCertificate base, MonoidHandle summand)
    {
        return {PositiveSumRule{std::make_shared<const AccpCertificate>(std::move(base)), std::move(summand)}};
    }
    static AccpCertificate ascending_union(AccpCertificate ambient, std::vector<std::vector<Rational>> chain)
    {
        return {AscendingUnionRule{std::make_shared<const AccpCertificate>(std::move(ambient)), std::move(chain)}};
    }
    static AccpCertificate coproduct(std::vector<AccpCertificate> children)
    {
        return {CoproductRule{std::move(children)}};
    }
};

inline const char *rule_name(const AccpCertificate &c)
{
    static constexpr const char *names[] = {"FinitelyGenerated", "PrimeReciprocalAtomic", "PositiveSum",
                                            "AscendingUnion", "Coproduct"};
    return names[c.node.index()];
}

struct NodeReport {
    std::string path;
    std::string rule;
    std::vector<std::string> conditions;
    /// Number of independent rational coordinates of the node's monoid.
    std::size_t dimension = 1;
};

struct Verified {
    std::vector<NodeReport> nodes;
    std::size_t dimension = 1;
};

struct Rejected {
    std::string path;
    std::string rule;
    std::string reason;
};

using CheckResult = std::variant<Verified, Rejected>;

namespace detail
{

struct CertificateFailure {
    std::string path;
    std::string rule;
    std::string reason;
};

// Atoms of a reduced f.g. handle, or nullopt when it is not f.g.
inline std::optional<std::vector<Rational>> finite_atoms(const MonoidHandle &m)
{
    if (auto n = std::get_if<NumericalMonoid>(&m)) {
        std::vector<Rational> out(n->atoms().begin(), n->atoms().end());
        return out;
    }
    if (auto f = std::get_if<FgPuiseux>(&m)) {
        return f->atoms();
    }
    if (auto p = std::get_if<PrimeReciprocal>(&m)) {
        if (!p->stream().is_finite()) {
            return std::nullopt;
        }
        std::vector<Rational> out;
        for (const auto &v : p->stream().explicit_values()) {
            out.emplace_back(Integer(1), v);
        }
        return out;
    }
    return std::nullopt;
}

inline std::string handle_description(const MonoidHandle &m)
{
    if (std::holds_alternative<NumericalMonoid>(m)) {
        return "numerical monoid";
    }
    if (std::holds_alternative<FgPuiseux>(m)) {
        return "finitely generated Puiseux monoid";
    }
    if (auto p = std::get_if<PrimeReciprocal>(&m)) {
        return p->stream().is_finite() ? "prime-reciprocal monoid over a finite stream"
                                       : "prime-reciprocal monoid <1/p : p in P> over an infinite stream";
    }
    return std::get<OpaqueMonoid>(m).description;
}

inline std::optional<bool> handle_contains(const MonoidHandle &m, const Rational &q)
{
    if (auto n = std::get_if<NumericalMonoid>(&m)) {
        return q.is_integer() && n->contains(q.num());
    }
    if (auto f = std::get_if<FgPuiseux>(&m)) {
        return f->contains(q);
    }
    if (auto p = std::get_if<PrimeReciprocal>(&m)) {
        if (!p->stream().all_prime()) {
            return std::nullopt;
        }
        return p->contains(q);
    }
    return std::nullopt;
}

inline constexpr std::uint64_t sum_membership_limit = 100'000;

// q in the monoid certified by c: true/false, or nullopt when undecided.
inline std::optional<bool> certified_contains(const AccpCertificate &c, const Rational &q)
{
    if (q.sign() < 0) {
        return false;
    }
    if (q.is_zero()) {
        return true;
    }
    if (auto fg = std::get_if<FinitelyGeneratedRule>(&c.node)) {
        return handle_contains(fg->monoid, q);
    }
    if (auto pr = std::get_if<PrimeReciprocalRule>(&c.node)) {
        return handle_contains(MonoidHandle{pr->monoid}, q);
    }
    if (auto ps = std::get_if<PositiveSumRule>(&c.node)) {
        auto in_base = certified_contains(*ps->base, q);
        if (in_base && *in_base) {
            return true;
        }
        auto in_summand = handle_contains(ps->summand, q);
        if (in_summand && *in_summand) {
            return true;
        }
        // q = y + (q - y) with y a nonzero summand element below q.
        const auto *f = std::get_if<FgPuiseux>(&ps->summand);
        if (!f) {
            return std::nullopt;
        }
        const Rational top = q * f->scale();
        const Integer limit = top.floor();
        if (limit > sum_membership_limit) {
            return std::nullopt;
        }
        bool undecided = !in_base.has_value();
        for (Integer v = 1; v <= limit; ++v) {
            if (!f->numerical().contains(v)) {
                continue;
            }
            auto rest = certified_contains(*ps->base, q - Rational(v) / f->scale());
            if (rest && *rest) {
                return true;
            }
            undecided = undecided || !rest;
        }
        if (undecided) {
            return std::nullopt;
        }
        return false;
    }
    if (auto au = std::get_if<AscendingUnionRule>(&c.node)) {
        if (!au->chain.empty() && FgPuiseux::generated_by(au->chain.back()).contains(q)) {
            return true;
        }
        return std::nullopt;
    }
    return std::nullopt;
}

inline std::size_t check_node(const AccpCertificate &c, const std::string &path, std::vector<NodeReport> &reports)
{
    NodeReport report{path, rule_name(c), {}, 1};
    auto reject = [&](std::string why) { throw CertificateFailure{path, rule_name(c), std::move(why)}; };

    if (auto fg = std::get_if<FinitelyGeneratedRule>(&c.node)) {
        auto atoms = finite_atoms(fg->monoid);
        if (!atoms) {
            reject(handle_description(fg->monoid) + " is not finitely generated");
        }
        if (atoms->empty()) {
            reject("empty generating set");
        }
        for (const auto &a : *atoms) {
            if (a.sign() <= 0) {
                reject("generator " + a.str() + " is not positive");
            }
        }
        report.conditions.push_back("finitely generated by " + std::to_string(atoms->size()) + " atoms");
        report.conditions.push_back("reduced: every generator is positive");
        report.conditions.push_back("BF-monoid, hence ACCP");
    } else if (auto pr = std::get_if<PrimeReciprocalRule>(&c.node)) {
        const auto &stream = pr->monoid.stream();
        if (stream.is_finite()) {
            const auto values = stream.explicit_values();
            for (std::size_t i = 0; i < values.size(); ++i) {
                if (values[i] < 2) {
                    reject("stream element " + values[i].str() + " is < 2");
                }
                for (std::size_t j = 0; j < i; ++j) {
                    if (gcd(values[i], values[j]) != 1) {
                        reject("stream elements " + values[j].str() + " and " + values[i].str() + " are not coprime");
                    }
                }
            }
            report.conditions.push_back("P is a finite pairwise coprime set");
        } else {
            report.conditions.push_back("P = all primes, pairwise coprime");
        }
        report.conditions.push_back("atoms are exactly {1/p : p in P}");
    } else if (auto ps = std::get_if<PositiveSumRule>(&c.node)) {
        auto atoms = finite_atoms(ps->summand);
        if (!atoms) {
            reject("summand (" + handle_description(ps->summand) + ") is not finitely generated");
        }
        if (atoms->empty()) {
            reject("summand has no generators");
        }
        Rational alpha = atoms->front();
        for (const auto &a : *atoms) {
            if (a.sign() <= 0) {
                reject("summand generator " + a.str() + " is not positive; summand is not reduced");
            }
            alpha = std::min(alpha, a);
        }
        const std::size_t base_dim = check_node(*ps->base, path + "/base", reports);
        if (base_dim != 1) {
            reject("base lives in dimension " + std::to_string(base_dim) + ", summand in dimension 1");
        }
        report.conditions.push_back("base certified (ACCP)");
        report.conditions.push_back("summand reduced and finitely generated (s-noetherian)");
        report.conditions.push_back("alpha = min summand norm = " + alpha.str() + " > 0");
        report.conditions.push_back("ambient Q>=0, d = 1");
    } else if (auto au = std::get_if<AscendingUnionRule>(&c.node)) {
        const std::size_t dim = check_node(*au->ambient, path + "/ambient", reports);
        if (dim != 1) {
            reject("ambient is not a Puiseux monoid (dimension " + std::to_string(dim) + ")");
        }
        for (std::size_t k = 0; k < au->chain.size(); ++k) {
            const auto &stage = au->chain[k];
            if (stage.empty()) {
                reject("chain member " + std::to_string(k) + " has no atoms");
            }
            if (!std::is_sorted(stage.begin(), stage.end())) {
                reject("chain member " + std::to_string(k) + " atoms are not sorted");
            }
            for (const auto &a : stage) {
                if (a.sign() <= 0) {
                    reject("chain member " + std::to_string(k) + " has non-positive generator " + a.str());
                }
                auto inside = certified_contains(*au->ambient, a);
                if (!inside) {
                    reject("membership of " + a.str() + " in the ambient monoid is undecided");
                }
                if (!*inside) {
                    reject("chain atom " + a.str() + " is not in the ambient monoid");
                }
            }
            if (k > 0) {
                for (const auto &a : au->chain[k - 1]) {
                    if (!std::binary_search(stage.begin(), stage.end(), a)) {
                        reject("chain is not ascending: atom " + a.str() + " of member " + std::to_string(k - 1)
                               + " missing from member " + std::to_string(k));
                    }
                }
            }
        }
        report.conditions.push_back("ambient certified, reduced, ACCP");
        report.conditions.push_back("every chain atom lies in the ambient monoid (" + std::to_string(au->chain.size())
                                    + " members)");
        report.conditions.push_back("atom sets ascend along the chain");
        report.conditions.push_back("union is a reduced submonoid of the ambient");
    } else {
        const auto &cp = std::get<CoproductRule>(c.node);
        if (cp.children.empty()) {
            reject("coproduct has no components");
        }
        std::size_t total = 0;
        for (std::size_t i = 0; i < cp.children.size(); ++i) {
            total += check_node(cp.children[i], path + "/" + std::to_string(i), reports);
        }
        report.dimension = total;
        report.conditions.push_back("all " + std::to_string(cp.children.size()) + " components certified");
    }
    reports.push_back(report);
    return report.dimension;
}

} // namespace detail

inline CheckResult check_certificate(const AccpCertificate &cert)
{
    Verified v;
    try {
        v.dimension = detail::check_node(cert, "root", v.nodes);
    } catch (const detail::CertificateFailure &f) {
        return Rejected{f.path, f.rule, f.reason};
    }
    return v;
}

/// AscendingUnion(PositiveSum(M_P, m_0^{-1}N_0), M_0 ⊆ M_1 ⊆ ...).
inline AccpCertificate certificate_for(const ConstructionTrace &trace)
{
    AccpCertificate ambient = AccpCertificate::positive_sum(AccpCertificate::prime_reciprocal(PrimeReciprocal()),
                                                            MonoidHandle{trace.monoid_at(0)});
    return AccpCertificate::ascending_union(std::move(ambient), trace.atoms_per_stage);
}

/// ({0} u Q>=1) + <1/p : p prime>: not atomic, so it must not certify.
inline AccpCertificate non_atomic_certificate()
{
    MonoidHandle rationals_from_one = OpaqueMonoid{"{0} u Q>=1 (BF-monoid, not finitely generated)", false};
    return AccpCertificate::positive_sum(AccpCertificate::finitely_generated(rationals_from_one),
                                         MonoidHandle{PrimeReciprocal()});
}

// ---------------------------------------------------------------------------
// Divisibility chains.

struct StabilizesAt {
    std::size_t index;
};
struct NotAChain {
    std::size_t index;
};
struct Undecided {
    std::size_t checked;
};
using ProbeResult = std::variant<StabilizesAt, NotAChain, Undecided>;

using ProbeMonoid = std::variant<FgPuiseux, PrimeReciprocal>;

/// Checks that q_{i+1} divides q_i (q_i - q_{i+1} in M) along the list and
/// reports the 1-based index where the final constant run starts. Indices of
/// failures are 1-based positions of the pair's first element.
inline ProbeResult chain_probe(const ProbeMonoid &m, const std::vector<Rational> &elements, std::size_t bound)
{
    if (elements.empty()) {
        return StabilizesAt{0};
    }
    const std::size_t pairs = elements.size() - 1;
    const std::size_t checked = std::min(pairs, bound);
    for (std::size_t i = 0; i < checked; ++i) {
        const Rational diff = elements[i] - elements[i + 1];
        std::optional<bool> in;
        if (auto f = std::get_if<FgPuiseux>(&m)) {
            in = f->contains(diff);
        } else {
            in = detail::handle_contains(MonoidHandle{std::get<PrimeReciprocal>(m)}, diff);
        }
        if (!in) {
            return Undecided{i};
        }
        if (!*in) {
            return NotAChain{i + 1};
        }
    }
    if (checked < pairs) {
        return Undecided{checked};
    }
    std::size_t start = elements.size();
    while (start > 1 && elements[start - 2] == elements[start - 1]) {
        --start;
    }
    return StabilizesAt{start};
}

// ---------------------------------------------------------------------------
// The non-atomic sum ({0} u Q>=1) + <1/p : p in P>, whose atoms are exactly
// {1/p : p in P}.

struct NonAtomicConfig {
    PrimeStream primes = PrimeStream::primes();
};

struct WitnessNotFactorable {
    std::string reason;
    std::optional<Integer> prime;
    std::optional<long> valuation;
    bool in_monoid = true;
};
struct Factored {
    /// p -> number of copies of the atom 1/p.
    std::map<Integer, Integer> copies;
    Length length() const
    {
        Integer l = 0;
        for (const auto &[p, k] : copies) {
            l += k;
        }
        return to_u64(l);
    }
};
struct NoFactorizationWithinCap {
    Length shortest;
};
using WitnessResult = std::variant<WitnessNotFactorable, Factored, NoFactorizationWithinCap>;

inline WitnessResult non_atomic_witness(const NonAtomicConfig &config, const Rational &q, Length cap)
{
    if (q.sign() < 0) {
        return WitnessNotFactorable{"negative value", std::nullopt, std::nullopt, false};
    }
    const bool in_monoid = q.is_zero() || q >= Rational(1) || PrimeReciprocal(config.primes).contains(q);
    auto d = PrimeReciprocal(config.primes).decompose(q);
    if (auto miss = std::get_if<NotMember>(&d)) {
        std::string reason = miss->reason;
        if (miss->valuation && *miss->valuation < -1) {
            reason += "; every sum of atoms 1/p has v_p >= -1";
        }
        return WitnessNotFactorable{reason, miss->prime, miss->valuation, in_monoid};
    }
    const auto &dec = std::get<CanonicalDecomposition>(d);
    Factored z;
    for (const auto &[p, c] : dec.coeffs) {
        z.copies[p] += c;
    }
    if (dec.integer_part > 0) {
        const Integer smallest = config.primes.at(0);
        z.copies[smallest] += dec.integer_part * smallest;
    }
    const Length len = z.length();
    if (len > cap) {
        return NoFactorizationWithinCap{len};
    }
    return z;
}

} // namespace lengthsets

#endif
