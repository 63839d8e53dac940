// JSON forms of the library's values. Integers are JSON numbers when they
// fit in int64 and decimal strings otherwise; rationals are "n/d" strings.
#ifndef LENGTHSETS_IO_HPP
#define LENGTHSETS_IO_HPP

#include <limits>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lengthsets/accp.hpp"
#include "lengthsets/arith.hpp"
#include "lengthsets/errors.hpp"
#include "lengthsets/lengths.hpp"
#include "lengthsets/numerical_monoid.hpp"
#include "lengthsets/prime_reciprocal.hpp"
#include "lengthsets/puiseux.hpp"
#include "lengthsets/realize.hpp"

namespace lengthsets::io
{

using nlohmann::json;

inline json integer_json(const Integer &v)
{
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(v);
    }
    return v.str();
}

inline Integer integer_from(const json &j)
{
    if (j.is_number_integer()) {
        return Integer(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        return parse_integer(j.get<std::string>());
    }
    throw DomainError("json: expected an integer, got " + j.dump());
}

inline Length length_from(const json &j)
{
    const Integer v = integer_from(j);
    if (v < 0 || !fits_u64(v)) {
        throw DomainError("json: length out of range: " + j.dump());
    }
    return to_u64(v);
}

inline json rational_json(const Rational &q)
{
    return q.str();
}

inline Rational rational_from(const json &j)
{
    if (j.is_string()) {
        return Rational::parse(j.get<std::string>());
    }
    return Rational(integer_from(j));
}

inline json rationals_json(const std::vector<Rational> &v)
{
    json out = json::array();
    for (const auto &q : v) {
        out.push_back(rational_json(q));
    }
    return out;
}

inline std::vector<Rational> rationals_from(const json &j)
{
    std::vector<Rational> out;
    for (const auto &x : j) {
        out.push_back(rational_from(x));
    }
    return out;
}

inline json integers_json(const std::vector<Integer> &v)
{
    json out = json::array();
    for (const auto &x : v) {
        out.push_back(integer_json(x));
    }
    return out;
}

inline std::vector<Integer> integers_from(const json &j)
{
    std::vector<Integer> out;
    for (const auto &x : j) {
        out.push_back(integer_from(x));
    }
    return out;
}

inline json lengths_json(const LengthSet &l)
{
    json out = json::array();
    for (Length x : l) {
        out.push_back(x);
    }
    return out;
}

inline LengthSet lengths_from(const json &j)
{
    LengthSet out;
    for (const auto &x : j) {
        out.insert(length_from(x));
    }
    return out;
}

inline json stream_json(const PrimeStream &s)
{
    if (!s.is_finite()) {
        return "primes";
    }
    return integers_json(s.explicit_values());
}

inline PrimeStream stream_from(const json &j)
{
    if (j.is_string() && j.get<std::string>() == "primes") {
        return PrimeStream::primes();
    }
    return PrimeStream::from_list(integers_from(j));
}

inline json monoid_json(const NumericalMonoid &m)
{
    return {{"kind", "numerical"}, {"atoms", integers_json(m.atoms())}};
}

inline json monoid_json(const FgPuiseux &m)
{
    return {{"kind", "puiseux"}, {"atoms", rationals_json(m.atoms())}};
}

inline json monoid_json(const PrimeReciprocal &m)
{
    return {{"kind", "prime_reciprocal"}, {"stream", stream_json(m.stream())}};
}

inline FgPuiseux puiseux_from(const json &j)
{
    return FgPuiseux::generated_by(rationals_from(j.at("atoms")));
}

inline json decomposition_json(const Decomposition &d)
{
    if (auto miss = std::get_if<NotMember>(&d)) {
        json out = {{"member", false}, {"reason", miss->reason}};
        if (miss->prime) {
            out["prime"] = integer_json(*miss->prime);
        }
        if (miss->valuation) {
            out["valuation"] = *miss->valuation;
        }
        return out;
    }
    const auto &c = std::get<CanonicalDecomposition>(d);
    json coeffs = json::object();
    for (const auto &[p, k] : c.coeffs) {
        coeffs[p.str()] = integer_json(k);
    }
    return {{"member", true}, {"N", integer_json(c.integer_part)}, {"coeffs", coeffs},
            {"s", integer_json(c.coefficient_sum())}};
}

inline json symbolic_json(const LengthSetSymbolic &l, Length cap)
{
    json out;
    if (l.is_shifted()) {
        const auto &s = l.shifted();
        out = {{"kind", "shifted"}, {"base", s.base}, {"copies", s.copies}, {"stream", stream_json(s.stream)}};
    } else {
        out = {{"kind", "finite"}, {"set", lengths_json(l.finite().set)}};
    }
    out["cap"] = cap;
    out["enumerated"] = lengths_json(l.enumerate(cap));
    return out;
}

// ---------------------------------------------------------------------------
// Construction traces.

inline json stage_json(const StagePlan &st)
{
    return {{"n", st.index},           {"ell", st.ell},          {"s", st.s},
            {"t", st.t},               {"p", integer_json(st.p)}, {"b", integer_json(st.b)},
            {"c", integer_json(st.c)}};
}

inline StagePlan stage_from(const json &j)
{
    StagePlan st;
    st.index = j.at("n").get<std::size_t>();
    st.ell = length_from(j.at("ell"));
    st.s = length_from(j.at("s"));
    st.t = length_from(j.at("t"));
    st.p = integer_from(j.at("p"));
    st.b = integer_from(j.at("b"));
    st.c = integer_from(j.at("c"));
    return st;
}

inline json trace_json(const ConstructionTrace &t)
{
    json target = {{"finite", lengths_json(t.target_finite)}, {"extendable", t.extendable}};
    json tail = json::array();
    for (Length l : t.tail) {
        tail.push_back(l);
    }
    target["tail"] = tail;
    target["ell0"] = t.ell0 ? json(*t.ell0) : json(nullptr);

    json base = {{"atoms", integers_json(t.base_monoid.atoms())},
                 {"element", integer_json(t.base_element)},
                 {"L0", lengths_json(t.base_lengths)},
                 {"strategy", t.base_strategy},
                 {"squarefree", t.base_squarefree}};
    json stages = json::array();
    for (const auto &st : t.stages) {
        stages.push_back(stage_json(st));
    }
    json atoms = json::array();
    for (const auto &a : t.atoms_per_stage) {
        atoms.push_back(rationals_json(a));
    }
    json lengths = json::array();
    for (const auto &l : t.lengths_per_stage) {
        lengths.push_back(lengths_json(l));
    }
    return {{"target", target},       {"base", base},
            {"stages", stages},       {"atoms_per_stage", atoms},
            {"lengths_per_stage", lengths}, {"final_lengths", lengths_json(t.final_lengths())}};
}

inline ConstructionTrace trace_from(const json &j)
{
    ConstructionTrace t;
    const json &target = j.at("target");
    t.target_finite = lengths_from(target.at("finite"));
    for (const auto &x : target.at("tail")) {
        t.tail.push_back(length_from(x));
    }
    if (!target.at("ell0").is_null()) {
        t.ell0 = length_from(target.at("ell0"));
    }
    t.extendable = target.at("extendable").get<bool>();
    const json &base = j.at("base");
    t.base_monoid = NumericalMonoid::generated_by(integers_from(base.at("atoms")));
    t.base_element = integer_from(base.at("element"));
    t.base_lengths = lengths_from(base.at("L0"));
    t.base_strategy = base.at("strategy").get<std::string>();
    t.base_squarefree = base.at("squarefree").get<bool>();
    for (const auto &st : j.at("stages")) {
        t.stages.push_back(stage_from(st));
    }
    for (const auto &a : j.at("atoms_per_stage")) {
        t.atoms_per_stage.push_back(rationals_from(a));
    }
    for (const auto &l : j.at("lengths_per_stage")) {
        t.lengths_per_stage.push_back(lengths_from(l));
    }
    if (t.atoms_per_stage.empty() || t.lengths_per_stage.empty()) {
        throw DomainError("trace: empty stage lists");
    }
    return t;
}

// ---------------------------------------------------------------------------
// Certificates.

inline json handle_json(const MonoidHandle &m)
{
    if (auto n = std::get_if<NumericalMonoid>(&m)) {
        return monoid_json(*n);
    }
    if (auto f = std::get_if<FgPuiseux>(&m)) {
        return monoid_json(*f);
    }
    if (auto p = std::get_if<PrimeReciprocal>(&m)) {
        return monoid_json(*p);
    }
    const auto &o = std::get<OpaqueMonoid>(m);
    return {{"kind", "opaque"}, {"description", o.description}, {"finitely_generated", o.finitely_generated}};
}

inline MonoidHandle handle_from(const json &j)
{
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "numerical") {
        return NumericalMonoid::generated_by(integers_from(j.at("atoms")));
    }
    if (kind == "puiseux") {
        return puiseux_from(j);
    }
    if (kind == "prime_reciprocal") {
        return PrimeReciprocal(stream_from(j.at("stream")));
    }
    if (kind == "opaque") {
        return OpaqueMonoid{j.at("description").get<std::string>(), j.at("finitely_generated").get<bool>()};
    }
    throw DomainError("certificate: unknown monoid kind '" + kind + "'");
}

inline json certificate_json(const AccpCertificate &c)
{
    json out = {{"rule", rule_name(c)}};
    if (auto fg = std::get_if<FinitelyGeneratedRule>(&c.node)) {
        out["monoid"] = handle_json(fg->monoid);
    } else if (auto pr = std::get_if<PrimeReciprocalRule>(&c.node)) {
        out["monoid"] = monoid_json(pr->monoid);
    } else if (auto ps = std::get_if<PositiveSumRule>(&c.node)) {
        out["base"] = certificate_json(*ps->base);
        out["summand"] = handle_json(ps->summand);
    } else if (auto au = std::get_if<AscendingUnionRule>(&c.node)) {
        out["ambient"] = certificate_json(*au->ambient);
        json chain = json::array();
        for (const auto &stage : au->chain) {
            chain.push_back(rationals_json(stage));
        }
        out["chain"] = chain;
    } else {
        json children = json::array();
        for (const auto &child : std::get<CoproductRule>(c.node).children) {
            children.push_back(certificate_json(child));
        }
        out["children"] = children;
    }
    return out;
}

inline AccpCertificate certificate_from(const json &j)
{
    const std::string rule = j.at("rule").get<std::string>();
    if (rule == "FinitelyGenerated") {
        return AccpCertificate::finitely_generated(handle_from(j.at("monoid")));
    }
    if (rule == "PrimeReciprocalAtomic") {
        auto h = handle_from(j.at("monoid"));
        if (!std::holds_alternative<PrimeReciprocal>(h)) {
            throw DomainError("certificate: PrimeReciprocalAtomic needs a prime-reciprocal monoid");
        }
        return AccpCertificate::prime_reciprocal(std::get<PrimeReciprocal>(h));
    }
    if (rule == "PositiveSum") {
        return AccpCertificate::positive_sum(certificate_from(j.at("base")), handle_from(j.at("summand")));
    }
    if (rule == "AscendingUnion") {
        std::vector<std::vector<Rational>> chain;
        for (const auto &stage : j.at("chain")) {
            chain.push_back(rationals_from(stage));
        }
        return AccpCertificate::ascending_union(certificate_from(j.at("ambient")), std::move(chain));
    }
    if (rule == "Coproduct") {
        std::vector<AccpCertificate> children;
        for (const auto &child : j.at("children")) {
            children.push_back(certificate_from(child));
        }
        return AccpCertificate::coproduct(std::move(children));
    }
    throw DomainError("certificate: unknown rule '" + rule + "'");
}

inline json check_json(const CheckResult &r)
{
    if (auto rej = std::get_if<Rejected>(&r)) {
        return {{"status", "rejected"}, {"path", rej->path}, {"rule", rej->rule}, {"reason", rej->reason}};
    }
    const auto &v = std::get<Verified>(r);
    json nodes = json::array();
    for (const auto &n : v.nodes) {
        nodes.push_back({{"path", n.path}, {"rule", n.rule}, {"conditions", n.conditions}, {"dimension", n.dimension}});
    }
    return {{"status", "verified"}, {"dimension", v.dimension}, {"nodes", nodes}};
}

inline json witness_json(const WitnessResult &w)
{
    if (auto nf = std::get_if<WitnessNotFactorable>(&w)) {
        json out = {{"outcome", "not_factorable"}, {"reason", nf->reason}, {"in_monoid", nf->in_monoid}};
        if (nf->prime) {
            out["prime"] = integer_json(*nf->prime);
        }
        if (nf->valuation) {
            out["valuation"] = *nf->valuation;
        }
        return out;
    }
    if (auto f = std::get_if<Factored>(&w)) {
        json copies = json::object();
        for (const auto &[p, k] : f->copies) {
            copies[p.str()] = integer_json(k);
        }
        return {{"outcome", "factored"}, {"copies", copies}, {"length", f->length()}};
    }
    return {{"outcome", "no_factorization_within_cap"}, {"shortest", std::get<NoFactorizationWithinCap>(w).shortest}};
}

} // namespace lengthsets::io

#endif
