// Command-line front end. run_cli is the whole program; main() only forwards
// argv, so tests drive it in-process.
//
// Exit status: 0 success, 2 domain error or failed check, 3 budget
// exhausted, 64 usage error, 70 internal invariant failure.
#ifndef LENGTHSETS_TOOLS_CLI_HPP
#define LENGTHSETS_TOOLS_CLI_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11/CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lengthsets/lengthsets.hpp"

namespace lengthsets::cli
{

using nlohmann::json;

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain = 2;
inline constexpr int exit_budget = 3;
inline constexpr int exit_usage = 64;
inline constexpr int exit_internal = 70;

inline constexpr const char *config_env = "LENGTHSETS_CONFIG";

struct Config {
    std::uint64_t prime_bound = 13;
    std::uint64_t cap = 64;
    std::uint64_t budget = 1'000'000;
    std::string format = "json";
    std::uint64_t seed = 1;

    json to_json() const
    {
        return {{"prime_bound", prime_bound}, {"cap", cap}, {"budget", budget}, {"format", format}, {"seed", seed}};
    }

    void validate() const
    {
        if (prime_bound < 2 || cap == 0 || budget == 0) {
            throw DomainError("config: prime_bound must be >= 2, cap and budget positive");
        }
        if (format != "json" && format != "table") {
            throw DomainError("config: format must be json or table");
        }
    }
};

/// Reads the JSON file named by LENGTHSETS_CONFIG, if set.
inline Config load_config()
{
    Config c;
    const char *path = std::getenv(config_env);
    if (!path || !*path) {
        return c;
    }
    std::ifstream in(path);
    if (!in) {
        throw DomainError(std::string("config: cannot open ") + path);
    }
    json j;
    try {
        in >> j;
    } catch (const json::exception &e) {
        throw DomainError(std::string("config: ") + e.what());
    }
    c.prime_bound = j.value("prime_bound", c.prime_bound);
    c.cap = j.value("cap", c.cap);
    c.budget = j.value("budget", c.budget);
    c.format = j.value("format", c.format);
    c.seed = j.value("seed", c.seed);
    c.validate();
    return c;
}

namespace detail
{

inline std::vector<std::string> split_list(const std::string &text)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        item.erase(0, item.find_first_not_of(' '));
        item.erase(item.find_last_not_of(' ') + 1);
        if (item.empty()) {
            throw DomainError("empty item in list '" + text + "'");
        }
        out.push_back(item);
    }
    if (out.empty()) {
        throw DomainError("empty list");
    }
    return out;
}

inline std::vector<Integer> integer_list(const std::string &text)
{
    std::vector<Integer> out;
    for (const auto &s : split_list(text)) {
        out.push_back(parse_integer(s));
    }
    return out;
}

inline std::vector<Rational> rational_list(const std::string &text)
{
    std::vector<Rational> out;
    for (const auto &s : split_list(text)) {
        out.push_back(Rational::parse(s));
    }
    return out;
}

inline std::vector<Length> length_list(const std::string &text)
{
    std::vector<Length> out;
    for (const auto &v : integer_list(text)) {
        if (v < 0 || !fits_u64(v)) {
            throw DomainError("length out of range: " + v.str());
        }
        out.push_back(to_u64(v));
    }
    return out;
}

inline json read_json_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw DomainError("cannot open " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw DomainError(path + ": " + e.what());
    }
}

// Accepts a bare trace or an artifact carrying one under "result".
inline const json &trace_node(const json &artifact)
{
    if (artifact.contains("result") && artifact["result"].contains("trace")) {
        return artifact["result"]["trace"];
    }
    if (artifact.contains("trace")) {
        return artifact["trace"];
    }
    return artifact;
}

inline void render_table(const json &v, const std::string &prefix, std::ostream &out)
{
    if (v.is_object()) {
        for (const auto &[k, x] : v.items()) {
            render_table(x, prefix.empty() ? k : prefix + "." + k, out);
        }
        return;
    }
    out << prefix << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
}

} // namespace detail

struct Emitted {
    json result;
    int status = exit_ok;
};

inline int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Length sets of Puiseux and numerical monoids", "lengthsets"};
    app.require_subcommand(1);

    Config config;
    try {
        config = load_config();
    } catch (const DomainError &e) {
        err << "error: " << e.what() << '\n';
        return exit_domain;
    }
    app.add_option("--prime-bound", config.prime_bound, "prime truncation bound")->check(CLI::Range(2ull, ~0ull));
    app.add_option("--cap", config.cap, "length cap for enumerations")->check(CLI::PositiveNumber);
    app.add_option("--budget", config.budget, "search node limit")->check(CLI::PositiveNumber);
    app.add_option("--format", config.format, "output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--seed", config.seed, "seed for randomized commands");

    std::string gens, elem, q, primes, set, tail, emit, cert, monoid, exp, f_text, g_text;
    std::size_t depth = 0;
    std::size_t trials = 50;
    bool brute = false;

    auto *nm = app.add_subcommand("nm", "numerical monoids");
    nm->require_subcommand(1);
    auto *nm_lengths = nm->add_subcommand("lengths", "length set of an element");
    nm_lengths->add_option("--gens", gens, "generators, e.g. 3,4,5")->required();
    nm_lengths->add_option("--elem", elem, "element")->required();
    auto *nm_frobenius = nm->add_subcommand("frobenius", "Frobenius number");
    nm_frobenius->add_option("--gens", gens, "generators")->required();
    auto *nm_selfcheck = nm->add_subcommand("selfcheck", "seeded cross-check of membership and length tables");
    nm_selfcheck->add_option("--trials", trials, "number of random monoids")->check(CLI::PositiveNumber);

    auto *mp = app.add_subcommand("mp", "prime-reciprocal monoids");
    mp->require_subcommand(1);
    auto *mp_decompose = mp->add_subcommand("decompose", "canonical decomposition");
    mp_decompose->add_option("--q", q, "rational, e.g. 5/6")->required();
    mp_decompose->add_option("--primes", primes, "explicit pairwise coprime P (default: all primes)");
    auto *mp_lengths = mp->add_subcommand("lengths", "length set, enumerated up to the cap");
    mp_lengths->add_option("--q", q, "rational")->required();
    mp_lengths->add_option("--primes", primes, "explicit pairwise coprime P (default: all primes)");
    mp_lengths->add_flag("--brute", brute, "also enumerate factorizations over primes <= prime bound");

    auto *realize = app.add_subcommand("realize", "realize a length set as L(1)");
    realize->add_option("--set", set, "finite part, e.g. 2,3,10")->required();
    realize->add_option("--tail", tail, "ascending tail, e.g. 13,17");
    realize->add_option("--depth", depth, "number of tail stages (default: whole tail)");
    realize->add_option("--emit", emit, "write the artifact to this file");

    auto *accp = app.add_subcommand("accp", "ACCP certificates");
    accp->require_subcommand(1);
    auto *accp_check = accp->add_subcommand("check", "check a trace's certificate and re-verify the trace");
    accp_check->add_option("--cert", cert, "artifact written by realize --emit")->required();
    auto *accp_nonatomic = accp->add_subcommand("nonatomic", "the non-atomic sum ({0} u Q>=1) + <1/p>");
    accp_nonatomic->add_option("--q", q, "rational")->required();

    auto *algebra = app.add_subcommand("algebra", "monoid algebra Q[M]");
    algebra->require_subcommand(1);
    auto *alg_lengths = algebra->add_subcommand("lengths", "length set of the monomial X^e");
    alg_lengths->add_option("--monoid", monoid, "artifact or trace JSON; uses the final monoid");
    alg_lengths->add_option("--gens", gens, "rational generators instead of --monoid, e.g. 1/2,1/3");
    alg_lengths->add_option("--exp", exp, "exponent")->required();
    auto *alg_multiply = algebra->add_subcommand("multiply", "product of two elements");
    alg_multiply->add_option("--f", f_text, "e.g. '2*X^(1/2) + 1*X^(0)'")->required();
    alg_multiply->add_option("--g", g_text, "second factor")->required();

    // Global options may follow the subcommand.
    for (auto *group : {nm, mp, accp, algebra}) {
        group->fallthrough();
        for (auto *sub : group->get_subcommands({})) {
            sub->fallthrough();
        }
    }
    realize->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return exit_usage;
    }

    std::string command;
    for (const auto *sub = &app; !sub->get_subcommands().empty();) {
        sub = sub->get_subcommands().front();
        command += (command.empty() ? "" : " ") + sub->get_name();
    }

    auto run = [&]() -> Emitted {
        config.validate();
        Emitted e;
        if (nm_lengths->parsed()) {
            const auto m = NumericalMonoid::generated_by(detail::integer_list(gens));
            const Integer x = parse_integer(elem);
            if (!m.contains(x)) {
                throw DomainError(x.str() + " is not in the monoid");
            }
            const LengthSet l = m.length_set(x, NodeBudget{config.budget * 100, 0});
            e.result = {{"monoid", io::monoid_json(m)},
                        {"element", io::integer_json(x)},
                        {"lengths", io::lengths_json(l)},
                        {"text", to_string(l)}};
        } else if (nm_frobenius->parsed()) {
            const auto m = NumericalMonoid::generated_by(detail::integer_list(gens));
            e.result = {{"monoid", io::monoid_json(m)}, {"frobenius", io::integer_json(m.frobenius())}};
        } else if (nm_selfcheck->parsed()) {
            std::mt19937_64 rng(config.seed);
            std::uniform_int_distribution<int> count(2, 4), atom(2, 30);
            std::size_t failures = 0;
            json cases = json::array();
            for (std::size_t i = 0; i < trials; ++i) {
                std::vector<Integer> g;
                const int k = count(rng);
                for (int j = 0; j < k; ++j) {
                    g.push_back(atom(rng));
                }
                if (gcd_of(g) != 1) {
                    g.push_back(g.front() + 1);
                }
                const auto m = NumericalMonoid::generated_by(g);
                const Integer f = m.frobenius();
                bool ok = !m.contains(f);
                for (Integer x = f + 1; x <= f + m.atoms().front() && ok; ++x) {
                    ok = m.contains(x);
                }
                const Integer x = f + 1 + Integer(i % 17);
                LengthSet from_factorizations;
                for (const auto &z : m.factorizations(x)) {
                    from_factorizations.insert(z.length());
                }
                ok = ok && from_factorizations == m.length_set(x);
                failures += ok ? 0 : 1;
                cases.push_back({{"atoms", io::integers_json(m.atoms())}, {"frobenius", io::integer_json(f)},
                                 {"ok", ok}});
            }
            e.result = {{"trials", trials}, {"failures", failures}, {"cases", cases}};
            e.status = failures == 0 ? exit_ok : exit_domain;
        } else if (mp_decompose->parsed() || mp_lengths->parsed()) {
            const PrimeStream stream =
                primes.empty() ? PrimeStream::primes() : PrimeStream::from_list(detail::integer_list(primes));
            const PrimeReciprocal m(stream);
            const Rational value = Rational::parse(q);
            e.result = {{"q", io::rational_json(value)}, {"stream", io::stream_json(stream)}};
            if (mp_decompose->parsed()) {
                e.result["decomposition"] = io::decomposition_json(m.decompose(value));
            } else if (stream.all_prime()) {
                const auto d = m.decompose(value);
                if (auto miss = std::get_if<NotMember>(&d)) {
                    throw DomainError(value.str() + " is not in M_P: " + miss->reason);
                }
                const auto symbolic = m.length_set(value);
                e.result["lengths"] = io::symbolic_json(symbolic, config.cap);
                e.result["text"] = to_string(symbolic.enumerate(config.cap));
                if (brute) {
                    e.result["bounded"] = {
                        {"truncation", config.prime_bound},
                        {"lengths",
                         io::lengths_json(m.bounded_length_set(value, Integer(config.prime_bound), config.cap))}};
                }
            } else {
                const Integer top = stream.explicit_values().back();
                const LengthSet l = m.bounded_length_set(value, top, config.cap);
                e.result["lengths"] = {{"kind", "bounded"}, {"cap", config.cap}, {"enumerated", io::lengths_json(l)}};
                e.result["text"] = to_string(l);
            }
        } else if (realize->parsed()) {
            const auto finite_values = detail::length_list(set);
            const LengthSet finite(finite_values.begin(), finite_values.end());
            std::vector<Length> tail_values;
            if (!tail.empty()) {
                tail_values = detail::length_list(tail);
            }
            if (depth == 0) {
                depth = tail_values.size();
            }
            RealizeOptions options;
            options.finite.node_limit = config.budget;
            const TailEnumerator tail_fn = tail_values.empty() ? TailEnumerator{} : tail_from_list(tail_values);
            const ConstructionTrace trace = realize_length_set(finite, tail_fn, depth, options);
            const TraceCheck check = verify_trace(trace);
            if (!check.ok) {
                throw ConstructionError("realize: trace failed verification: " + check.findings.front());
            }
            const auto certificate = certificate_for(trace);
            const auto checked = check_certificate(certificate);
            e.result = {{"trace", io::trace_json(trace)},
                        {"certificate", io::certificate_json(certificate)},
                        {"certificate_check", io::check_json(checked)},
                        {"verified", true},
                        {"lengths", io::lengths_json(trace.final_lengths())},
                        {"text", to_string(trace.final_lengths())}};
        } else if (accp_check->parsed()) {
            const json artifact = detail::read_json_file(cert);
            const json &trace_j = detail::trace_node(artifact);
            const ConstructionTrace trace = io::trace_from(trace_j);
            const TraceCheck tc = verify_trace(trace);
            const auto derived = certificate_for(trace);
            CheckResult checked = check_certificate(derived);
            bool matches = true;
            if (artifact.contains("result") && artifact["result"].contains("certificate")) {
                const auto embedded = io::certificate_from(artifact["result"]["certificate"]);
                matches = io::certificate_json(embedded) == io::certificate_json(derived);
                if (matches) {
                    checked = check_certificate(embedded);
                }
            }
            e.result = {{"trace_ok", tc.ok},
                        {"findings", tc.findings},
                        {"certificate_matches_trace", matches},
                        {"certificate_check", io::check_json(checked)},
                        {"lengths", io::lengths_json(trace.final_lengths())}};
            const bool ok = tc.ok && matches && std::holds_alternative<Verified>(checked);
            e.result["verified"] = ok;
            e.status = ok ? exit_ok : exit_domain;
        } else if (accp_nonatomic->parsed()) {
            const Rational value = Rational::parse(q);
            e.result = {{"q", io::rational_json(value)},
                        {"certificate", io::certificate_json(non_atomic_certificate())},
                        {"certificate_check", io::check_json(check_certificate(non_atomic_certificate()))},
                        {"witness", io::witness_json(non_atomic_witness({}, value, config.cap))}};
        } else if (alg_lengths->parsed()) {
            if (monoid.empty() == gens.empty()) {
                throw DomainError("algebra lengths: give exactly one of --monoid and --gens");
            }
            const FgPuiseux m = gens.empty() ? io::trace_from(detail::trace_node(detail::read_json_file(monoid)))
                                                   .final_monoid()
                                             : FgPuiseux::generated_by(detail::rational_list(gens));
            const Rational e_value = Rational::parse(exp);
            const LengthSet l = monomial_length_set(e_value, m, NodeBudget{config.budget * 100, 0});
            const MonomialCheck mc = verify_monomial(e_value, m);
            e.result = {{"monomial", PuiseuxAlgebraElement::monomial(e_value).str()},
                        {"atoms", io::rationals_json(m.atoms())},
                        {"lengths", io::lengths_json(l)},
                        {"text", to_string(l)},
                        {"divisor_check",
                         {{"performed", mc.performed},
                          {"ok", mc.ok},
                          {"skipped_reason", mc.skipped_reason},
                          {"divisors", mc.divisors},
                          {"lengths_up_to_6", io::lengths_json(mc.lengths)},
                          {"findings", mc.findings}}}};
            e.status = mc.ok ? exit_ok : exit_domain;
        } else if (alg_multiply->parsed()) {
            const auto f = PuiseuxAlgebraElement::parse(f_text);
            const auto g = PuiseuxAlgebraElement::parse(g_text);
            e.result = {{"f", f.str()}, {"g", g.str()}, {"product", (f * g).str()}};
        }
        return e;
    };

    try {
        Emitted e = run();
        json artifact = {{"command", command}, {"config", config.to_json()}, {"result", e.result}};
        if (!emit.empty()) {
            std::ofstream file(emit);
            if (!file) {
                throw DomainError("cannot write " + emit);
            }
            file << artifact.dump(2) << '\n';
        }
        if (config.format == "json") {
            out << artifact.dump(2) << '\n';
        } else {
            detail::render_table(artifact, "", out);
        }
        return e.status;
    } catch (const BudgetExhausted &e) {
        err << "budget exhausted: " << e.what() << " (frontier: " << e.frontier() << ")\n";
        return exit_budget;
    } catch (const DomainError &e) {
        err << "error: " << e.what() << '\n';
        return exit_domain;
    } catch (const json::exception &e) {
        err << "error: malformed input: " << e.what() << '\n';
        return exit_domain;
    } catch (const ConstructionError &e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
}

} // namespace lengthsets::cli

#endif
