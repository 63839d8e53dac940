// Realizes {2, 3, 10, 13, 17} as L(1) of a Puiseux monoid with the ACCP and
// prints the stages and the certificate check.
#include <iostream>
#include <variant>

#include "lengthsets/lengthsets.hpp"

using namespace lengthsets;

int main()
{
    const ConstructionTrace trace = realize_length_set({2, 3, 10}, tail_from_list({13, 17}), 2);

    std::cout << "base: " << trace.base_element << " in <";
    for (std::size_t i = 0; i < trace.base_monoid.atoms().size(); ++i) {
        std::cout << (i ? "," : "") << trace.base_monoid.atoms()[i];
    }
    std::cout << ">, L0 = " << to_string(trace.base_lengths) << " (" << trace.base_strategy << ")\n";

    for (const auto &st : trace.stages) {
        std::cout << "stage " << st.index << ": ell=" << st.ell << " (s,t)=(" << st.s << "," << st.t << ") p=" << st.p
                  << " (b,c)=(" << st.b << "," << st.c << ")\n";
    }
    std::cout << "L(1) = " << to_string(trace.final_lengths()) << '\n';

    const TraceCheck check = verify_trace(trace);
    std::cout << "trace verified: " << (check.ok ? "yes" : "no") << '\n';

    const CheckResult cert = check_certificate(certificate_for(trace));
    if (const auto *v = std::get_if<Verified>(&cert)) {
        for (const auto &node : v->nodes) {
            std::cout << "  " << node.path << " " << node.rule << '\n';
        }
    }
    return check.ok && std::holds_alternative<Verified>(cert) ? 0 : 1;
}
