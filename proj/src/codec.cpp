#include "gaussforge/codec.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "gaussforge/errors.hpp"
#include "gaussforge/invariants.hpp"
#include "gaussforge/parity.hpp"
#include "gaussforge/surface.hpp"

namespace gaussforge {

namespace {
constexpr const char* kModule = "codec";

bool is_separator(char c) {
    return c == ',' || std::isspace(static_cast<unsigned char>(c)) != 0;
}
} // namespace

GaussDiagram parse(const std::string& code) {
    std::vector<EndpointToken> tokens;
    std::size_t i = 0;
    while (i < code.size()) {
        if (is_separator(code[i])) {
            ++i;
            continue;
        }
        const long index = static_cast<long>(tokens.size());
        const std::string at = " at token " + std::to_string(index + 1);

        EndpointToken t;
        if (code[i] == 'O') t.role = Role::Over;
        else if (code[i] == 'U') t.role = Role::Under;
        else
            fail(ErrorKind::TokenSyntax, kModule,
                 std::string("expected 'O' or 'U', got '") + code[i] + "'" + at, index);
        ++i;

        std::uint64_t label = 0;
        std::size_t digits = 0;
        while (i < code.size() && std::isdigit(static_cast<unsigned char>(code[i]))) {
            label = label * 10 + static_cast<std::uint64_t>(code[i] - '0');
            ++digits;
            ++i;
            if (digits > 9)
                fail(ErrorKind::TokenSyntax, kModule, "label has too many digits" + at, index);
        }
        if (digits == 0)
            fail(ErrorKind::TokenSyntax, kModule, "expected label digits" + at, index);
        if (label == 0)
            fail(ErrorKind::TokenSyntax, kModule, "label must be positive" + at, index);
        t.label = static_cast<std::uint32_t>(label);

        if (i >= code.size() || (code[i] != '+' && code[i] != '-'))
            fail(ErrorKind::TokenSyntax, kModule, "expected '+' or '-' sign" + at, index);
        t.sign = code[i] == '+' ? 1 : -1;
        ++i;

        tokens.push_back(t);
    }
    return GaussDiagram::from_endpoint_tokens(tokens);
}

std::string serialize(const GaussDiagram& d) {
    std::ostringstream out;
    std::map<std::uint32_t, std::uint32_t> renumber;
    std::uint32_t next = 1;
    for (const EndpointToken& t : d.endpoint_tokens()) {
        const auto [it, inserted] = renumber.emplace(t.label, next);
        if (inserted) ++next;
        out << to_char(t.role) << it->second << (t.sign > 0 ? '+' : '-');
    }
    return out.str();
}

nlohmann::json report(const GaussDiagram& d) {
    nlohmann::json j;
    j["code"] = serialize(d);
    j["n"] = d.size();
    const SurfaceData s = surface_data(d);
    j["genus"] = s.genus;
    j["faces"] = s.face_count;
    j["bridges"] = bridge_count(d);
    nlohmann::json parities = nlohmann::json::object();
    for (const auto& [label, parity] : gaussian_parity(d))
        parities[std::to_string(label)] = parity;
    j["gaussian_parities"] = parities;
    j["parity_group_dim"] = parity_group(d).dim();
    j["classical_diagram"] = is_classical_diagram(d);
    j["odd_writhe"] = odd_writhe(d);
    nlohmann::json poly = nlohmann::json::object();
    const LaurentPolynomial f = f_polynomial(d);
    for (const auto& [exponent, coefficient] : f.terms())
        poly[std::to_string(exponent)] = coefficient;
    j["f_polynomial"] = poly;
    return j;
}

} // namespace gaussforge
