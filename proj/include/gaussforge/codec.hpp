#pragma once

#include <string>

#include <json.hpp>

#include "gaussforge/diagram.hpp"

namespace gaussforge {

// Token grammar: [OU]<label>[+-], separated by optional whitespace or commas.
// Signs on the two tokens of one label must agree.
GaussDiagram parse(const std::string& code);

// Labels renumbered by first occurrence; no separators.
std::string serialize(const GaussDiagram& d);

// Full JSON report: code, n, genus, faces, bridges, gaussian_parities,
// parity_group_dim, classical_diagram, odd_writhe, f_polynomial.
nlohmann::json report(const GaussDiagram& d);

} // namespace gaussforge
