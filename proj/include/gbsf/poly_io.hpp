#pragma once

#include <string>

#include "gbsf/groebner.hpp"
#include "gbsf/polynomial.hpp"

namespace gbsf {

// Text format: sum of c*x1^e1*...*xn^en with ^1 and *1 elided, e.g.
// "x1*x2 + 2*x3^2". Printer and parser round-trip exactly.
std::string to_text(const Polynomial& p);
Polynomial parse_polynomial(const std::string& text, const TermOrder& order);

// JSON form: {"terms":[{"c":"num/den","e":[e1,...,en]}]}.
std::string to_json(const Polynomial& p);
Polynomial polynomial_from_json(const std::string& json_text, const TermOrder& order);

// Basis serialization: the poly-core schema plus {n, k, order, sigma} metadata.
std::string basis_to_json(const GroebnerBasis& basis, int n, int k);
// One generator per line, plain text syntax for third-party systems.
std::string basis_to_cas(const GroebnerBasis& basis);

std::string order_to_string(const TermOrder& order);

}  // namespace gbsf
