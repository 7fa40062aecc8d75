#pragma once

#include <string>

#include "ffr/polynomial.hpp"

namespace ffr {

// Polynomial JSON: {"coeffs": ["num/den", ...]} with coefficients ascending.
// Parse failures throw std::runtime_error naming the offending field.
ExactPolynomial parse_polynomial_json(const std::string& text, const std::string& origin);
ExactPolynomial read_polynomial_json(const std::string& path);

std::string polynomial_to_json(const ExactPolynomial& p);
// Float coefficients are exported as JSON numbers instead of strings.
std::string polynomial_to_json(const FloatPolynomial& p);

// Inline root list "1,2,5/2" -> monic polynomial with exactly those roots.
ExactPolynomial parse_root_list(const std::string& text);

}  // namespace ffr
