#ifndef KOSZUL_PARSER_HPP
#define KOSZUL_PARSER_HPP

#include <string>

#include "koszul/presentation.hpp"

namespace koszul {

// Parse the key-value presentation format:
//
//   # comment
//   field QQ            (or: field GF 32003)
//   generators x y z
//   commutative true
//   relation x*x
//   relation 2*x*y - y*x
//
// Relations are integer-coefficient polynomials, products written with `*`,
// every term of total degree exactly 2. The commutative flag is sugar: the
// commutators x_j*x_i - x_i*x_j are appended when the algebra is built.
QuadraticPresentation parse_presentation(const std::string& text);

QuadraticPresentation parse_presentation_file(const std::string& path);

// Canonical rendering; parse(render(p)) == p.
std::string render_presentation(const QuadraticPresentation& p);

}  // namespace koszul

#endif  // KOSZUL_PARSER_HPP
