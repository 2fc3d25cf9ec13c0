#ifndef KOSZUL_TEST_UTIL_HPP
#define KOSZUL_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "koszul/matrix.hpp"
#include "koszul/parser.hpp"
#include "koszul/presentation.hpp"

namespace koszul::testutil {

template <class F>
SparseMat<F> from_rows(const std::vector<std::vector<long>>& rows, F field = F()) {
  std::uint32_t nr = static_cast<std::uint32_t>(rows.size());
  std::uint32_t nc = nr ? static_cast<std::uint32_t>(rows[0].size()) : 0;
  SparseMat<F> m(nr, nc, field);
  for (std::uint32_t i = 0; i < nr; ++i)
    for (std::uint32_t j = 0; j < nc; ++j)
      if (rows[i][j] != 0) m.set(i, j, field.from_int(rows[i][j]));
  return m;
}

template <class F>
SparseMat<F> random_matrix(std::mt19937& rng, std::uint32_t rows, std::uint32_t cols,
                           double density, F field = F()) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<long> val(-5, 5);
  SparseMat<F> m(rows, cols, field);
  for (std::uint32_t i = 0; i < rows; ++i)
    for (std::uint32_t j = 0; j < cols; ++j)
      if (coin(rng) < density) m.set(i, j, field.from_int(val(rng)));
  return m;
}

// Named corpus presentations, matching the files shipped under presentations/.
inline QuadraticPresentation ex0() {
  return parse_presentation(
      "field QQ\n"
      "generators x y z\n"
      "commutative true\n"
      "relation x*x\nrelation x*y\nrelation y*y\n");
}

inline QuadraticPresentation fibonacci() {
  return parse_presentation(
      "field QQ\n"
      "generators x y z\n"
      "commutative true\n"
      "relation x*y\nrelation x*z\n");
}

inline QuadraticPresentation squarefree(std::uint32_t d) {
  std::string s = "field QQ\ngenerators";
  for (std::uint32_t i = 1; i <= d; ++i) s += " x" + std::to_string(i);
  s += "\ncommutative true\n";
  for (std::uint32_t i = 1; i <= d; ++i)
    s += "relation x" + std::to_string(i) + "*x" + std::to_string(i) + "\n";
  return parse_presentation(s);
}

inline QuadraticPresentation polynomial_ring(std::uint32_t d) {
  std::string s = "field QQ\ngenerators";
  for (std::uint32_t i = 1; i <= d; ++i) s += " x" + std::to_string(i);
  s += "\ncommutative true\n";
  return parse_presentation(s);
}

inline QuadraticPresentation free_algebra(std::uint32_t d) {
  std::string s = "field QQ\ngenerators";
  for (std::uint32_t i = 1; i <= d; ++i) s += " x" + std::to_string(i);
  s += "\n";
  return parse_presentation(s);
}

}  // namespace koszul::testutil

#endif
