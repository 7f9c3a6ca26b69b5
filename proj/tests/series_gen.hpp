#pragma once

// Random polynomial generators for fractional-ideal tests.

#include "cmtype/fractional.hpp"

#include "oracles.hpp"

namespace testgen {

template <cmtype::CoefficientField Field>
cmtype::TruncatedSeries<Field> random_poly(const Field& f, int min_order, int max_order, int spread,
                                           int max_terms, int coeff_hi) {
  cmtype::TruncatedSeries<Field> s(f);
  const int ord = oracle::uniform(min_order, max_order);
  s.add_term(ord, f.from_integer(oracle::uniform(1, coeff_hi)));
  const int extra = oracle::uniform(0, max_terms - 1);
  for (int i = 0; i < extra; ++i) {
    s.add_term(ord + oracle::uniform(1, spread), f.from_integer(oracle::uniform(-coeff_hi, coeff_hi)));
  }
  return s;
}

template <cmtype::CoefficientField Field>
std::vector<cmtype::TruncatedSeries<Field>> random_gens(const Field& f, int count_hi, int min_order,
                                                        int max_order, int spread = 6,
                                                        int max_terms = 3, int coeff_hi = 4) {
  std::vector<cmtype::TruncatedSeries<Field>> gens;
  const int n = oracle::uniform(1, count_hi);
  for (int i = 0; i < n; ++i) {
    auto g = random_poly(f, min_order, max_order, spread, max_terms, coeff_hi);
    if (!g.is_zero()) gens.push_back(std::move(g));
  }
  if (gens.empty()) gens.push_back(cmtype::TruncatedSeries<Field>::monomial(f, min_order));
  return gens;
}

}  // namespace testgen
