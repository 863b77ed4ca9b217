#pragma once

#include <initializer_list>

#include <Eigen/Core>

#include "transversal/examples.hpp"

namespace testing_support {

inline Eigen::VectorXd vec(std::initializer_list<double> values) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v[i++] = x;
  return v;
}

inline transversal::Parametrization quarter_circle() {
  return transversal::Parametrization::from_text(1, {"cos(x1)/4", "sin(x1)/4", "0"},
                                                 transversal::Box(vec({0.0}), vec({6.283185307179586})));
}

// Every shipped example at its default settings.
inline std::vector<transversal::ExampleSpec> shipped_examples() {
  using transversal::ExampleSpec;
  return {ExampleSpec::single_circle(), ExampleSpec::single_sphere(2, 4), ExampleSpec::sigma0(2),
          ExampleSpec::sigma2(2), ExampleSpec::sphere_chain(2, 4, 2)};
}

}  // namespace testing_support
