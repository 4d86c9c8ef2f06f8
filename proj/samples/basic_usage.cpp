#include <iostream>

#include "parabi/parabi.hpp"

int main() {
  using namespace parabi;
  const ParamSet p(FamilyCase::P0, -4, 0, Rational(1, 2), 2);

  const auto polys = generate_polys(p);
  for (std::size_t n = 0; n < polys.size(); ++n) std::cout << "P_" << n << " = " << polys[n].str("x") << "\n";

  const auto d = spectral_data(p);
  for (std::size_t s = 0; s < d.grid.size(); ++s)
    std::cout << "x_" << s << " = " << to_string(d.grid[s]) << ", w_" << s << " = " << to_string(d.weights[s]) << "\n";

  std::cout << "orthogonal: " << std::boolalpha << verify_orthogonality(p).holds() << "\n";
  std::cout << "Dunkl eigenvalues verified: " << verify_bispectrality(p, 1).all_hold() << "\n";
  std::cout << "explicit P_3(1/3) = " << to_string(explicit_eval(p, 3, Rational(1, 3))) << "\n";
}
