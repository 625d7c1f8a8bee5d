// Builds the Hermite family for Z2^2 with kappa = (1/2, 1/3) from a degree-one
// monogenic generator and prints the first few polynomials and their norms.

#include <cstdio>

#include "dch/hermite.hpp"
#include "dch/io.hpp"
#include "dch/monogenic.hpp"
#include "dch/norms.hpp"
#include "dch/numeric.hpp"

using namespace dch;

int main() {
  const ReflectionData rd = build_group(Family::Z2, 2, {frac(1, 2), frac(1, 3)});
  std::printf("%s\n", rd.describe().c_str());

  const MonogenicBasis basis = orthonormalize_z2(module_basis(rd, 1));
  std::printf("degree-1 monogenic generators: %zu (kernel dimension %zu)\n", basis.elements.size(), basis.kernel_dimension);
  const CPoly& p = basis.elements.front();
  std::printf("P = %s\n", to_text(p).c_str());
  std::printf("spherical norm of P = %s\n\n", basis.norm(0).to_string().c_str());

  const HermiteFamily fam = hermite_generate(rd, p, 5);
  for (int s = 0; s <= fam.max_s; ++s) {
    const HermiteNorm g = gamma_norm(fam, basis, s, 0);
    std::string radial;
    for (const auto& c : fam.radial[s]) radial += (radial.empty() ? "" : " ") + to_string(c);
    const NumericValue q = numeric_inner_product(rd, fam.polys[s], fam.polys[s], 16);
    std::printf("s=%d  radial=[%s]\n     gamma=%s  (%.12g, quadrature %.12g)\n", s, radial.c_str(),
                g.sphere_averaged.to_string().c_str(), g.sphere_averaged.to_double(),
                q.value * sphere_area(2).to_double() / basis.norm(0).to_double());
  }
  return 0;
}
