#pragma once

#include <string>
#include <variant>
#include <vector>

#include "glb/bialgebra.hpp"
#include "glb/jacobi.hpp"
#include "glb/lie_algebra.hpp"

namespace glb {

LieAlgebra heisenberg(std::size_t n);  // h(1,n): [e_i, e_{n+i}] = e_{2n+1}
LieAlgebra solvable2();                // [e1,e2] = e1
LieAlgebra solvable3();                // [e1,e3] = e1, [e2,e3] = -e2
LieAlgebra sl2r();                     // [e1,e2] = 2e2, [e1,e3] = -2e3, [e2,e3] = e1
LieAlgebra su2();                      // [e1,e2] = e3, [e1,e3] = -e2, [e2,e3] = e1
LieAlgebra u2();                       // su2 + R e4
LieAlgebra gl2r();                     // sl2r + R e4
/// g ⊕ ℝ^k with the new vectors appended and labeled after g's labels.
LieAlgebra with_center(const LieAlgebra& g, std::size_t k);

/// Pair of the su(2) contact family: r = l1 e2∧e3 − l2 e1∧e3 + l3 e1∧e2, X₀ = −(l1e1 + l2e2 + l3e3).
JacobiPair su2_contact_pair(const Rational& l1, const Rational& l2, const Rational& l3);
/// sl(2,ℝ) contact family: r = l1 e2∧e3 + l2 e1∧e2 − l3 e1∧e3, X₀ = −(l1e1 + 2l2e2 + 2l3e3).
JacobiPair sl2r_contact_pair(const Rational& l1, const Rational& l2, const Rational& l3);

YbData solvable3_yb();
YbData h11_yb(const Rational& l12, const Rational& l13 = Rational(0), const Rational& l23 = Rational(0));
YbData semidirect4_yb();

GeneralizedBialgebra noncob4();
GeneralizedBialgebra firstkind4();
GeneralizedBialgebra secondkind4();
GeneralizedBialgebra thirdkind_u2();

using CatalogValue = std::variant<LieAlgebra, JacobiPair, YbData, GeneralizedBialgebra>;

struct CatalogEntry {
  std::string name;
  CatalogValue value;
};

/// Fixed names plus the patterns abelian(n) and heisenberg(1,n).
std::vector<std::string> catalog_names();
/// Throws std::invalid_argument listing the available names.
CatalogEntry catalog(const std::string& name);

}  // namespace glb
