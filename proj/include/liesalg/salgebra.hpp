#pragma once

#include "liesalg/representation.hpp"

namespace liesalg {

// A Lie s-algebra: a solvable algebra n carrying an action of s by
// derivations, one matrix per s basis element.
struct SAlgebra {
  LieAlgebra s;
  LieAlgebra n;
  std::vector<Matrix> action;

  Representation action_rep() const {
    Representation r;
    r.algebra = s;
    r.dim = n.dim;
    r.module_field = n.field;
    r.actions = action;
    return r;
  }
};

struct SAlgebraCheck {
  bool ok = true;
  std::string what;
  int i = -1, j = -1;  // witness pair where applicable
};

// Validates: the action matrices are derivations of n (Leibniz identity),
// they satisfy the commutator identity of s, n is solvable, s is semisimple.
SAlgebraCheck check_salgebra(const SAlgebra& a);

}  // namespace liesalg
