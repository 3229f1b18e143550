// Slow acceptance path: the sp4 realization of the continuous-family module,
// S^1 + S^3 + S^5 + S^7 of the standard 4-dimensional module (total dim 200).
// Each summand must pass the representation check and carry an invariant
// nondegenerate alternating form, confirmed one-dimensional by the solver.
#include <chrono>
#include <iomanip>
#include <iostream>

#include "liesalg/constructions.hpp"

using namespace liesalg;

namespace {

bool check(const std::string& name, bool ok, int& failures) {
  std::cout << "  " << std::left << std::setw(56) << name << (ok ? "ok" : "FAIL") << "\n";
  if (!ok) ++failures;
  return ok;
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  int failures = 0;
  Representation std4 = sp4_standard_rep();
  // the invariant symplectic form on the standard module
  FormSpace omega_space = invariant_forms(std4, FormClass::Alternating);
  check("standard module: dim Alt = 1", omega_space.basis.size() == 1, failures);
  Matrix omega = omega_space.basis.at(0);

  int total_dim = 0;
  for (int k : {1, 3, 5, 7}) {
    auto tk = std::chrono::steady_clock::now();
    Representation sym = build_symmetric_power(std4, k);
    total_dim += sym.dim;
    std::string tag = "S^" + std::to_string(k) + " (dim " + std::to_string(sym.dim) + ")";
    check(tag + ": commutator identity", check_representation(sym).ok, failures);
    check(tag + ": no fixed vectors", fixed_vectors(sym).dim() == 0, failures);
    Matrix form = induced_symmetric_power_form(omega, 4, k);
    check(tag + ": induced form alternating", (form.transpose() + form).is_zero(), failures);
    check(tag + ": induced form invariant", form_is_invariant(sym, form), failures);
    check(tag + ": induced form nondegenerate (symplectic)", rank_of(form) == sym.dim, failures);
    check(tag + ": solver confirms dim Alt = 1",
          invariant_forms(sym, FormClass::Alternating).basis.size() == 1, failures);
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - tk).count();
    std::cout << "  " << tag << " took " << std::fixed << std::setprecision(1) << secs << "s\n";
  }
  check("total module dimension is 200", total_dim == 200, failures);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (failures == 0 ? "slow acceptance: sp4 path passed"
                              : "slow acceptance: " + std::to_string(failures) + " check(s) failed")
            << " (" << std::fixed << std::setprecision(1) << secs << "s, budget 1800s)\n";
  return failures == 0 ? 0 : 1;
}
