#pragma once

#include "liesalg/constructions.hpp"

namespace liesalg {

// Subalgebra of n generated by the action images [s, n]; an ideal of n
// satisfying [s,[s,n]] = [s,n] (both checked).
Subspace s_bracket_ideal(const SAlgebra& a);

enum class Cond4 { True, False, Undecidable };
enum class MinimalityVerdict { Minimal, AlmostMinimal, Neither };

struct MinimalityReport {
  bool c1 = false;  // n is 2-nilpotent
  bool c2 = false;  // [s,n] = n
  bool c3 = false;  // [s, Dn] = 0
  Cond4 c4 = Cond4::Undecidable;
  bool c4_full = false;  // condition 4': n/Dn is a full module
  MinimalityVerdict verdict = MinimalityVerdict::Neither;
  std::string note;  // witness / obstruction descriptions
  std::vector<std::pair<int, int>> summand_profile;  // (n, mult) of n/Dn when analyzable
};

MinimalityReport check_conditions(const SAlgebra& a);

// Recover (v, Z) with n isomorphic to h(v)/Z, for almost minimal n. The
// returned explicit morphism h(v)/Z -> n is verified to be an equivariant
// Lie isomorphism.
struct CanonicalPresentation {
  HModulePresentation presentation;
  Matrix module_embedding;  // v basis rows inside n
  Matrix iso;               // n.dim x presented_dim, the verified isomorphism
};
CanonicalPresentation canonical_presentation(const SAlgebra& a);

enum class OrbitAnswer { Isomorphic, NotIsomorphic, Undecided };

struct OrbitResult {
  OrbitAnswer answer = OrbitAnswer::Undecided;
  // For Isomorphic: the diagonal scaling on the Alt* coordinates that maps
  // Z onto Z' (entries are positive rationals).
  std::optional<Vec> scaling;
  std::string note;
};

// Orbit test for h(v)/Z vs h(v)/Z' under Aut_s(v), decided when Aut acts by
// independent positive scalars on the Alt* coordinates (multiplicity-free
// sl2 modules); explicitly undecided for the quaternionic so3 case.
OrbitResult quotient_iso_test(const HModulePresentation& p, const HModulePresentation& q);

bool orbit_certificate_valid(const HModulePresentation& p, const HModulePresentation& q,
                             const Vec& scaling);

// Minimal s-subalgebra extraction (s = sl2 standard, or so3 via base
// change). The minimal algebra comes back in an adapted basis: for sl2 the
// module part is the canonical (e_0..e_{k-1}) basis of v_k, so its bracket
// table coincides with v_k or h_{k+1} exactly.
struct MinimalExtraction {
  SAlgebra minimal;
  Matrix embedding;  // minimal.n.dim x parent n dim, rows = adapted basis
};
MinimalExtraction extract_minimal_subalgebra(const SAlgebra& a);

}  // namespace liesalg
