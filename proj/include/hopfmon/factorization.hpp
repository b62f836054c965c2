#pragma once

#include "hopfmon/crossed.hpp"

namespace hopfmon {

// mon_R(phi) = (phi (x) id)(R_op R) on the monodromy algebra.
struct MonodromyMap {
  LinearMap map;
  std::size_t rank = 0;
  bool bijective = false;
  Report report;  // tensor form of multiplicativity, multiplicativity, equivariance
};

MonodromyMap mon_R(const QtPtr& qt, const MonodromyAlgebra& mon);

// <phi | mon_{R_op} psi> = <mon_R phi | psi> on all basis pairs, and equal ranks.
Report mon_R_op_dual_check(const Quasitriangular& qt);

// U(a # b) = a iota(b1) (x) b2 from A # H (inner action through iota) onto
// A (x)_alg H, with U^-1(a (x) b) = a iota(S b1) # b2.
struct Bosonization {
  LinearMap U;
  LinearMap U_inv;
  Report report;
};

Bosonization bosonize_U(const CrossedProduct& cp, const LinearMap& iota);

// Mon_R(phi # a) = mon_R(phi) # a into H #_Ad H.
struct ExtendedMonodromy {
  CrossedProduct target;
  LinearMap map;
  Report report;
};

ExtendedMonodromy Mon_R(const GaugedMonodromy& g, const MonodromyMap& mon);

// pi_R = U o Mon_R : M_R(H) -> H (x)_alg H with the factorization report.
struct PiR {
  LinearMap map;
  std::size_t rank = 0;
  bool bijective = false;
  Report report;
};

PiR pi_R(const GaugedMonodromy& g, const MonodromyMap& mon, const ExtendedMonodromy& ext, const Bosonization& U);

// Everything above in one call; the report carries the factorization verdict.
struct Factorization {
  GaugedMonodromy g;
  MonodromyMap mon;
  ExtendedMonodromy ext;
  Bosonization U;
  PiR pi;
  Report report;
};

Factorization factorize(const QtPtr& qt);

}  // namespace hopfmon
