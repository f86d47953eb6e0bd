#pragma once

#include <string>
#include <vector>

#include "semired/lattice.hpp"

namespace semired {

struct IdempotentLift {
  RatMat value;                // exact rational iterate
  long defect_valuation = 0;   // v_p of the sup norm of value^2 - value; kValInfinity if exact
  int steps = 0;
};

enum class Verdict {
  SemisimpleByTheorem,
  IrreducibleByFullReduction,
  InconclusiveNonSemisimpleReduction,
};

std::string to_string(Verdict v);

struct DecompositionReport {
  Verdict verdict = Verdict::InconclusiveNonSemisimpleReduction;
  std::vector<int> component_dims;
  std::vector<IdempotentLift> idempotent_lifts;
  StructureReport reduced_report;
};

// Cubic Newton iteration P <- 3P^2 - 2P^3 from an approximate idempotent
// (defect valuation >= 1) until the defect valuation reaches the target;
// the defect valuation at least doubles each step, so at most
// ceil(log2 N) + 1 steps run. Iterates are exact rationals.
IdempotentLift lift_idempotent(const RatMat& start, std::uint64_t p, long precision);

// Lifts a central idempotent of the reduced algebra inside the saturation
// fixpoint: the starting lift is the integer-coefficient combination of the
// lattice basis matching e_bar in the reduced basis, every iterate is
// checked to stay in the lattice, and centrality is verified to the target
// precision against every lattice basis element.
IdempotentLift lift_central_idempotent(const FpMat& e_bar, const OperatorLattice& fixpoint,
                                       long precision);

// Component dimension of each lift by the trace-rank law: the unique
// integer in [0, n] congruent to the trace mod p^precision.
std::vector<int> split_representation(const OperatorLattice& fixpoint,
                                      const std::vector<IdempotentLift>& lifts, long precision);

// SemisimpleByTheorem when the reduction is semisimple, upgraded to
// IrreducibleByFullReduction when it is simple of dimension n^2;
// InconclusiveNonSemisimpleReduction otherwise (the converse of the
// criterion fails, so a non-semisimple reduction proves nothing).
Verdict decide_verdict(int n, const StructureReport& report);

}  // namespace semired
