#include "semired/lifting.hpp"

#include <numeric>

#include "semired/errors.hpp"

namespace semired {

namespace {

long defect_val(const RatMat& m, std::uint64_t p) { return min_valuation(m * m - m, p); }

IdempotentLift lift_loop(const RatMat& start, std::uint64_t p, long precision,
                         const OperatorLattice* guard) {
  if (!is_p_integral(start, p)) {
    throw NotIntegralError("approximate idempotent is not p-integral");
  }
  if (guard && !guard->member(start)) {
    throw InternalError("starting lift is not a member of the fixpoint lattice");
  }
  long v = defect_val(start, p);
  if (v < 1) {
    throw NotApproxIdempotentError("matrix is not an approximate idempotent: its defect is a "
                                   "p-adic unit");
  }
  IdempotentLift lift{start, v, 0};
  // v at least doubles per step, so ceil(log2 N) + 1 steps always suffice.
  long budget = 1;
  for (long t = 1; t < precision; t *= 2) ++budget;
  while (lift.defect_valuation < precision) {
    const RatMat& q = lift.value;
    RatMat q2 = q * q;
    RatMat next = scale(Rat(3), q2) - scale(Rat(2), q2 * q);
    long nv = defect_val(next, p);
    long doubled = (lift.defect_valuation >= kValInfinity / 2) ? kValInfinity
                                                               : 2 * lift.defect_valuation;
    if (nv < doubled) {
      throw InternalError("idempotent iteration defect did not contract quadratically");
    }
    if (guard && !guard->member(next)) {
      throw InternalError("idempotent iterate left the fixpoint lattice");
    }
    lift.value = std::move(next);
    lift.defect_valuation = nv;
    ++lift.steps;
    if (lift.steps > budget) {
      throw InternalError("idempotent iteration exceeded its step budget");
    }
  }
  return lift;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::SemisimpleByTheorem:
      return "SemisimpleByTheorem";
    case Verdict::IrreducibleByFullReduction:
      return "IrreducibleByFullReduction";
    case Verdict::InconclusiveNonSemisimpleReduction:
      return "InconclusiveNonSemisimpleReduction";
  }
  return "unknown";
}

IdempotentLift lift_idempotent(const RatMat& start, std::uint64_t p, long precision) {
  return lift_loop(start, p, precision, nullptr);
}

IdempotentLift lift_central_idempotent(const FpMat& e_bar, const OperatorLattice& fixpoint,
                                       long precision) {
  const std::uint64_t p = fixpoint.p();
  if (e_bar.n != fixpoint.n() || e_bar.p != p) {
    throw InternalError("idempotent and lattice shapes disagree");
  }
  // The fixpoint lattice reduces injectively mod p, so e_bar has unique
  // coordinates in the reduced basis; reuse them with integer lifts.
  FpCoordSpan span(p, fixpoint.n() * fixpoint.n());
  for (const auto& b : fixpoint.basis()) {
    if (!span.add(fp_vectorize(reduce_matrix(b, p)))) {
      throw InternalError("fixpoint lattice basis does not reduce injectively");
    }
  }
  auto coords = span.coordinates(fp_vectorize(e_bar));
  if (!coords) throw InternalError("idempotent does not lie in the reduced image");
  RatMat start(fixpoint.n());
  for (std::size_t k = 0; k < coords->size(); ++k) {
    if ((*coords)[k] == 0) continue;
    start = start + scale(Rat(Int((*coords)[k])), fixpoint.basis()[k]);
  }
  IdempotentLift lift = lift_loop(start, p, precision, &fixpoint);
  for (const auto& b : fixpoint.basis()) {
    if (min_valuation(lift.value * b - b * lift.value, p) < precision) {
      throw CentralityViolationError("lifted idempotent fails centrality at the requested "
                                     "precision");
    }
  }
  return lift;
}

std::vector<int> split_representation(const OperatorLattice& fixpoint,
                                      const std::vector<IdempotentLift>& lifts, long precision) {
  const std::uint64_t p = fixpoint.p();
  const int n = fixpoint.n();
  std::vector<int> dims;
  dims.reserve(lifts.size());
  for (const auto& lift : lifts) {
    const Rat t = lift.value.trace();
    int found = -1;
    int matches = 0;
    for (int r = 0; r <= n; ++r) {
      if (val_p(t - r, p) >= precision) {
        found = r;
        ++matches;
      }
    }
    if (matches != 1) {
      throw AmbiguousTraceError("no unique trace representative in [0, n]; precision too low");
    }
    dims.push_back(found);
  }
  if (std::accumulate(dims.begin(), dims.end(), 0) != n) {
    throw DimMismatchError("component dimensions do not sum to n");
  }
  return dims;
}

Verdict decide_verdict(int n, const StructureReport& report) {
  if (!report.semisimple) return Verdict::InconclusiveNonSemisimpleReduction;
  int total = 0;
  for (const auto& c : report.components) total += c.dim;
  if (report.simple && total == n * n) return Verdict::IrreducibleByFullReduction;
  return Verdict::SemisimpleByTheorem;
}

}  // namespace semired
