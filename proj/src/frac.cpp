#include "trackcube/frac.hpp"

namespace trackcube {

const char* errc_name(errc c) {
  switch (c) {
    case errc::missing_simplex: return "MissingSimplex";
    case errc::duplicate_simplex: return "DuplicateSimplex";
    case errc::dangling_edge: return "DanglingEdge";
    case errc::axiom_violation: return "AxiomViolation";
    case errc::non_empty_required: return "NonEmptyRequired";
    case errc::precondition_h1: return "PreconditionH1";
    case errc::instance_too_large: return "InstanceTooLarge";
    case errc::not_two_sided: return "NotTwoSided";
    case errc::degenerate_arrangement: return "DegenerateArrangement";
    case errc::not_antisymmetric: return "NotAntisymmetric";
    case errc::involution_not_reversing: return "InvolutionNotReversing";
    case errc::complement_comparable: return "ComplementComparable";
    case errc::same_pair: return "SamePair";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::no_seed: return "NoSeed";
    case errc::median_missing: return "MedianMissing";
    case errc::not_in_interval: return "NotInInterval";
    case errc::crossing_input: return "CrossingInput";
    case errc::not_2_pattern: return "Not2Pattern";
    case errc::parity_violation: return "ParityViolation";
    case errc::boundary_return: return "BoundaryReturn";
    case errc::non_manifold_return: return "NonManifoldReturn";
    case errc::not_innermost: return "NotInnermost";
    case errc::rejection_budget_exceeded: return "RejectionBudgetExceeded";
    case errc::input_error: return "InputError";
    case errc::internal: return "InternalError";
  }
  return "UnknownError";
}

bool segments_cross(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
  int o1 = orient(a, b, c), o2 = orient(a, b, d);
  int o3 = orient(c, d, a), o4 = orient(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

Pt line_intersection(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
  Pt r = b - a, s = d - c;
  Frac denom = cross(r, s);
  if (denom.sign() == 0) fail(errc::internal, "parallel lines in intersection");
  Frac t = cross(c - a, s) / denom;
  return {a.x + t * r.x, a.y + t * r.y};
}

} // namespace trackcube
