#pragma once

#include <stdexcept>
#include <string>

namespace trackcube {

enum class errc {
  missing_simplex,
  duplicate_simplex,
  dangling_edge,
  axiom_violation,
  non_empty_required,
  precondition_h1,
  instance_too_large,
  not_two_sided,
  degenerate_arrangement,
  not_antisymmetric,
  involution_not_reversing,
  complement_comparable,
  same_pair,
  cap_exceeded,
  no_seed,
  median_missing,
  not_in_interval,
  crossing_input,
  not_2_pattern,
  parity_violation,
  boundary_return,
  non_manifold_return,
  not_innermost,
  rejection_budget_exceeded,
  input_error,
  internal,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace trackcube
