#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aslkit {

enum class errc {
  cycle_detected,
  unknown_label,
  duplicate_label,
  empty_poset,
  not_comparable,
  size_cap_exceeded,
  not_a_lattice,
  not_distributive_type,
  ideal_not_upward_closed,
  face_not_in_complex,
  bad_arguments,
  parse_error,
  degree_bound_exceeded,
  internal_mismatch,
  consistency_failure,
};

inline std::string_view to_string(errc code) {
  switch (code) {
    case errc::cycle_detected: return "CycleDetected";
    case errc::unknown_label: return "UnknownLabel";
    case errc::duplicate_label: return "DuplicateLabel";
    case errc::empty_poset: return "EmptyPoset";
    case errc::not_comparable: return "NotComparable";
    case errc::size_cap_exceeded: return "SizeCapExceeded";
    case errc::not_a_lattice: return "NotALattice";
    case errc::not_distributive_type: return "NotDistributiveType";
    case errc::ideal_not_upward_closed: return "IdealNotUpwardClosed";
    case errc::face_not_in_complex: return "FaceNotInComplex";
    case errc::bad_arguments: return "BadArguments";
    case errc::parse_error: return "ParseError";
    case errc::degree_bound_exceeded: return "DegreeBoundExceeded";
    case errc::internal_mismatch: return "InternalMismatch";
    case errc::consistency_failure: return "ConsistencyFailure";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Result of a decision procedure that may run out of budget.  `inconclusive`
/// is never folded into `no`.
enum class verdict { no, yes, inconclusive };

inline verdict from_bool(bool b) { return b ? verdict::yes : verdict::no; }

inline std::string_view to_string(verdict v) {
  switch (v) {
    case verdict::no: return "no";
    case verdict::yes: return "yes";
    case verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

/// Conjunction with inconclusive absorbing everything except a definite no.
inline verdict operator&&(verdict a, verdict b) {
  if (a == verdict::no || b == verdict::no) return verdict::no;
  if (a == verdict::inconclusive || b == verdict::inconclusive) return verdict::inconclusive;
  return verdict::yes;
}

}  // namespace aslkit
