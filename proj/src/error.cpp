#include "metacyc/error.hpp"

namespace metacyc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::NotAUnit: return "not a unit";
    case ErrorKind::Overflow: return "exact-integer overflow";
    case ErrorKind::CapExceeded: return "enumeration cap exceeded";
    case ErrorKind::TwistOrderMismatch: return "r^M != 1 (mod n)";
    case ErrorKind::FoldNotCentral: return "E(r-1) != 0 (mod n)";
    case ErrorKind::NotSplit: return "presentation is not split";
    case ErrorKind::AbelianUnsupported: return "operation requires r != 1";
    case ErrorKind::ForeignElement: return "element not canonical in this group";
    case ErrorKind::NotAdmissible: return "pair is not admissible";
    case ErrorKind::NotPrimePower: return "group order is not a prime power";
    case ErrorKind::NotSubgroup: return "not a subgroup";
    case ErrorKind::NotClosed: return "connection set not closed";
    case ErrorKind::ConstraintViolation: return "parameter constraint violated";
    case ErrorKind::CyclicMaximalSubgroup: return "group has a cyclic maximal subgroup";
    case ErrorKind::CenterNotCyclic: return "center is not cyclic";
    case ErrorKind::CenterCyclic: return "center is cyclic";
    case ErrorKind::OutsideFormulaDomain: return "outside the formula's domain";
    case ErrorKind::NotTwoPower: return "not a power of two";
    case ErrorKind::NotFaithful: return "action is not faithful";
    case ErrorKind::PreconditionFailed: return "precondition failed";
    case ErrorKind::TheoremViolation: return "theorem violation";
    case ErrorKind::UnknownSuite: return "unknown suite";
    case ErrorKind::Io: return "i/o error";
  }
  return "unknown error";
}

}  // namespace metacyc
