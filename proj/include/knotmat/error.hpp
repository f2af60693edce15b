#pragma once

#include <stdexcept>
#include <string>

namespace knotmat {

enum class Errc {
  malformed_record,       // bad arity / non-integer label in a PD record
  bad_incidence,          // an edge label not appearing exactly twice
  not_planar_knot,        // face count != c+2, or not a single closed strand
  no_proper_coloring,     // region 2-coloring failed (internal inconsistency)
  not_square,
  not_prime_modulus,
  column_out_of_range,
  index_out_of_range,
  inconsistent_inputs,
  not_prime_diagram,
  not_two_incident,       // unshaded column hit by != 2 selected rows
  disconnected,           // sign-propagation graph has > 1 component
  inconsistent,           // parity conflict on a propagation cycle
  symmetrize_failed,
  asymmetric_magnitudes,
};

inline const char* to_string(Errc c) {
  switch (c) {
    case Errc::malformed_record: return "MalformedRecord";
    case Errc::bad_incidence: return "BadIncidence";
    case Errc::not_planar_knot: return "NotPlanarKnot";
    case Errc::no_proper_coloring: return "NoProperColoring";
    case Errc::not_square: return "NotSquare";
    case Errc::not_prime_modulus: return "NotPrimeModulus";
    case Errc::column_out_of_range: return "ColumnOutOfRange";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::inconsistent_inputs: return "InconsistentInputs";
    case Errc::not_prime_diagram: return "NotPrimeDiagram";
    case Errc::not_two_incident: return "NotTwoIncident";
    case Errc::disconnected: return "Disconnected";
    case Errc::inconsistent: return "Inconsistent";
    case Errc::symmetrize_failed: return "SymmetrizeFailed";
    case Errc::asymmetric_magnitudes: return "AsymmetricMagnitudes";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace knotmat
