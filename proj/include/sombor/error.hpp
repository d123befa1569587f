#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sombor {

enum class Errc {
  MalformedInput,
  DuplicateEdge,
  SelfLoop,
  VertexOutOfRange,
  MaxDegreeExceeded,
  Disconnected,
  SizeLimitExceeded,
  InfeasibleClass,
  InfeasibleN,
  PreconditionViolated,
  MalformedCSV,
  MissingFixture,
  WrongIsomerCount,
  NonChemicalFixture,
  DegenerateInput,
  UnknownName,
};

inline std::string_view errc_name(Errc e) {
  switch (e) {
    case Errc::MalformedInput: return "MalformedInput";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::MaxDegreeExceeded: return "MaxDegreeExceeded";
    case Errc::Disconnected: return "Disconnected";
    case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
    case Errc::InfeasibleClass: return "InfeasibleClass";
    case Errc::InfeasibleN: return "InfeasibleN";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::MalformedCSV: return "MalformedCSV";
    case Errc::MissingFixture: return "MissingFixture";
    case Errc::WrongIsomerCount: return "WrongIsomerCount";
    case Errc::NonChemicalFixture: return "NonChemicalFixture";
    case Errc::DegenerateInput: return "DegenerateInput";
    case Errc::UnknownName: return "UnknownName";
  }
  return "Unknown";
}

/// All library failures are reported through this type; code() tells callers which contract broke.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sombor
