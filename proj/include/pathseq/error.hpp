#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pathseq {

enum class ErrorKind {
  SelfLoop,
  DuplicateEdge,
  Disconnected,
  VertexOutOfRange,
  InvalidGraph,
  BudgetExceeded,
  UnknownIndex,
  MissingParameter,
  AsymmetricFunction,
  InvalidSpec,
  InvalidArgument,
  NoCandidateRoot,
  AmbiguousRoot,
  NonIntegerBranchCount,
  BudgetMismatch,
  ProfileMismatch,
  FamilyMismatch,
  SizeMismatch,
  ParseError,
  IoError,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::UnknownIndex: return "UnknownIndex";
    case ErrorKind::MissingParameter: return "MissingParameter";
    case ErrorKind::AsymmetricFunction: return "AsymmetricFunction";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NoCandidateRoot: return "NoCandidateRoot";
    case ErrorKind::AmbiguousRoot: return "AmbiguousRoot";
    case ErrorKind::NonIntegerBranchCount: return "NonIntegerBranchCount";
    case ErrorKind::BudgetMismatch: return "BudgetMismatch";
    case ErrorKind::ProfileMismatch: return "ProfileMismatch";
    case ErrorKind::FamilyMismatch: return "FamilyMismatch";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

/// Domain error raised by every library operation. The kind is stable and
/// machine-readable; the message names the offending input.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pathseq
