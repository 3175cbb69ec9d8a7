#pragma once

#include <stdexcept>
#include <string>

namespace clustp {

// Every failure the library reports carries one of these codes. The CLI
// maps categories to process exit codes (see exit_category).
enum class ErrorCode {
  // instance validation
  OverlappingClusters,
  UncoveredVertex,
  EmptyCluster,
  SourceOutOfRange,
  AsymmetricMatrix,
  NegativeWeight,
  InvalidDiagonal,
  SameVertex,
  OutOfRange,
  // shortest-path trees
  RootNotMember,
  DisconnectedInducedSubgraph,
  // randomized greedy construction
  InfiniteWeight,
  EmptyCandidateSet,
  NonpositiveReward,
  DisconnectedClusters,
  InvalidParams,
  // objective / oracle
  InfeasibleTree,
  InstanceTooLarge,
  NoFeasibleTree,
  // text formats
  SyntaxError,
  MissingSection,
  // statistics
  NonpositiveReference,
  // generators
  UnableToPopulateCells,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OverlappingClusters: return "OverlappingClusters";
    case ErrorCode::UncoveredVertex: return "UncoveredVertex";
    case ErrorCode::EmptyCluster: return "EmptyCluster";
    case ErrorCode::SourceOutOfRange: return "SourceOutOfRange";
    case ErrorCode::AsymmetricMatrix: return "AsymmetricMatrix";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::InvalidDiagonal: return "InvalidDiagonal";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::RootNotMember: return "RootNotMember";
    case ErrorCode::DisconnectedInducedSubgraph: return "DisconnectedInducedSubgraph";
    case ErrorCode::InfiniteWeight: return "InfiniteWeight";
    case ErrorCode::EmptyCandidateSet: return "EmptyCandidateSet";
    case ErrorCode::NonpositiveReward: return "NonpositiveReward";
    case ErrorCode::DisconnectedClusters: return "DisconnectedClusters";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::InfeasibleTree: return "InfeasibleTree";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::NoFeasibleTree: return "NoFeasibleTree";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::MissingSection: return "MissingSection";
    case ErrorCode::NonpositiveReference: return "NonpositiveReference";
    case ErrorCode::UnableToPopulateCells: return "UnableToPopulateCells";
  }
  return "UnknownError";
}

// Exit-code category used by the command-line tool:
//   2 = malformed data (parse or validation failure)
//   3 = structurally sound input that cannot be solved or checked
inline int exit_category(ErrorCode code) {
  switch (code) {
    case ErrorCode::DisconnectedInducedSubgraph:
    case ErrorCode::DisconnectedClusters:
    case ErrorCode::InfeasibleTree:
    case ErrorCode::InstanceTooLarge:
    case ErrorCode::NoFeasibleTree:
      return 3;
    default:
      return 2;
  }
}

}  // namespace clustp
