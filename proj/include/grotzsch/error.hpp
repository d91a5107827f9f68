#pragma once

#include <stdexcept>
#include <string>

namespace grotzsch {

enum class Err {
  Loop,
  MultiEdge,
  Asymmetric,
  NotSphere,
  BadOuterDart,
  NotOnFace,
  AlreadyAdjacent,
  WouldCreateMultiEdge,
  FacialCycle,
  NotProper,
  NotInduced,
  TriangleFound,
  BoundaryNotOuterCycle,
  Syntax,
  SpecOutOfRange,
  NoEligibleVertexPair,
  ProofOrderViolation,
  NoReductionFound,
  Internal,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& message)
      : std::runtime_error(std::string(err_name(code)) + ": " + message), code_(code) {}

  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace grotzsch
