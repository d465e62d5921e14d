#pragma once

#include <stdexcept>
#include <string>

namespace gsnet {

// Base error carrying a stable machine-readable code alongside the message.
// The CLI maps these to error JSON; tests match on the concrete type.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

struct VertexNotFound : Error {
  explicit VertexNotFound(const std::string& msg) : Error("VertexNotFound", msg) {}
};

struct InvalidSpecialNeighbor : Error {
  explicit InvalidSpecialNeighbor(const std::string& msg)
      : Error("InvalidSpecialNeighbor", msg) {}
};

struct SizeMismatch : Error {
  explicit SizeMismatch(const std::string& msg) : Error("SizeMismatch", msg) {}
};

struct OrbitBoundExceeded : Error {
  explicit OrbitBoundExceeded(const std::string& msg)
      : Error("OrbitBoundExceeded", msg) {}
};

struct EvenSwitchCount : Error {
  explicit EvenSwitchCount(const std::string& msg) : Error("EvenSwitchCount", msg) {}
};

struct OddSwitchCount : Error {
  explicit OddSwitchCount(const std::string& msg) : Error("OddSwitchCount", msg) {}
};

struct TopologyMismatch : Error {
  explicit TopologyMismatch(const std::string& msg) : Error("TopologyMismatch", msg) {}
};

struct InvalidRemovalSet : Error {
  explicit InvalidRemovalSet(const std::string& msg) : Error("InvalidRemovalSet", msg) {}
};

struct SearchBoundExceeded : Error {
  explicit SearchBoundExceeded(const std::string& msg)
      : Error("SearchBoundExceeded", msg) {}
};

struct InvalidTableau : Error {
  explicit InvalidTableau(const std::string& msg) : Error("InvalidTableau", msg) {}
};

struct ProtocolInvariantViolation : Error {
  explicit ProtocolInvariantViolation(const std::string& msg)
      : Error("ProtocolInvariantViolation", msg) {}
};

struct InvalidInput : Error {
  explicit InvalidInput(const std::string& msg) : Error("InvalidInput", msg) {}
};

}  // namespace gsnet
