#pragma once

#include <stdexcept>
#include <string>

namespace wv {

// Base class for all engine errors. `code()` groups errors into the
// classes used for process exit codes by the command line tool.
class Error : public std::runtime_error {
public:
  Error(std::string name, int code, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)), code_(code) {}

  const std::string& name() const { return name_; }
  int code() const { return code_; }

private:
  std::string name_;
  int code_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error("ParseError", 2, m) {}
};

struct InvalidRootId : Error {
  explicit InvalidRootId(const std::string& m) : Error("InvalidRootId", 3, m) {}
};

struct InvalidWeight : Error {
  explicit InvalidWeight(const std::string& m) : Error("InvalidWeight", 3, m) {}
};

struct InvalidSystem : Error {
  explicit InvalidSystem(const std::string& m) : Error("InvalidSystem", 3, m) {}
};

struct InvalidIndex : Error {
  explicit InvalidIndex(const std::string& m) : Error("InvalidIndex", 4, m) {}
};

struct InvalidEmbedding : Error {
  explicit InvalidEmbedding(const std::string& m) : Error("InvalidEmbedding", 4, m) {}
};

struct NotPositive : Error {
  explicit NotPositive(const std::string& m) : Error("NotPositive", 4, m) {}
};

struct NotAdjoint : Error {
  explicit NotAdjoint(const std::string& m) : Error("NotAdjoint", 4, m) {}
};

struct NotIndecomposable : Error {
  explicit NotIndecomposable(const std::string& m) : Error("NotIndecomposable", 4, m) {}
};

struct RankTooSmall : Error {
  explicit RankTooSmall(const std::string& m) : Error("RankTooSmall", 4, m) {}
};

struct NotClassified : Error {
  explicit NotClassified(const std::string& m) : Error("NotClassified", 5, m) {}
};

struct UnsupportedSubdiagram : Error {
  explicit UnsupportedSubdiagram(const std::string& m)
      : Error("UnsupportedSubdiagram", 5, m) {}
};

struct InconsistentQuotient : Error {
  explicit InconsistentQuotient(const std::string& m)
      : Error("InconsistentQuotient", 5, m) {}
};

}  // namespace wv
