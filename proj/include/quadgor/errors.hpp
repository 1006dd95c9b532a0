#pragma once

#include <stdexcept>
#include <string>

namespace qg {

enum class Errc {
  NonPure,
  DuplicateFacet,
  UnusedVertex,
  DimensionTooSmall,
  OrderTooSmall,
  Infeasible,
  DimensionMismatch,
  BidegreeOutOfRange,
  BadDegree,
  InstanceTooLarge,
  NotFoundWithinBound,
  ParseError,
  BadArgument,
};

const char* errc_name(Errc c);

// Single exception type; code() drives CLI exit status mapping.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace qg
