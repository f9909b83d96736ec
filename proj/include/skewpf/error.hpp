#pragma once

#include <stdexcept>
#include <string>

namespace skewpf {

// Every domain error the library raises, keyed so callers (and tests) can
// distinguish them without parsing messages.
enum class Errc {
  NonHomogeneous,
  DegreeMismatch,
  OddSize,
  NoPfaffianZero,
  WrongSpanDimension,
  NonStabilizing,
  OrderTooLarge,
  PfaffianNonZero,
  WrongType,
  UnknownLabel,
  Unclassified,
  UnknownArrow,
  NotSkew,
  ZeroCubic,
  NotInPiece,
  BadInput,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace skewpf
