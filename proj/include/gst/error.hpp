#pragma once

#include <stdexcept>
#include <string>

namespace gst {

enum class ErrCode {
  Parse,
  UnboundVariable,
  TypeMismatch,
  NonFunctionApplication,
  UnknownName,
  UnknownPreludeName,
  NucleusTooWeak,
  NoGenericElement,
  WrongTier,
  BudgetExhausted,
  NotANumeral,
  IllTypedRuntime,
  Unsynthesizable,
  InvalidArgument,
};

class Error : public std::runtime_error {
 public:
  Error(ErrCode code, std::string msg) : std::runtime_error(std::move(msg)), code(code) {}
  ErrCode code;
};

[[noreturn]] inline void fail(ErrCode code, const std::string& msg) { throw Error(code, msg); }

}  // namespace gst
