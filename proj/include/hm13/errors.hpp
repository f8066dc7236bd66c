#pragma once

#include <stdexcept>
#include <string>

namespace hm13 {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct UnknownConstant : Error {
  explicit UnknownConstant(const std::string& name)
      : Error("unknown constant: " + name) {}
};

struct SignUnresolved : Error {
  explicit SignUnresolved(const std::string& what) : Error(what) {}
};

struct UnknownMatrix : Error {
  explicit UnknownMatrix(const std::string& name)
      : Error("unknown matrix: " + name) {}
};

struct SizeMismatch : Error {
  explicit SizeMismatch(const std::string& what) : Error(what) {}
};

struct CapExceeded : Error {
  explicit CapExceeded(const std::string& what) : Error(what) {}
};

struct UnknownForm : Error {
  explicit UnknownForm(const std::string& name)
      : Error("unknown form: " + name) {}
};

struct UnknownSeries : Error {
  explicit UnknownSeries(const std::string& name)
      : Error("unknown series: " + name) {}
};

struct UnknownId : Error {
  explicit UnknownId(const std::string& id) : Error("unknown id: " + id) {}
};

struct OrderTooSmall : Error {
  explicit OrderTooSmall(const std::string& what) : Error(what) {}
};

struct DivisionByLeadingZero : Error {
  DivisionByLeadingZero() : Error("series division by zero leading term") {}
};

struct EmptyTruncationWindow : Error {
  EmptyTruncationWindow() : Error("series truncation window is empty") {}
};

struct TailBoundExceeded : Error {
  explicit TailBoundExceeded(const std::string& what) : Error(what) {}
};

struct ExactSquareMismatch : Error {
  ExactSquareMismatch() : Error("candidate square does not match target") {}
};

struct AmbiguousSign : Error {
  AmbiguousSign() : Error("numeric embedding too small to resolve sign") {}
};

}  // namespace hm13
