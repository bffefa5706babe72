// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace ncg {

/// Base class for every domain error raised by the library. `name()` is the
/// stable machine-readable identifier reported by the command-line tool.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define NCG_DEFINE_ERROR(Type)                                              \
  class Type : public Error {                                               \
   public:                                                                  \
    explicit Type(const std::string& message) : Error(#Type, message) {}    \
  }

NCG_DEFINE_ERROR(DimensionError);
NCG_DEFINE_ERROR(DomainError);
NCG_DEFINE_ERROR(StateError);
NCG_DEFINE_ERROR(UnsupportedAlgebra);
NCG_DEFINE_ERROR(UnsupportedTriple);
NCG_DEFINE_ERROR(OracleIntractable);
NCG_DEFINE_ERROR(CausalityError);
NCG_DEFINE_ERROR(KreinNullError);
NCG_DEFINE_ERROR(NonHermitianError);
NCG_DEFINE_ERROR(InternalError);

#undef NCG_DEFINE_ERROR

}  // namespace ncg
