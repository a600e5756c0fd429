#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sqfres {

enum class ErrorCode {
  EmptyInput,
  UncoveredVariable,
  ParseError,
  SizeLimitExceeded,
  NotAFacet,
  NotInLattice,
  InvalidSplit,
  RotationOutOfRange,
  InvalidBouquetSet,
  InvalidPartition,
  OutOfRange,
  SameFacet,
  InvalidArgument,
  Internal,
};

const char* to_string(ErrorCode code) noexcept;

/// Base class for every error raised by the library. The code is stable and
/// is what callers (and the CLI exit-status logic) should dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when a configured cap (lattice size, face count, search budget) is
/// hit. Distinguished from other errors so a caller can report "unknown"
/// instead of "no".
class SizeLimitExceeded : public Error {
 public:
  SizeLimitExceeded(const std::string& what_cap, std::uint64_t cap)
      : Error(ErrorCode::SizeLimitExceeded,
              what_cap + " exceeded the configured cap of " +
                  std::to_string(cap)),
        cap_(cap) {}

  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
};

/// Resource caps shared by the enumeration-heavy operations.
struct Limits {
  std::uint64_t lattice_cap = std::uint64_t{1} << 20;
  std::uint64_t face_cap = std::uint64_t{1} << 20;
  std::uint64_t search_budget = 1'000'000;
};

}  // namespace sqfres
