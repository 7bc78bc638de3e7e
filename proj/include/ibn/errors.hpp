#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ibn {

enum class errc {
  arithmetic_overflow,
  empty_witness_set,
  not_equivalent,
  index_out_of_range,
  unknown_catalog_id,
  not_found,
  parse_error,
  arity_error,
  invalid_argument,
  bad_file,
};

constexpr std::string_view errc_name(errc code) {
  switch (code) {
    case errc::arithmetic_overflow: return "ArithmeticOverflow";
    case errc::empty_witness_set: return "EmptyWitnessSet";
    case errc::not_equivalent: return "NotEquivalent";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::unknown_catalog_id: return "UnknownCatalogId";
    case errc::not_found: return "NotFound";
    case errc::parse_error: return "ParseError";
    case errc::arity_error: return "ArityError";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::bad_file: return "BadFile";
  }
  return "Error";
}

/// Library-level error. `anchor`, when set, is a stable identifier of the
/// rule that was violated (machine-readable, surfaced in JSON output).
class Error : public std::runtime_error {
public:
  Error(errc code, std::string message, std::string anchor = {})
      : std::runtime_error(std::move(message)), code_(code), anchor_(std::move(anchor)) {}

  errc code() const { return code_; }
  const std::string& anchor() const { return anchor_; }

private:
  errc code_;
  std::string anchor_;
};

/// Error from the DSL or polynomial text parsers: carries the byte offset of
/// the failure and the set of tokens that would have been accepted there.
class SyntaxError : public Error {
public:
  SyntaxError(errc code, std::size_t offset, std::vector<std::string> expected, std::string message)
      : Error(code, std::move(message)), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace ibn
