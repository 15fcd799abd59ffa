#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aontlab {

// Error categories raised by the library. Each maps to a stable kebab-case
// name which the CLI prints and embeds in JSON output.
enum class Errc {
  dimension_mismatch,
  unknown_symbol,
  invalid_column_set,
  oversized_column_set,
  invalid_parameters,
  mass_sum_violation,
  arity_mismatch,
  block_out_of_range,
  block_column_query,
  precondition_violation,
  invalid_t,
  too_many_nonuniform,
  block_too_large,
  hy_out_of_range,
  classification_mismatch,
  unknown_name,
  singular_matrix,
  search_space_too_large,
  nonprime_modulus,
  parse_error,
  io_error,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace aontlab
