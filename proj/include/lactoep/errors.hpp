// errors.hpp -- error taxonomy shared by all lactoep modules.

#ifndef LACTOEP_ERRORS_HPP
#define LACTOEP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lactoep {

enum class errc {
  empty_coefficients,
  no_decay,
  vanishing_symbol,
  nonzero_winding,
  coefficient_range_too_small,
  non_square,
  too_large,
  exactly_singular,
  outside_domain,
  out_of_range,
  duplicate_index,
  mixed_anchor,
  plain_singular,
  equal_radii,
  radii_outside_annulus,
  coincident_points,
  bad_input,
};

const char* errc_name(errc code);

// Single exception type; `code()` lets callers branch without string matching.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace lactoep

#endif
