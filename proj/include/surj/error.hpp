#pragma once

#include <stdexcept>
#include <string>

namespace surj {

/// Raised for malformed arguments: non-packed words, out-of-range positions,
/// reducible inputs where an irreducible one is required, and so on.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An empty word was passed where length >= 1 is required.
class degenerate_input_error : public input_error {
 public:
  using input_error::input_error;
};

/// Two surjections live in different ST_n^r and cannot be compared.
class incomparable_error : public input_error {
 public:
  using input_error::input_error;
};

/// 1 > 1 and 1 < 1 have no coherent value in the augmented algebra.
class undefined_unit_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace surj
