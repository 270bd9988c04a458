#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dialnet {

// Base of every error raised by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (JSON syntax, missing fields, bad tag syntax).
struct parse_error : error {
    using error::error;
};

// Well-formed input that violates a domain invariant.
struct semantic_error : error {
    using error::error;
};

// Operation applied to a value from a different lineale.
struct tag_mismatch : semantic_error {
    using semantic_error::semantic_error;
};

// Carrier sizes or boundary objects do not line up.
struct shape_mismatch : semantic_error {
    using semantic_error::semantic_error;
};

// A value is outside its lineale's carrier, or its text does not parse.
struct value_error : semantic_error {
    using semantic_error::semantic_error;
};

// Integer or rational arithmetic left the 64-bit range.
struct arithmetic_overflow : semantic_error {
    using semantic_error::semantic_error;
};

// A finite carrier (usually an exponential) would exceed the configured cap.
class cap_exceeded : public error {
  public:
    cap_exceeded(const std::string& what, std::size_t required, std::size_t cap)
        : error(what + ": requires " + (required == SIZE_MAX ? std::string("more than 2^64") : std::to_string(required)) +
                " elements, cap is " + std::to_string(cap)),
          required_(required),
          cap_(cap) {}

    // SIZE_MAX when the requirement itself overflows.
    std::size_t required() const noexcept { return required_; }
    std::size_t cap() const noexcept { return cap_; }

  private:
    std::size_t required_;
    std::size_t cap_;
};

}  // namespace dialnet
