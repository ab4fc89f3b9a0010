#pragma once

#include <stdexcept>
#include <string>

namespace tsg {

enum class errc {
  invalid_parameter,
  parse_error,
  unknown_element,
  not_subgroup,
  not_normal,
  invalid_action,
  capability,
  hypothesis_not_met,
  missing_retraction,
  internal_inconsistency,
  io_error,
};

const char* errc_name(errc code) noexcept;

// Every failure raised by the library carries one of the codes above so the
// C boundary can map it without string matching.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

// Syntax error in a group or subset spec; position is a byte offset into the input.
class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : error(errc::parse_error, what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace tsg
