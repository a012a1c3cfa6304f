#pragma once

#include <stdexcept>
#include <string>

namespace stq {

enum class ErrorCode {
  invalid_argument,
  degenerate_triangle,
  rank_deficient,
  invalid_face_count,
  unknown_vertex,
  inconsistent_rotation_system,
  not_multiple_of_six,
  unassigned_angle,
  not_automorphism,
  search_space_exceeded,
  unmatched_axis,
  inconsistent_group,
  io_error,
  parse_error,
  numeric_overflow,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace stq
