#pragma once

#include <stdexcept>

#include "hwc/builders.hpp"

namespace hwc {

// Text format, one directive per line, '#' starts a comment:
//
//   algspec 1
//   field rational            | field prime <p>
//   basis <label>...          labels may not contain "," or "*"
//   degree <int>...           one per basis label
//   product <i> <j> <k> <c>   e_i e_j += c e_k (labels); omitted products are zero
//   unit <vec>
//   aminus <vec>, <vec>, ...  spanning vectors of A⁻ (likewise tpart, aplus)
//   tau <i> <j> <c>           optional anti-involution, τ(e_i) += c e_j
//   trace <vec>               optional graded-symmetric form, coefficient of e_k
//   name <word> <vec>         optional named element
//
// A <vec> is a sum of terms "label" or "c*label" separated by whitespace, with c
// an integer or a fraction a/b.
struct SpecError : std::runtime_error {
  SpecError(int line, int col, const std::string& msg);
  int line, col;
};

BuiltAlgebra parse_spec(const std::string& text);
BuiltAlgebra load_spec(const std::string& path);
std::string write_spec(const BuiltAlgebra& B);

}  // namespace hwc
