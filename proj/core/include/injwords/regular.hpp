#pragma once

#include "injwords/group_algebra.hpp"
#include "injwords/matrix.hpp"
#include "injwords/modular.hpp"

// Regular representations of ℚS_r on itself, in the lexicographic basis of
// S_r.
namespace injwords {

/// Column g holds x·g.
RationalMatrix left_multiplication_matrix(const GroupAlgebraElement& x);
/// Column g holds g·x.
RationalMatrix right_multiplication_matrix(const GroupAlgebraElement& x);
modp::DenseMatrix right_multiplication_matrix(const GroupAlgebraElement& x, modp::Residue p);

}  // namespace injwords
