#pragma once

#include <cstddef>

#include "promisecc/bitstring.hpp"
#include "promisecc/unitary.hpp"

namespace promisecc {

// Operators of the equality / Deutsch-Jozsa construction, acting on the
// n+1 basis states |0>, |1>, ..., |n>.

/// Rotation on {|0>, |1>} with U_k|0> = sqrt((2k-n)/2k)|0> + sqrt(n/2k)|1>.
/// Throws ParameterError unless n >= 1, k >= 1 and 2k >= n.
UnitaryOp build_uk(int n, int k);

/// Fixes |0> and maps |1> to the uniform superposition of |1>..|n>; remaining
/// columns completed deterministically.
UnitaryOp build_uh(int n);

/// |0> -> |0>, |i> -> (-1)^{x_i}|i>. Serves as Alice's U_x, Bob's U_y and the
/// phase query of the Deutsch-Jozsa algorithm.
UnitaryOp build_phase_oracle(const BitString& x);

/// Single-position phase: |i> -> (-1)^sigma |i>, everything else fixed.
/// `position` is 1-based.
UnitaryOp build_position_phase(int n, int position, int sigma);

// Operators of the disjointness construction, acting on the 2n basis states
// |i,j> (1 <= i <= n, j in {0,1}), where |i,j> has 0-based index n*j + i - 1.

std::size_t disj_basis_index(int n, int i, int j);

/// First column (1/sqrt n)(1,...,1,0,...,0); remaining columns completed.
UnitaryOp build_us(int n);
/// First row (1/sqrt n)(1,...,1,0,...,0): the adjoint of build_us(n).
UnitaryOp build_uf(int n);

/// Exchanges |i,0> and |i,1> for every i with x_i = 1.
UnitaryOp build_swap_oracle(const BitString& x);
UnitaryOp build_position_swap(int n, int position, int sigma);

/// |i,0> -> |i,0>, |i,1> -> (-1)^{y_i}|i,1>.
UnitaryOp build_vy(const BitString& y);
UnitaryOp build_position_vphase(int n, int position, int sigma);

}  // namespace promisecc
