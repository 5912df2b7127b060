#pragma once

#include "latwalk/real.hpp"

#include <vector>

namespace latwalk {

/// Low-lying spectrum of H = e^x + e^{-x} + R2 (e^y + e^{-y}) with
/// [x, y] = i*hbar, on a truncated harmonic-oscillator basis of `dim` states.
///
/// x = sqrt(hbar/2)(a+ + a) is the Gauss-Hermite Jacobi matrix (scaled), so
/// its eigenpairs come from Hermite nodes and the three-term recurrence; the
/// number-basis rotation diag(i^n) turns x into y, which makes H real in each
/// parity sector and block-diagonal mod 4 at R2 = 1. The working precision
/// must absorb cosh(lambda_max); callers get the required bits from
/// fock_required_bits and should set it before calling.
///
/// even_only restricts to the even-parity sectors, which hold the ground
/// state (the potential is even and the ground wavefunction nodeless).
std::vector<Real> fock_lowest_energies(const Real& hbar, const Real& r2, int count, int dim,
                                       bool even_only = false);

/// Working precision (bits) needed for a given hbar and truncation size.
int fock_required_bits(double hbar, int dim);

} // namespace latwalk
