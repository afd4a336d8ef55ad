#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "fracalc/fracops.hpp"
#include "fracalc/grid.hpp"

namespace fracalc {
namespace spectral {

/// In-place radix-2 FFT; size must be a power of two. The inverse
/// transform includes the 1/N factor.
void fft(std::vector<std::complex<double>>& a, bool inverse);

/// Fourier multiplier of the operator under the convention
/// fhat(xi) = int f(x) exp(-i x xi) dx, principal branch powers.
std::complex<double> symbol(OperatorKind k, double alpha, double xi);

/// Applies a Fourier multiplier to a sampled function. The bulk of the
/// spectrum goes through a zero-padded FFT; a smooth low-frequency window
/// is carved out and its contribution is recomputed as an accurate
/// band integral against the directly evaluated transform. Without that
/// correction the slowly decaying output tails wrap around the periodic
/// FFT window and pollute the result at the 1e-1..1e-2 level.
/// conj_symmetric multipliers (m(-xi) = conj m(xi)) give real output.
std::vector<double> apply_multiplier(
    const GridFunction& f,
    const std::function<std::complex<double>(double)>& m,
    bool* aliasing_warning = nullptr);

/// apply_multiplier for a catalog operator, with the matching power-law
/// tail models attached to the result.
GridFunction apply_symbol(const GridFunction& f, OperatorKind k,
                          const Alpha& a);

}  // namespace spectral
}  // namespace fracalc
