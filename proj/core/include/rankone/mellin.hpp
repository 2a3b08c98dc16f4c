#pragma once

#include <rankone/common.hpp>
#include <rankone/grid.hpp>

#include <functional>
#include <string>
#include <vector>

// Calculus of functions of the dilation generator A.  The unitary map to the
// line is (Uv)(t) = e^{t/2} v(e^t); under it, an operator with kernel
// (xy)^{-1/2} phi(ln(x/y)) becomes convolution by phi, i.e. the multiplier
// phihat(xi) = int phi(t) e^{-i xi t} dt.  The signs below are locked by the
// test pairing the multiplier +-2 pi i/(e^{+-2 pi xi}+1) with the kernel
// 1/(x - y -+ i0).

namespace rankone {

/// A bounded function of the dilation generator, represented by its values
/// on the real spectral axis.
class MellinSymbol {
 public:
  MellinSymbol(std::function<Complex(double)> eval, std::string form = {})
      : eval_(std::move(eval)), form_(std::move(form)) {}

  Complex operator()(double xi) const { return eval_(xi); }
  const std::string& form() const { return form_; }

 private:
  std::function<Complex(double)> eval_;
  std::string form_;
};

/// U^{-1} F^{-1} [ S(xi) . F U v ]; requires the power-of-two log grid.
GridVector apply_symbol(const MellinSymbol& s, const GridVector& v);

/// Discrete phihat(xi) = int phi(t) e^{-i xi t} dt from samples phi(t_j);
/// values off the sampled frequencies are linearly interpolated.
MellinSymbol symbol_from_profile(const std::function<Complex(double)>& phi, const LogGrid& grid);

/// Inverse of symbol_from_profile: profile samples phi(t_j) from the symbol.
std::vector<Complex> profile_from_symbol(const MellinSymbol& s, const LogGrid& grid);

/// U_tau f(x) = e^{tau/2} f(e^tau x).  tau must be a multiple of the grid
/// spacing unless interpolation is allowed (then linear in t).
GridVector dilation_apply(double tau, const GridVector& v, bool allow_interpolation = false);

/// xi -> S(-xi): the transpose for the bilinear pairing.
MellinSymbol transpose_symbol(const MellinSymbol& s);

/// Multiplier e^{i tau xi} (exact grid shift when tau is a spacing multiple).
MellinSymbol dilation_symbol(double tau);

/// Symbol of the kernel 1/(x - y - i0): +2 pi i/(e^{+2 pi xi} + 1).
MellinSymbol cauchy_symbol_minus_i0();

/// Symbol of the kernel 1/(x - y + i0): -2 pi i/(e^{-2 pi xi} + 1).
MellinSymbol cauchy_symbol_plus_i0();

}  // namespace rankone
