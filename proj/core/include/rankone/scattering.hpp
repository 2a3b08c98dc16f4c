#pragma once

#include <rankone/greens.hpp>
#include <rankone/grid.hpp>
#include <rankone/mellin.hpp>

#include <optional>
#include <span>
#include <variant>
#include <vector>

// Moller (wave) operators W^+-(H,X) for the whole family, kept as exact
// factorizations into multipliers in X and bounded functions of the dilation
// generator A.  Dense kernels exist only in eps-regularized form, as
// cross-checks; the exact kernels are distributions.

namespace rankone {

struct XMultiplier {
  std::function<Complex(double)> f;  // function of the node coordinate x
  std::string form;
};

using MollerFactor = std::variant<XMultiplier, MellinSymbol>;

/// A sum of ordered factor products; factors apply right to left, and an
/// empty product is the identity.  The closed formulas of this family need
/// at most two products of at most two factors each.
struct MollerOperator {
  Side side;
  PerturbationParams params;
  std::vector<std::vector<MollerFactor>> terms;
};

/// W^+-_{m,inf}: the pure A-symbol (e^{-+2 pi xi}+e^{-+ i pi m})/(e^{-+2 pi xi}+e^{+- i pi m}).
MollerOperator moller_infinity(Complex m, Side side);

/// W^+-(H,X) for any non-exceptional member; identity for the trivial one.
MollerOperator moller(const PerturbationParams& p, Side side);

GridVector apply(const MollerOperator& w, const GridVector& v);

/// Reverses factor order, transposes each factor (X-multipliers unchanged,
/// A-symbols xi-reflected): the adjoint for the bilinear pairing.
MollerOperator transpose(const MollerOperator& w);

struct RelationReport {
  double pa1 = 0.0;                 // ||W^{-+T} W^+- v - v|| / ||v||, worst over inputs/sides
  double pa3 = 0.0;                 // intertwining residual in resolvent form
  std::optional<double> pa2;        // vs the Stone-formula projection, if requested
};

struct RelationOptions {
  std::vector<Complex> z_points{Complex(0.0, 2.0), Complex(-1.5, 0.5)};
  bool with_pa2 = false;
  std::vector<double> eps_sequence{1e-2, 5e-3, 2.5e-3};
};

RelationReport verify_relations(const PerturbationParams& p,
                                std::span<const GridVector> test_vectors,
                                const RelationOptions& opts = {});

/// Dense eps-regularized kernel delta(x-y) + h(x)h(y)/((x-y +- i eps) g(y -+ i0)).
KernelMatrix moller_kernel_regularized(const PerturbationParams& p, Side side, double eps,
                                       GridPtr grid);

}  // namespace rankone
