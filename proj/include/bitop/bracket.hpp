#pragma once

#include "bitop/dynamics.hpp"
#include "bitop/params.hpp"

#include <functional>

namespace bitop {

using Observable = std::function<double(const BodyState&, const Params&)>;

/// Central-difference gradient of an observable with respect to the twelve
/// phase coordinates, step 1e-6 * (1 + |coordinate|).  Returned as a pair of
/// skew matrices (momentum part, Poisson part).
std::pair<Skew4, Skew4> observable_gradient(const Observable& f, const BodyState& s,
                                            const Params& p);

/// Lie-Poisson bracket on the semidirect product,
///   {f,g} = -<m, [df_m, dg_m]> - <g, [df_m, dg_g] - [dg_m, df_g]>,
/// with the pairing <x,y> = -1/2 tr(xy).  The sign convention is fixed so
/// that {coordinate, hamiltonian} reproduces the equations of motion.
/// Throws std::runtime_error when a gradient is non-finite.
double poisson_bracket(const Observable& f, const Observable& g, const BodyState& s,
                       const Params& p);

}  // namespace bitop
