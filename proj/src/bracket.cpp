#include "bitop/bracket.hpp"

#include <cmath>
#include <stdexcept>

namespace bitop {

namespace {

constexpr double kStepScale = 1e-6;

double* coordinate(BodyState& s, int k) {
  switch (k) {
    case 0: return &s.m.m12;
    case 1: return &s.m.m13;
    case 2: return &s.m.m14;
    case 3: return &s.m.m23;
    case 4: return &s.m.m24;
    case 5: return &s.m.m34;
    case 6: return &s.g.m12;
    case 7: return &s.g.m13;
    case 8: return &s.g.m14;
    case 9: return &s.g.m23;
    case 10: return &s.g.m24;
    default: return &s.g.m34;
  }
}

}  // namespace

std::pair<Skew4, Skew4> observable_gradient(const Observable& f, const BodyState& s,
                                            const Params& p) {
  std::array<double, 12> grad{};
  for (int k = 0; k < 12; ++k) {
    BodyState sp = s, sm = s;
    const double base = *coordinate(sp, k);
    const double h = kStepScale * (1.0 + std::abs(base));
    *coordinate(sp, k) = base + h;
    *coordinate(sm, k) = base - h;
    grad[static_cast<std::size_t>(k)] = (f(sp, p) - f(sm, p)) / (2.0 * h);
    if (!std::isfinite(grad[static_cast<std::size_t>(k)]))
      throw std::runtime_error("poisson bracket: non-finite gradient");
  }
  return {Skew4::from_entries({grad[0], grad[1], grad[2], grad[3], grad[4], grad[5]}),
          Skew4::from_entries({grad[6], grad[7], grad[8], grad[9], grad[10], grad[11]})};
}

double poisson_bracket(const Observable& f, const Observable& g, const BodyState& s,
                       const Params& p) {
  const auto [fm, fg] = observable_gradient(f, s, p);
  const auto [gm, gg] = observable_gradient(g, s, p);
  const double momentum_part = pairing(s.m, commutator(fm, gm));
  const double poisson_part =
      pairing(s.g, commutator(fm, gg) - commutator(gm, fg));
  return -momentum_part - poisson_part;
}

}  // namespace bitop
