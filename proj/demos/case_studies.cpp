// Walks through an absorption and a containment design with a ten-cycle beat
// requirement and prints the selected pairs with their inscribed radii.

#include <cstdio>

#include "gyroshape/gyroshape.hpp"

using namespace gyroshape;

namespace {

void print_choice(const char* label, const DesignOutcome& out)
{
  if (!out.feasible) {
    std::printf("%s: infeasible (%s)\n", label, out.rationale.c_str());
    return;
  }
  const ParetoPoint& p = *out.chosen;
  std::printf("%s: (tau, sigma) = (%lld, %lld), n = %.4f, T_min ~ %.2f, r_res = %.4e\n", label,
              static_cast<long long>(p.pair.tau), static_cast<long long>(p.pair.sigma), p.n,
              p.t_min, p.r_res_unit);
  std::printf("  %s\n", out.rationale.c_str());
}

}  // namespace

int main()
{
  DesignQuery absorb;
  absorb.objective = Objective::absorb;
  absorb.t_max = 16.0;
  print_choice("absorption", solve(absorb));

  DesignQuery contain;
  contain.objective = Objective::contain;
  contain.t_max = 18.0;
  print_choice("containment", solve(contain));

  const ResonantPair pair = make_pair(6, 5);
  const InscribedReport rep = inscribed_radius_exact(resonant_param(pair, 1.0));
  std::printf("(6,5): theta_asy = %.4f, theta_c = %.4f, bound = %.3e, r_res = %.5e\n",
              *rep.theta_asy, *rep.theta_c, *rep.error_bound, rep.r_res);
  return 0;
}
