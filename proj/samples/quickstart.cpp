// Build one first- and one second-iteration family, check a few states exactly, dump JSON.

#include "xlag/xlag.hpp"

#include <iostream>

using namespace xlag;

int main() {
    Gen1Family f = make_gen1(2, 1, OscParams(2, 1));
    std::cout << f.key() << "\n  seed " << f.seed_poly.str() << "\n  V " << gen1_potential(f).value.str() << '\n';
    for (int n = 0; n <= 3; ++n) {
        bool exact = schrodinger_residual(gen1_potential(f), gen1_eigenfunction(f, n), gen1_eigenvalue(f, n), f.p).is_zero();
        std::cout << "  n=" << n << " E=" << to_string(gen1_eigenvalue(f, n)) << (exact ? "  residual 0" : "  RESIDUAL") << '\n';
    }

    // ℓ = −d − 1 = 1
    Gen2Family g = make_gen2(1, 1, 1, -2, 2);
    std::cout << g.key() << "\n  P_N " << g.pn.poly.str() << "\n  R2 " << to_string(g.R2) << '\n';
    json j = {{"superpotential", gen2_superpotential(g)}, {"ground", gen2_eigenfunction(g, 0)}};
    std::cout << j.dump() << '\n';
}
