// Evaluates the grid zeta function at a few points by the theta closed form
// and the torus integral, and prints the first few series coefficients.

#include <iostream>

#include <gridzeta.hpp>

int main()
{
    using namespace gridzeta;
    std::cout.precision(17);

    for (complex u : {complex(0.1), complex(0.2, 0.1), complex(0.0, -0.3)}) {
        const auto s = surface::lift_principal(u);
        std::cout << "u = " << u << "  t = " << s.t() << "\n"
                  << "  Z (theta)      = " << surface::zeta_tilde(s) << "\n"
                  << "  Z (quadrature) = " << oracles::zeta_via_quadrature(u) << "\n";
    }

    const auto z = exact::zeta_series(5);
    std::cout << "Z(u) = ";
    for (std::size_t i = 0; i <= z.order(); i += 2) {
        std::cout << z[i] << " u^" << i << (i < z.order() ? " + " : " + ...\n");
    }
}
