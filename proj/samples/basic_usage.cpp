// Computes a few closed forms and checks one of them by brute force.

#include "ehrkit/ehrkit.hpp"

#include <iostream>

int main() {
    using namespace ehrkit;

    std::cout << "W(1,3,2) = " << weighted_lah(1, 3, 2) << '\n';
    std::cout << "octahedron:           " << to_string(hypersimplex_ehrhart(2, 4)) << '\n';
    std::cout << "half-open (2,5):      " << to_string(half_open_ehrhart(2, 5)) << '\n';
    std::cout << "independence U_{2,4}: " << to_string(independence_ehrhart(2, 4)) << '\n';

    const Polynomial counted = oracle_ehrhart(build_independence(2, 4), 4);
    std::cout << "brute force agrees:   " << std::boolalpha << (counted == independence_ehrhart(2, 4)) << '\n';
    return 0;
}
