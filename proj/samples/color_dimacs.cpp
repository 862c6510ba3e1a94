// Colors a DIMACS graph optimally: by matching when the stability number is
// at most 2, otherwise by the exact search over stable sets of R.

#include <fstream>
#include <iostream>

#include "repcol/repcol.hpp"

int main(int argc, char** argv)
{
    if (argc != 2) {
        std::cerr << "usage: color_dimacs graph.col\n";
        return 1;
    }
    std::ifstream in(argv[1]);
    if (!in) {
        std::cerr << "cannot open " << argv[1] << "\n";
        return 1;
    }
    try {
        const repcol::Graph g = repcol::parse_dimacs(in);
        const bool small_alpha = repcol::stability_number(g) <= 2;
        const repcol::ColoringSolution s = small_alpha
                                               ? repcol::solve_coloring_matching(g)
                                               : repcol::solve_exact(g, repcol::ordering_identity(g), repcol::ColoringProblem{});
        std::cout << "method: " << (small_alpha ? "matching" : "exact") << "\n";
        std::cout << "colors: " << s.colors_used << "\n";
        for (std::size_t i = 0; i < s.classes.size(); ++i) {
            std::cout << "  class " << i + 1 << ":";
            for (repcol::Vertex v : s.classes[i]) std::cout << ' ' << v + 1;
            std::cout << "\n";
        }
    } catch (const repcol::ParseError& e) {
        std::cerr << argv[1] << ":" << e.line() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
