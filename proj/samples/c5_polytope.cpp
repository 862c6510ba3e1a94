// A tour of the five-cycle: coloring vectors, the graph R, the matching
// system with and without odd-set rows, and the facet of the internal
// inequality over all vertices.

#include <iostream>

#include "repcol/repcol.hpp"

using namespace repcol;

int main()
{
    const Graph c5 = cycle_graph(5);
    const VertexOrdering id = ordering_identity(c5);
    const RepGraph r = build_rep(c5, id);

    VertexSetEnumeration col = enumerate_colorings(c5, id);
    std::cout << "arcs: " << r.size() << ", edges of R: " << r.adjacency.size() << "\n";
    std::cout << "coloring vectors: " << col.size() << ", stable sets of R: " << enumerate_stable_sets(r).size() << "\n";
    std::cout << "affine dimension: " << affine_dimension(col) << "\n";

    const auto full = orient_on_arcs(matching_system(complement(c5), 5), id);
    std::cout << "matching system complete: " << (verify_characterization(c5, id, full, HullCompare{}) ? "yes" : "no") << "\n";

    std::vector<LinearInequality> degree;
    for (const auto& row : full)
        if (row.family != Family::odd_set) degree.push_back(row);
    Verdict v = verify_characterization(c5, id, degree, HullCompare{});
    std::cout << "without odd-set rows: " << (v ? "complete" : v.witness) << "\n";

    const LinearInequality internal = internal_inequality(c5, id, all_vertices(c5));
    std::cout << "internal inequality rhs " << to_string(internal.rhs) << ", facet: "
              << (is_facet(internal, c5, id) ? "yes" : "no") << " ("
              << certificate_name(internal_facet_sufficient(c5, all_vertices(c5))) << ")\n";
    return 0;
}
