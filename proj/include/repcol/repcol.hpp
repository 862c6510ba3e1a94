#ifndef REPCOL_REPCOL_HPP
#define REPCOL_REPCOL_HPP

#include "repcol/corpus.hpp"
#include "repcol/double_description.hpp"
#include "repcol/errors.hpp"
#include "repcol/formulation.hpp"
#include "repcol/graph.hpp"
#include "repcol/inequalities.hpp"
#include "repcol/json_io.hpp"
#include "repcol/lp.hpp"
#include "repcol/matching.hpp"
#include "repcol/ordering.hpp"
#include "repcol/polytope_lab.hpp"
#include "repcol/rational.hpp"
#include "repcol/rep_graph.hpp"
#include "repcol/solvers.hpp"
#include "repcol/structure.hpp"

#endif  // REPCOL_REPCOL_HPP
