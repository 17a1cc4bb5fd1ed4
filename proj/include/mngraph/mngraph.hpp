#ifndef MNGRAPH_MNGRAPH_HPP
#define MNGRAPH_MNGRAPH_HPP

#include "mngraph/catalog.hpp"
#include "mngraph/constructions.hpp"
#include "mngraph/error.hpp"
#include "mngraph/graph.hpp"
#include "mngraph/io.hpp"
#include "mngraph/labels.hpp"
#include "mngraph/random.hpp"
#include "mngraph/recognizers.hpp"
#include "mngraph/seeing.hpp"
#include "mngraph/solvers.hpp"
#include "mngraph/verification.hpp"
#include "mngraph/vertex_set.hpp"

#endif  // MNGRAPH_MNGRAPH_HPP
