#ifndef CERLAB_CERLAB_HPP
#define CERLAB_CERLAB_HPP

#include "acyclicity.hpp"
#include "cuts.hpp"
#include "error.hpp"
#include "fixtures.hpp"
#include "fourier_motzkin.hpp"
#include "hull.hpp"
#include "hypergraph.hpp"
#include "io.hpp"
#include "linear.hpp"
#include "node_set.hpp"
#include "polyhedron.hpp"
#include "rational.hpp"
#include "relaxations.hpp"
#include "report.hpp"
#include "simplex.hpp"
#include "transforms.hpp"
#include "verify.hpp"

#endif
