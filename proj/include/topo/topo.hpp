#pragma once

// Umbrella header: the whole library.

#include "topo/betti.hpp"
#include "topo/cell.hpp"
#include "topo/cell2vec.hpp"
#include "topo/complex.hpp"
#include "topo/eigenmap.hpp"
#include "topo/embedding.hpp"
#include "topo/errors.hpp"
#include "topo/fixtures.hpp"
#include "topo/graph_algorithms.hpp"
#include "topo/homp.hpp"
#include "topo/io.hpp"
#include "topo/operators.hpp"
#include "topo/sparse.hpp"
#include "topo/spectral.hpp"
#include "topo/transforms.hpp"
#include "topo/walks.hpp"
