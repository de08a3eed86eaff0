#pragma once

// Sierpinski gasket pre-fractals: infinity-harmonic extensions, Lipschitz
// functionals and discrete p-energies.

#include "gasket/error.hpp"
#include "gasket/graph.hpp"
#include "gasket/domain.hpp"
#include "gasket/field.hpp"
#include "gasket/lipschitz.hpp"
#include "gasket/infinity.hpp"
#include "gasket/pharm.hpp"
#include "gasket/lab.hpp"
#include "gasket/io.hpp"
