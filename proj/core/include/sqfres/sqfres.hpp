#pragma once

#include "sqfres/analysis.hpp"
#include "sqfres/betti.hpp"
#include "sqfres/bouquets.hpp"
#include "sqfres/covers.hpp"
#include "sqfres/errors.hpp"
#include "sqfres/homology.hpp"
#include "sqfres/ideal.hpp"
#include "sqfres/io.hpp"
#include "sqfres/lattice.hpp"
#include "sqfres/linalg.hpp"
#include "sqfres/monomial.hpp"
#include "sqfres/random.hpp"
