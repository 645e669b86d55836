#ifndef FRACPSEUDO_FRACPSEUDO_HPP
#define FRACPSEUDO_FRACPSEUDO_HPP

#include "fracpseudo/errors.hpp"
#include "fracpseudo/fracops.hpp"
#include "fracpseudo/grid.hpp"
#include "fracpseudo/invert.hpp"
#include "fracpseudo/model.hpp"
#include "fracpseudo/parallel.hpp"
#include "fracpseudo/quadrature.hpp"
#include "fracpseudo/rng.hpp"
#include "fracpseudo/sojourn.hpp"
#include "fracpseudo/specfun.hpp"
#include "fracpseudo/symbols.hpp"
#include "fracpseudo/version.hpp"
#include "fracpseudo/walks.hpp"

#endif
