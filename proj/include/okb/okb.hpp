#pragma once

#include "okb/bodies.hpp"
#include "okb/bundle.hpp"
#include "okb/polynomial.hpp"
#include "okb/polytope.hpp"
#include "okb/rational.hpp"
#include "okb/ruled_surface.hpp"
#include "okb/volumes.hpp"
