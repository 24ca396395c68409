#pragma once

#include "morsenov/argmap.hpp"
#include "morsenov/braid.hpp"
#include "morsenov/error.hpp"
#include "morsenov/laurent.hpp"
#include "morsenov/matrix.hpp"
#include "morsenov/murasugi.hpp"
#include "morsenov/polynomial.hpp"
#include "morsenov/surface.hpp"
