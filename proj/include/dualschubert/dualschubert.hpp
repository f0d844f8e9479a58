#pragma once

#include "dualschubert/bruhat.hpp"
#include "dualschubert/lp.hpp"
#include "dualschubert/perm.hpp"
#include "dualschubert/poly.hpp"
#include "dualschubert/polytope.hpp"
#include "dualschubert/scnp.hpp"
#include "dualschubert/serialize.hpp"
#include "dualschubert/tiling.hpp"
