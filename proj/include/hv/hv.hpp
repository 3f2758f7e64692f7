#pragma once

#include "hv/bounds.hpp"
#include "hv/certifier.hpp"
#include "hv/cohomology.hpp"
#include "hv/hypersurface.hpp"
#include "hv/milnor.hpp"
#include "hv/numeric.hpp"
#include "hv/pn.hpp"
