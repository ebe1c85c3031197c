#pragma once

#include "rgl/direct_limit.hpp"
#include "rgl/errors.hpp"
#include "rgl/finite/boolean.hpp"
#include "rgl/finite/caps.hpp"
#include "rgl/finite/finite.hpp"
#include "rgl/finite/partition.hpp"
#include "rgl/finite/product_plane.hpp"
#include "rgl/finite/subspace.hpp"
#include "rgl/interval.hpp"
#include "rgl/json.hpp"
#include "rgl/lattice.hpp"
#include "rgl/rank.hpp"
#include "rgl/regrading.hpp"
#include "rgl/sampling.hpp"
#include "rgl/verify.hpp"
