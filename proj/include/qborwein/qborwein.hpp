#pragma once

#include "qborwein/cache.hpp"
#include "qborwein/dissection.hpp"
#include "qborwein/dpoly.hpp"
#include "qborwein/interval.hpp"
#include "qborwein/qproducts.hpp"
#include "qborwein/quadratic.hpp"
#include "qborwein/rational.hpp"
#include "qborwein/region.hpp"
#include "qborwein/ring.hpp"
#include "qborwein/roots.hpp"
#include "qborwein/serialize.hpp"
#include "qborwein/series.hpp"
