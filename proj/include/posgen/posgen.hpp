#pragma once

#include "posgen/error.hpp"
#include "posgen/evolve.hpp"
#include "posgen/io.hpp"
#include "posgen/levy.hpp"
#include "posgen/liegroup.hpp"
#include "posgen/matrix.hpp"
#include "posgen/measures.hpp"
#include "posgen/moments.hpp"
#include "posgen/multi_index.hpp"
#include "posgen/rational.hpp"
#include "posgen/series.hpp"
#include "posgen/univariate.hpp"
