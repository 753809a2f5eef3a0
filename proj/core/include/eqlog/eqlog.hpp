#pragma once

#include "eqlog/asp.hpp"
#include "eqlog/definability.hpp"
#include "eqlog/equilibrium.hpp"
#include "eqlog/error.hpp"
#include "eqlog/forgetting.hpp"
#include "eqlog/formula.hpp"
#include "eqlog/ht.hpp"
#include "eqlog/interpolation.hpp"
#include "eqlog/parse.hpp"
#include "eqlog/program.hpp"
#include "eqlog/serialize.hpp"
#include "eqlog/vocabulary.hpp"
