#pragma once

#include "pne/compose.hpp"
#include "pne/core.hpp"
#include "pne/dynamics.hpp"
#include "pne/error.hpp"
#include "pne/games.hpp"
#include "pne/generate.hpp"
#include "pne/io.hpp"
#include "pne/metric.hpp"
#include "pne/rational.hpp"
#include "pne/reduce.hpp"
#include "pne/solvers.hpp"
