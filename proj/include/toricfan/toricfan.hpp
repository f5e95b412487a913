#pragma once

#include "toricfan/building_set.hpp"
#include "toricfan/chern2.hpp"
#include "toricfan/criteria.hpp"
#include "toricfan/cubeahedron.hpp"
#include "toricfan/enumerate.hpp"
#include "toricfan/errors.hpp"
#include "toricfan/fan.hpp"
#include "toricfan/io.hpp"
#include "toricfan/lattice.hpp"
#include "toricfan/parallel.hpp"
#include "toricfan/polytope.hpp"
#include "toricfan/root_system.hpp"
#include "toricfan/subset.hpp"
