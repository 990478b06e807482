#pragma once

#include "lcr/graph.hpp"
#include "lcr/planarity.hpp"
#include "lcr/crossing_plan.hpp"
#include "lcr/transforms.hpp"
#include "lcr/witness.hpp"
#include "lcr/oracle.hpp"
#include "lcr/kernel.hpp"
#include "lcr/ubp.hpp"
#include "lcr/gadgets.hpp"
#include "lcr/io.hpp"
