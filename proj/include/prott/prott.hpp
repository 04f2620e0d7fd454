#pragma once

#include "prott/burnside.hpp"
#include "prott/descriptor.hpp"
#include "prott/element_set.hpp"
#include "prott/error.hpp"
#include "prott/extnat.hpp"
#include "prott/group.hpp"
#include "prott/json.hpp"
#include "prott/primes.hpp"
#include "prott/spectrum.hpp"
#include "prott/subgroups.hpp"
#include "prott/topology.hpp"
#include "prott/tower.hpp"
