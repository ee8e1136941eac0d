#ifndef SWARM_SWARM_HPP
#define SWARM_SWARM_HPP

#include "swarm/core.hpp"
#include "swarm/direction.hpp"
#include "swarm/harness.hpp"
#include "swarm/io.hpp"
#include "swarm/linesearch.hpp"
#include "swarm/mass.hpp"
#include "swarm/objectives.hpp"
#include "swarm/rng.hpp"
#include "swarm/solver.hpp"

#endif
