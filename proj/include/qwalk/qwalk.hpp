#pragma once

// Umbrella header for the qwalk library.

#include "qwalk/asymptotics.hpp"
#include "qwalk/csv.hpp"
#include "qwalk/entanglement.hpp"
#include "qwalk/experiments.hpp"
#include "qwalk/rl.hpp"
#include "qwalk/rng.hpp"
#include "qwalk/sequences.hpp"
#include "qwalk/svg_plot.hpp"
#include "qwalk/walk.hpp"
