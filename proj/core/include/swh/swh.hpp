#pragma once

#include "swh/asymptotic.hpp"
#include "swh/config.hpp"
#include "swh/error.hpp"
#include "swh/exact.hpp"
#include "swh/montecarlo.hpp"
#include "swh/rank_sequence.hpp"
#include "swh/rational.hpp"
#include "swh/strategy.hpp"
