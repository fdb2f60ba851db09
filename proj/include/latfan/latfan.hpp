// Umbrella header.

#pragma once

#include "latfan/classify.hpp"
#include "latfan/constructions.hpp"
#include "latfan/fan.hpp"
#include "latfan/fano.hpp"
#include "latfan/lattice.hpp"
