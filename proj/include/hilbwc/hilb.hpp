#pragma once

#include "hilbwc/hilb/fixed_point.hpp"
#include "hilbwc/hilb/full_torus.hpp"
#include "hilbwc/hilb/localization.hpp"
#include "hilbwc/hilb/partition.hpp"
