#pragma once

#include "hilbwc/wallx/expansion.hpp"
#include "hilbwc/wallx/series.hpp"
