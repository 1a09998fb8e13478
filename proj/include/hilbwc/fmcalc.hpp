#pragma once

#include "hilbwc/fmcalc/fm_expr.hpp"
#include "hilbwc/fmcalc/tn.hpp"
