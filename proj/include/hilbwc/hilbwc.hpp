#pragma once

#include "hilbwc/exact.hpp"
#include "hilbwc/fmcalc.hpp"
#include "hilbwc/hilb.hpp"
#include "hilbwc/ifun.hpp"
#include "hilbwc/wallx.hpp"
