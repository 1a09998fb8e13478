#pragma once

#include "hilbwc/exact/bivar_poly.hpp"
#include "hilbwc/exact/eps_series.hpp"
#include "hilbwc/exact/laurent_poly.hpp"
#include "hilbwc/exact/products.hpp"
#include "hilbwc/exact/qseries.hpp"
#include "hilbwc/exact/rational.hpp"
