#pragma once

#include "hilbwc/ifun/ifunction.hpp"
