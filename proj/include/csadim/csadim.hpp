#pragma once

#include "analysis.hpp"
#include "bit_vector.hpp"
#include "cache.hpp"
#include "dim_table.hpp"
#include "errors.hpp"
#include "int_math.hpp"
#include "partition.hpp"
#include "width.hpp"
