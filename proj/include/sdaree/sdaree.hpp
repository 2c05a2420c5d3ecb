#pragma once

// SD-AREE: bit-matrix spiral cycling plus a position-dependent Caesar layer,
// with the analysis toolkit used to measure its repetition exclusion.

#include "sdaree/analysis.hpp"
#include "sdaree/bit_matrix.hpp"
#include "sdaree/codec.hpp"
#include "sdaree/kat.hpp"
#include "sdaree/key_schedule.hpp"
#include "sdaree/pipeline.hpp"
#include "sdaree/poly_caesar.hpp"
#include "sdaree/ring.hpp"
