#pragma once

#include "cvgram/baseline.hpp"
#include "cvgram/bench.hpp"
#include "cvgram/combos.hpp"
#include "cvgram/core.hpp"
#include "cvgram/fast.hpp"
#include "cvgram/io.hpp"
#include "cvgram/leakage.hpp"
#include "cvgram/partition.hpp"
#include "cvgram/random.hpp"
