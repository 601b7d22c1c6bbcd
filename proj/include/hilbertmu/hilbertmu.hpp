#pragma once

// Umbrella header: the full moment-Hankel toolkit.

#include "hilbertmu/quadrature.hpp"
#include "hilbertmu/measure.hpp"
#include "hilbertmu/measure_json.hpp"
#include "hilbertmu/fft.hpp"
#include "hilbertmu/polynomial.hpp"
#include "hilbertmu/hardy.hpp"
#include "hilbertmu/majorant.hpp"
#include "hilbertmu/hankel.hpp"
#include "hilbertmu/carleson.hpp"
#include "hilbertmu/schatten.hpp"
#include "hilbertmu/verify.hpp"
