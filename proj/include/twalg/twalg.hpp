// Umbrella header.
#pragma once

#include "twalg/closure.hpp"
#include "twalg/config.hpp"
#include "twalg/decomposition.hpp"
#include "twalg/errors.hpp"
#include "twalg/golden.hpp"
#include "twalg/hamming.hpp"
#include "twalg/operators.hpp"
#include "twalg/rational.hpp"
#include "twalg/report.hpp"
#include "twalg/rowspace.hpp"
#include "twalg/sparse.hpp"
#include "twalg/symtensor.hpp"
