#pragma once

#include "guplab/dense_operator.hpp"
#include "guplab/dynamics.hpp"
#include "guplab/errors.hpp"
#include "guplab/exact_algebra.hpp"
#include "guplab/export.hpp"
#include "guplab/fock_algebra.hpp"
#include "guplab/liouville.hpp"
#include "guplab/momentum_map.hpp"
#include "guplab/optics.hpp"
#include "guplab/params.hpp"
#include "guplab/power_series.hpp"
#include "guplab/version.hpp"
