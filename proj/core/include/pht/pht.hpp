#pragma once

#include "pht/antilinear.hpp"
#include "pht/error.hpp"
#include "pht/evolution.hpp"
#include "pht/families.hpp"
#include "pht/metric.hpp"
#include "pht/pauli.hpp"
#include "pht/spectral.hpp"
