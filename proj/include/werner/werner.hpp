#pragma once

// Umbrella header for the core library. The JSON certificate writer lives
// in certificate_json.hpp and is not pulled in here, to keep the core free
// of the vendored JSON dependency.

#include "werner/bounds.hpp"
#include "werner/decomposition.hpp"
#include "werner/errors.hpp"
#include "werner/matrix.hpp"
#include "werner/partial_transpose.hpp"
#include "werner/rational.hpp"
#include "werner/shape.hpp"
#include "werner/spectra.hpp"
#include "werner/states.hpp"
