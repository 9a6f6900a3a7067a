#pragma once

#include "fracfield/gamma.hpp"
#include "fracfield/gl_weights.hpp"
#include "fracfield/scheme.hpp"
#include "fracfield/sampled_line.hpp"
#include "fracfield/grid.hpp"
#include "fracfield/fracops.hpp"
#include "fracfield/fields.hpp"
#include "fracfield/maxwell.hpp"
#include "fracfield/variational.hpp"
#include "fracfield/specwave.hpp"
#include "fracfield/rng.hpp"
#include "fracfield/io.hpp"
