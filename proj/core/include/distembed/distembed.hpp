#pragma once

#include "distembed/cpd.hpp"
#include "distembed/embedding.hpp"
#include "distembed/errors.hpp"
#include "distembed/kernel.hpp"
#include "distembed/measure.hpp"
#include "distembed/quadrature.hpp"
#include "distembed/spectral.hpp"
#include "distembed/spectral_measure.hpp"
#include "distembed/summation.hpp"
