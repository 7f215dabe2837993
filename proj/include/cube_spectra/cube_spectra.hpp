#pragma once

#include "cube_spectra/ball_spectra.hpp"
#include "cube_spectra/bounds.hpp"
#include "cube_spectra/codes.hpp"
#include "cube_spectra/cube_function.hpp"
#include "cube_spectra/format.hpp"
#include "cube_spectra/limits.hpp"
#include "cube_spectra/lp_witness.hpp"
