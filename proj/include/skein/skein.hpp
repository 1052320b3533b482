#pragma once

#include "skein/bracket_planar.hpp"
#include "skein/chebyshev.hpp"
#include "skein/errors.hpp"
#include "skein/json_io.hpp"
#include "skein/laurent.hpp"
#include "skein/oriented.hpp"
#include "skein/skein_element.hpp"
#include "skein/smoothing_oracle.hpp"
#include "skein/text_io.hpp"
#include "skein/torus_curves.hpp"
