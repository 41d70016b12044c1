#pragma once

#include "cvmink/covariance.hpp"
#include "cvmink/errors.hpp"
#include "cvmink/measures.hpp"
#include "cvmink/minkowski.hpp"
#include "cvmink/states.hpp"
