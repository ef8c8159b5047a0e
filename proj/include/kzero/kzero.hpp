#pragma once

#include "kzero/airy.hpp"
#include "kzero/errors.hpp"
#include "kzero/estimates.hpp"
#include "kzero/gamma.hpp"
#include "kzero/io.hpp"
#include "kzero/macdonald.hpp"
#include "kzero/solver.hpp"
#include "kzero/types.hpp"
#include "kzero/verification.hpp"
