#pragma once

#include "parabi/errors.hpp"
#include "parabi/rational.hpp"
#include "parabi/poly.hpp"
#include "parabi/params.hpp"
#include "parabi/families.hpp"
#include "parabi/general_cbi.hpp"
#include "parabi/qpararacah.hpp"
#include "parabi/hypergeometric.hpp"
#include "parabi/dunkl.hpp"
#include "parabi/spectra.hpp"
#include "parabi/limits.hpp"
#include "parabi/diagram.hpp"
#include "parabi/verify.hpp"
