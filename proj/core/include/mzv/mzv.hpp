#pragma once

#include "mzv/cache.hpp"
#include "mzv/closed_form.hpp"
#include "mzv/harmonic.hpp"
#include "mzv/identity.hpp"
#include "mzv/index.hpp"
#include "mzv/rational.hpp"
#include "mzv/series.hpp"
#include "mzv/zeta.hpp"
