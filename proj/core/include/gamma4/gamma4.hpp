#pragma once

#include "gamma4/bounds.hpp"
#include "gamma4/error.hpp"
#include "gamma4/heegaard.hpp"
#include "gamma4/laurent.hpp"
#include "gamma4/numtheory.hpp"
#include "gamma4/pinch.hpp"
#include "gamma4/report.hpp"
#include "gamma4/torus.hpp"
