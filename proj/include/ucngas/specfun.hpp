#pragma once

#include "ucngas/airy.hpp"
#include "ucngas/fermi_dirac.hpp"
