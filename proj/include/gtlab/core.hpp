#pragma once

#include "gtlab/core/eigen.hpp"
#include "gtlab/core/expm.hpp"
#include "gtlab/core/matrix.hpp"
#include "gtlab/core/norms.hpp"
#include "gtlab/core/pauli.hpp"
