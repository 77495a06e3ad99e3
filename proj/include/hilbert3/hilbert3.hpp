// Convenience header pulling in the whole library.

#pragma once

#include "hilbert3/cube_io.hpp"
#include "hilbert3/geometry.hpp"
#include "hilbert3/hilbert.hpp"
#include "hilbert3/lsystem.hpp"
#include "hilbert3/ordering.hpp"
#include "hilbert3/verify.hpp"
