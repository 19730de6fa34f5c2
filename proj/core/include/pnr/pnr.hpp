#pragma once

#include "pnr/bounds.hpp"
#include "pnr/errors.hpp"
#include "pnr/monte_carlo.hpp"
#include "pnr/optimizer.hpp"
#include "pnr/quantum_core.hpp"
#include "pnr/receiver.hpp"
#include "pnr/sweeps.hpp"
