#pragma once

// Variational spectra of one-dimensional double-well oscillators with even
// polynomial potentials: harmonic-oscillator-basis diagonalization with
// parity reduction, trace-stationary frequency selection, exact exponential
// ground states where the restriction conditions allow them, and an
// independent finite-difference cross-check.

#include "dwell/banded.hpp"
#include "dwell/basis.hpp"
#include "dwell/config.hpp"
#include "dwell/driver.hpp"
#include "dwell/eigensolver.hpp"
#include "dwell/hamiltonian.hpp"
#include "dwell/oracle.hpp"
#include "dwell/potential.hpp"
#include "dwell/reference_data.hpp"
#include "dwell/report.hpp"
