//
// pschur : block-matrix generalized inverses.
//
// Dense matrices over float64 or exact rationals; Moore-Penrose inversion
// with Penrose certificates; pseudo Schur complements and pivot
// transforms; the sufficient block-inversion formulas with their
// range-inclusion gates; and a seeded verification harness.
//
#pragma once

#include "pschur/bigint.hpp"
#include "pschur/block.hpp"
#include "pschur/blockinv.hpp"
#include "pschur/conditions.hpp"
#include "pschur/fixtures.hpp"
#include "pschur/generate.hpp"
#include "pschur/matrix.hpp"
#include "pschur/pinv.hpp"
#include "pschur/range.hpp"
#include "pschur/rational.hpp"
#include "pschur/rng.hpp"
#include "pschur/scalar.hpp"
#include "pschur/verify.hpp"
