#pragma once

// One-call SVP/CVP oracle reductions over exact arbitrary-precision
// arithmetic, plus the solvers and brute-force verifiers around them.

#include "ints.hpp"
#include "linalg.hpp"
#include "digits.hpp"
#include "params.hpp"
#include "lll.hpp"
#include "enumerate.hpp"
#include "verify.hpp"
#include "oracle.hpp"
#include "reduction.hpp"
#include "cvp.hpp"
#include "io.hpp"
