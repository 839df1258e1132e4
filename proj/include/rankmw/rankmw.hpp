#pragma once

// Umbrella header: exact rank-metric and Hamming-metric weight enumerator
// toolkit for linear codes over GF(q^m), with the MacWilliams identities in
// both analytic and brute-force form.

#include "cli.hpp"
#include "codes.hpp"
#include "common.hpp"
#include "gfq.hpp"
#include "hadamard.hpp"
#include "json_io.hpp"
#include "linalg.hpp"
#include "macwilliams.hpp"
#include "qcombin.hpp"
#include "qpoly.hpp"
