#pragma once

#include "symfuse/check_report.hpp"
#include "symfuse/fusion.hpp"
#include "symfuse/group_algebra.hpp"
#include "symfuse/matrix_units.hpp"
#include "symfuse/permutation.hpp"
#include "symfuse/polynomial.hpp"
#include "symfuse/rational.hpp"
#include "symfuse/rational_matrix.hpp"
#include "symfuse/seminormal.hpp"
#include "symfuse/serialize.hpp"
#include "symfuse/yang_baxter.hpp"
#include "symfuse/young.hpp"
