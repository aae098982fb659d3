#pragma once

#include "bounds.hpp"
#include "cur.hpp"
#include "dense_matrix.hpp"
#include "error.hpp"
#include "linalg.hpp"
#include "matgen.hpp"
#include "matrix_io.hpp"
#include "sampling.hpp"
#include "selection.hpp"
#include "srrqr.hpp"
