#pragma once

#include "earlab/error.hpp"
#include "earlab/parallel.hpp"
#include "earlab/poset.hpp"
#include "earlab/lattice.hpp"
#include "earlab/homology.hpp"
#include "earlab/complex.hpp"
#include "earlab/labeling.hpp"
#include "earlab/matroid.hpp"
#include "earlab/matching.hpp"
#include "earlab/flag.hpp"
#include "earlab/ear.hpp"
#include "earlab/io.hpp"
