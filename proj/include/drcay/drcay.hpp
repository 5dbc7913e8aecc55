#pragma once

#include "drcay/bits.hpp"
#include "drcay/error.hpp"
#include "drcay/group.hpp"
#include "drcay/cayley.hpp"
#include "drcay/drg.hpp"
#include "drcay/structure.hpp"
#include "drcay/schur.hpp"
#include "drcay/cyclotomic.hpp"
#include "drcay/fourier.hpp"
#include "drcay/designs.hpp"
#include "drcay/classify.hpp"
#include "drcay/serialize.hpp"
