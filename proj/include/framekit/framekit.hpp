#ifndef FRAMEKIT_FRAMEKIT_HPP
#define FRAMEKIT_FRAMEKIT_HPP

#include "framekit/check.hpp"
#include "framekit/compactify.hpp"
#include "framekit/construct.hpp"
#include "framekit/corpus.hpp"
#include "framekit/dot.hpp"
#include "framekit/error.hpp"
#include "framekit/ideals.hpp"
#include "framekit/json_io.hpp"
#include "framekit/lattice.hpp"
#include "framekit/random.hpp"
#include "framekit/rational.hpp"
#include "framekit/spectrum.hpp"
#include "framekit/step_ring.hpp"
#include "framekit/verify.hpp"

#endif  // FRAMEKIT_FRAMEKIT_HPP
