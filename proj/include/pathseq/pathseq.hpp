#pragma once

#include "pathseq/error.hpp"
#include "pathseq/numeric.hpp"
#include "pathseq/graph.hpp"
#include "pathseq/invariants.hpp"
#include "pathseq/starlike.hpp"
#include "pathseq/generalized.hpp"
#include "pathseq/reconstruct.hpp"
#include "pathseq/io.hpp"
