#pragma once

#include "wongseq/error.hpp"
#include "wongseq/field.hpp"
#include "wongseq/gallery.hpp"
#include "wongseq/linalg.hpp"
#include "wongseq/matrix.hpp"
#include "wongseq/matrix_space.hpp"
#include "wongseq/oracles.hpp"
#include "wongseq/power_overflow.hpp"
#include "wongseq/sdit.hpp"
#include "wongseq/smr.hpp"
#include "wongseq/wong.hpp"
