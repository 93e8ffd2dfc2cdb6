#pragma once

// Source-code similarity by dynamic time warping over operator/keyword
// value sequences: preprocessing, two-level encoding, the DTW core with
// warp paths, diagonal-run subsequence matches, and corpus ranking.

#include "codewarp/corpus.hpp"
#include "codewarp/diagnostics.hpp"
#include "codewarp/dtw.hpp"
#include "codewarp/encode.hpp"
#include "codewarp/encoding_table.hpp"
#include "codewarp/lexer.hpp"
#include "codewarp/preprocess.hpp"
#include "codewarp/subseq.hpp"
#include "codewarp/table_io.hpp"
