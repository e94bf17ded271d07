#pragma once

#include "mzv/poly.hpp"

namespace mzv {

/// Shuffle product on Q<x,y>:
///   1 sh w = w sh 1 = w,
///   a u sh b v = a (u sh b v) + b (a u sh v),
/// extended Q-bilinearly.
WordPoly shuffle_xy(const WordPoly& u, const WordPoly& v);
WordPoly shuffle_xy(const Word& u, const Word& v);

/// The same recursion on Q<z_1, z_2, ...> with each z_k an atomic letter.
ZPoly shuffle_z(const ZPoly& u, const ZPoly& v);
ZPoly shuffle_z(const Composition& u, const Composition& v);

}  // namespace mzv
