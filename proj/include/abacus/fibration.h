/* Copyright 2026 The segal-abacus Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Cartesian-ness of maps, Segal and 2-Segal conditions, stability.

#ifndef ABACUS_FIBRATION_H_
#define ABACUS_FIBRATION_H_

#include "abacus/presheaf.h"

namespace abacus {

enum class MapClass {
  All,           // every generator of the shape
  DBot,          // d_0
  DTop,          // d_n on X_n
  InnerFaces,    // d_k, 0 < k < n
  Degeneracies,  // s_k
  Active,        // inner faces and degeneracies
  Splittings,    // the extra sub-bottom degeneracies
};

enum class Side { Upper, Lower, Both };

std::string class_name(MapClass c);

// Every naturality square of F against a generator in the class is a
// pullback.  Works for maps of presheaves on any shape.
CheckReport cartesian_on(const SMap& F, MapClass c);
CheckReport is_left_fibration(const SMap& F);   // cartesian on d_top
CheckReport is_right_fibration(const SMap& F);  // cartesian on d_bot
CheckReport is_culf(const SMap& F);

CheckReport is_segal(const TruncSSet& X);
CheckReport is_2segal(const TruncSSet& X, Side side);

// Bulk squares B_{i,j} over B_{i-1,j-1} for i,j >= 1: upper uses e_0 and
// d_0, lower uses e_i and d_j.
CheckReport stability(const Presheaf& B, Side side);
// Only the two squares at (1,1); requires double Segal.
CheckReport reduced_stability(const Presheaf& B);
CheckReport is_double_segal(const Presheaf& B);
CheckReport segal_rows(const Presheaf& B);
CheckReport segal_columns(const Presheaf& B);

}  // namespace abacus

#endif  // ABACUS_FIBRATION_H_
