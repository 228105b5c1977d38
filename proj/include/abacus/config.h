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

// Augmented bisimplicial configurations indexed by D: the right Kan
// extension q_* of a simplicial map, the unit comparison, bicomodule and
// pointing axioms, extension from the pointed shape, and the total space M.

#ifndef ABACUS_CONFIG_H_
#define ABACUS_CONFIG_H_

#include <map>
#include <string>

#include "abacus/decalage.h"
#include "abacus/fibration.h"
#include "abacus/presheaf.h"

namespace abacus {

// B_{i,j} = X_i x_{Y_i} Y_{i+1+j}; row -1 is Y, column -1 is X.  Bulk ids
// are "(x,y)".  Truncation is that of Y.
DSet q_lower_star(const SMap& F);
// Left Kan extension: bulk X_{i+1+j}, column X, row Y.  Satisfies
// condition (star) only when F is cartesian, e.g. not for X -> point.
DSet q_lower_shriek(const SMap& F);
// The map X -> Y recovered from column -1 and row -1 via f^{n+1}.
SMap q_upper_star(const DSet& B);

// Row maps f : B_{i+1,.} -> dec_bot(B_{i,.}) are cartesian against every
// face and degeneracy, augmentation included.
CheckReport condition_star(const DSet& B);
// eta : B -> q_* q^* B, b -> (column part, row part).
SMap unit_map(const DSet& B);
CheckReport unit_iso(const DSet& B);

// Augmentation maps as simplicial maps: column 0 -> column -1 by d_0 and
// row 0 -> row -1 by e_0.
SMap column_augmentation(const DSet& B);
SMap row_augmentation(const DSet& B);
CheckReport is_bicomodule_config(const DSet& B);
// X x_Y dec_top(Y) is Segal.
TruncSSet rel_upper_pullback(const SMap& F);
CheckReport is_rel_upper_2segal(const SMap& F);
CheckReport has_invertible_abacus(const DSet& B);

SigmaSet j_upper_star(const DSet& B);
SigmaSet p_star_tot(const TruncSSet& X);
// Row 0 with its pointing, and column 0 with the same pointing.
PointedSSet horizontal_pointing(const SigmaSet& A);
PointedSSet vertical_pointing(const SigmaSet& A);
CheckReport boors_axioms(const SigmaSet& A);
// Horizontal pointing, upper stability and Segal rows.
CheckReport half_axioms(const SigmaSet& A);

// A D-presheaf (or its i >= 0 part) together with the splittings used to
// build it.  ssub : B_{i,j} -> B_{i,j+1} for j >= -1, tsplit : B_{i,j} ->
// B_{i+1,j} for i >= -1 (full extension only), keyed by source level.
struct Extension {
  Presheaf B;
  std::map<DObject, FinMap> ssub;
  std::map<DObject, FinMap> tsplit;
};
// Truncation drops by one: a Sigma-set of truncation S gives a D-set of
// truncation S-1.  Throws PreconditionError if the axioms fail.
Extension extend(const SigmaSet& A, bool full);
DSet extend_sigma_to_d(const SigmaSet& A);
// Extension to D_{i >= 0} under the half axioms.
Presheaf extend_half(const SigmaSet& A);
Presheaf restrict_half(const Presheaf& B);

// s_sub from the D-action, tsplit = f^{-1} s_0; needs invertible abacus.
Extension canonical_splittings(const DSet& B);
// t_top s_sub = tsplit s_sub wherever both sides are defined.
CheckReport ts_compat(const Extension& E);
// g = d_0 tsplit is a two-sided inverse of every abacus action.
CheckReport abacus_inverse(const Extension& E);

// q_*(id_X) -> r^*X, (x,y) -> y.
SMap qstar_id_to_r(const TruncSSet& X);
// A levelwise map between D-sets that agree on the bulk up to the given
// bulk bijection, extended to the augmentations through d_0 and e_0.
SMap extend_bulk_map(const DSet& source, const DSet& target,
                     const std::map<DObject, FinMap>& bulk);

struct TotalSpace {
  TruncSSet M;
  SMap proj;  // M -> simplex(1)
};
// M_n = sum over i+1+j = n of B_{i,j}; ids "(i,j):id".
TotalSpace build_M(const Presheaf& B);
TotalSpace build_M(const SMap& F);
// Fibres of M over the simplices 0^{i+1} 1^{j+1}, as a Slice presheaf.
Presheaf extract_from_M(const TotalSpace& S);
// Compares extract_from_M(build_M(B)) with the Slice part of B.
CheckReport m_roundtrip(const Presheaf& B);
// 2-Segal total space versus X, Y 2-Segal and F relatively upper 2-Segal.
CheckReport m_2segal_dictionary(const SMap& F);

// The fixture of the design notes: column -1 doubled, abacus out of it by
// folding.  Returned as is; callers run validate().
DSet doubled_column_fixture(const TruncSSet& Y);

}  // namespace abacus

#endif  // ABACUS_CONFIG_H_
