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

// Decalage, split and pointed simplicial sets, rigidity, local initial
// objects and the comparison between pointings and augmented splittings.

#ifndef ABACUS_DECALAGE_H_
#define ABACUS_DECALAGE_H_

#include "abacus/fibration.h"
#include "abacus/presheaf.h"

namespace abacus {

enum class DecSide { Bottom, Top };

TruncSSet dec(const TruncSSet& X, DecSide side);
// eps : dec(X) -> X (truncated to T-1): d_0 on the bottom side, d_{n+1}
// on the top side.
SMap counit(const TruncSSet& X, DecSide side);
// delta : dec_bot(X) -> dec_bot(dec_bot(X)), levelwise s_0.
SMap comult(const TruncSSet& X);
// alpha : dec_bot(X) -> constant(X_0), composite of top faces.
SMap alpha_aug(const TruncSSet& X);
BiSSet tot(const TruncSSet& X);
TruncSSet sd(const TruncSSet& X);
// sd on maps.
SMap sd(const SMap& F);
SMap dec(const SMap& F, DecSide side);

// The underlying simplicial set of a split, augmented split or pointed
// presheaf (levels [0,n], n >= 0).
TruncSSet underlying(const Presheaf& A);
// dec_bot(X) with the splitting s_0 (the cofree coalgebra).
BottomSplitSSet cofree_coalgebra(const TruncSSet& X);
// The same with augmentation X_0 and section s_0.
AugBottomSplitSSet cofree_aug_coalgebra(const TruncSSet& X);
// A bottom-split structure given by splittings gamma_n : X_n -> X_{n+1}.
BottomSplitSSet make_split(const TruncSSet& X, const std::vector<FinMap>& gamma);

// Relations of the split shape plus the coalgebra axioms spelled out.
CheckReport validate_coalgebra(const BottomSplitSSet& A);
// gamma : X -> dec_bot(X) assembled from the splittings.
SMap coalgebra_map(const BottomSplitSSet& A);
CheckReport is_rigid(const BottomSplitSSet& A);
// Splitting on the source of a right fibration F : X -> Y induced from a
// splitting C of Y.  Throws PreconditionError unless F is a right
// fibration.
BottomSplitSSet pullback_coalgebra(const SMap& F, const BottomSplitSSet& C);

// Pointed presheaf from a simplicial set and a pointing a : C -> X_0.
PointedSSet make_pointed(const TruncSSet& X, const std::vector<std::string>& C,
                         const FinMap& a);
CheckReport is_local_initial(const PointedSSet& P);
CheckReport is_local_terminal(const PointedSSet& P);

// First (resp. last) vertex X_n -> X_0.
FinMap first_vertex(const TruncSSet& X, int n);
FinMap last_vertex(const TruncSSet& X, int n);

AugBottomSplitSSet h_lower(const PointedSSet& P);
PointedSSet h_upper(const AugBottomSplitSSet& A);
// h_upper h_lower P -> P (truncated), (c,x) -> d_0 x and (c,x) -> c.
SMap h_counit(const PointedSSet& P);
// A -> h_lower h_upper A, a -> (augmentation of a, s_sub a).
SMap h_unit(const AugBottomSplitSSet& A);

}  // namespace abacus

#endif  // ABACUS_DECALAGE_H_
