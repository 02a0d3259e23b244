// Copyright 2026 The clusterqis Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The published correction table, row for row. Text columns are kept as
// printed (ASCII kets, Pauli letters); the key column is the outcome each row
// is checked under. Rows whose Bob column reads |01>+|11> or |01>-|11> are
// keyed as Psi+ and Psi- respectively.

#include <array>

#include "clusterqis/qis.h"

namespace clusterqis {

namespace {

using B = BellOutcome;

constexpr std::array<Table1Row, 64> kRows = {{
    {{B::kPhiPlus, B::kPhiPlus, B::kPhiPlus}, "Phi+ Phi+", "|00>+|11>", "a|00>+b|01>-c|10>-d|11>", "Z", "I"},
    {{B::kPhiMinus, B::kPhiPlus, B::kPhiPlus}, "Phi- Phi+", "|00>+|11>", "a|00>+b|01>+c|10>+d|11>", "I", "I"},
    {{B::kPhiPlus, B::kPhiMinus, B::kPhiPlus}, "Phi+ Phi-", "|00>+|11>", "a|00>-b|01>-c|10>+d|11>", "Z", "Z"},
    {{B::kPhiMinus, B::kPhiMinus, B::kPhiPlus}, "Phi- Phi-", "|00>+|11>", "a|00>-b|01>+c|10>-d|11>", "I", "Z"},
    {{B::kPhiPlus, B::kPhiPlus, B::kPhiMinus}, "Phi+ Phi+", "|00>-|11>", "a|00>+b|01>+c|10>+d|11>", "I", "I"},
    {{B::kPhiMinus, B::kPhiPlus, B::kPhiMinus}, "Phi- Phi+", "|00>-|11>", "a|00>+b|01>-c|10>-d|11>", "Z", "I"},
    {{B::kPhiPlus, B::kPhiMinus, B::kPhiMinus}, "Phi+ Phi-", "|00>-|11>", "a|00>-b|01>+c|10>-d|11>", "I", "Z"},
    {{B::kPhiMinus, B::kPhiMinus, B::kPhiMinus}, "Phi- Phi-", "|00>-|11>", "a|00>-b|01>-c|10>+d|11>", "Z", "Z"},
    {{B::kPhiPlus, B::kPhiPlus, B::kPsiPlus}, "Phi+ Phi+", "|01>+|10>", "a|10>+b|11>+c|10>+d|01>", "X", "I"},
    {{B::kPhiMinus, B::kPhiPlus, B::kPsiPlus}, "Phi- Phi+", "|01>+|10>", "a|10>+b|11>-c|10>-d|01>", "-iY", "I"},
    {{B::kPhiPlus, B::kPhiMinus, B::kPsiPlus}, "Phi+ Phi-", "|01>+|10>", "a|10>-b|11>+c|10>-d|01>", "X", "Z"},
    {{B::kPhiMinus, B::kPhiMinus, B::kPsiPlus}, "Phi- Phi-", "|01>+|10>", "a|10>-b|11>-c|10>+d|01>", "-iY", "Z"},
    {{B::kPhiPlus, B::kPhiPlus, B::kPsiMinus}, "Phi+ Phi+", "|01>-|10>", "-a|10>-b|11>+c|10>+d|01>", "iY", "I"},
    {{B::kPhiMinus, B::kPhiPlus, B::kPsiMinus}, "Phi- Phi+", "|01>-|10>", "-a|10>-b|11>-c|10>-d|01>", "-X", "I"},
    {{B::kPhiPlus, B::kPhiMinus, B::kPsiMinus}, "Phi+ Phi-", "|01>-|10>", "-a|10>+b|11>+c|10>-d|01>", "iY", "Z"},
    {{B::kPhiMinus, B::kPhiMinus, B::kPsiMinus}, "Phi- Phi-", "|01>-|10>", "-a|10>+b|11>-c|10>+d|01>", "-X", "Z"},
    {{B::kPhiPlus, B::kPsiPlus, B::kPhiPlus}, "Phi+ Psi+", "|00>+|11>", "a|01>+b|00>-c|11>-d|10>", "Z", "X"},
    {{B::kPhiMinus, B::kPsiPlus, B::kPhiPlus}, "Phi- Psi+", "|00>+|11>", "a|01>+b|00>+c|11>+d|10>", "I", "X"},
    {{B::kPhiPlus, B::kPsiMinus, B::kPhiPlus}, "Phi+ Psi-", "|00>+|11>", "a|01>-b|00>-c|11>+d|10>", "Z", "-iY"},
    {{B::kPhiMinus, B::kPsiMinus, B::kPhiPlus}, "Phi- Psi-", "|00>+|11>", "a|01>-b|00>+c|11>-d|10>", "I", "-iY"},
    {{B::kPhiPlus, B::kPsiPlus, B::kPhiMinus}, "Phi+ Psi+", "|00>-|11>", "a|01>+b|00>+c|11>+d|10>", "I", "X"},
    {{B::kPhiMinus, B::kPsiPlus, B::kPhiMinus}, "Phi- Psi+", "|00>-|11>", "a|01>+b|00>-c|11>-d|10>", "Z", "X"},
    {{B::kPhiPlus, B::kPsiMinus, B::kPhiMinus}, "Phi+ Psi-", "|00>-|11>", "a|01>-b|00>+c|11>-d|10>", "I", "-iY"},
    {{B::kPhiMinus, B::kPsiMinus, B::kPhiMinus}, "Phi- Psi-", "|00>-|11>", "a|01>-b|00>-c|11>+d|10>", "Z", "-iY"},
    {{B::kPhiPlus, B::kPsiPlus, B::kPsiPlus}, "Phi+ Psi+", "|01>+|10>", "a|11>+b|10>+c|01>+d|00>", "X", "X"},
    {{B::kPhiMinus, B::kPsiPlus, B::kPsiPlus}, "Phi- Psi+", "|01>+|10>", "a|11>+b|10>-c|01>-d|00>", "-iY", "X"},
    {{B::kPhiPlus, B::kPsiMinus, B::kPsiPlus}, "Phi+ Psi-", "|01>+|10>", "a|11>-b|10>+c|01>-d|00>", "X", "-iY"},
    {{B::kPhiMinus, B::kPsiMinus, B::kPsiPlus}, "Phi- Psi-", "|01>+|10>", "a|11>-b|10>-c|01>+d|00>", "-iY", "-iY"},
    {{B::kPhiPlus, B::kPsiPlus, B::kPsiMinus}, "Phi+ Psi+", "|01>-|10>", "-a|11>-b|10>+c|01>+d|00>", "iY", "X"},
    {{B::kPhiMinus, B::kPsiPlus, B::kPsiMinus}, "Phi- Psi+", "|01>-|10>", "-a|11>-b|10>-c|01>-d|00>", "-X", "X"},
    {{B::kPhiPlus, B::kPsiMinus, B::kPsiMinus}, "Phi+ Psi-", "|01>-|10>", "-a|11>+b|10>+c|01>-d|00>", "-iY", "iY"},
    {{B::kPhiMinus, B::kPsiMinus, B::kPsiMinus}, "Phi- Psi-", "|01>-|10>", "-a|11>+b|10>-c|01>+d|00>", "X", "iY"},
    {{B::kPsiPlus, B::kPhiPlus, B::kPhiPlus}, "Psi+ Phi+", "|00>+|11>", "-a|10>-b|11>+c|00>+d|01>", "iY", "I"},
    {{B::kPsiMinus, B::kPhiPlus, B::kPhiPlus}, "Psi- Phi+", "|00>+|11>", "-a|10>-b|11>-c|00>-d|01>", "-X", "I"},
    {{B::kPsiPlus, B::kPhiMinus, B::kPhiPlus}, "Psi+ Phi-", "|00>+|11>", "-a|10>+b|11>+c|00>-d|01>", "iY", "Z"},
    {{B::kPsiMinus, B::kPhiMinus, B::kPhiPlus}, "Psi- Phi-", "|00>+|11>", "-a|10>+b|11>-c|00>+d|01>", "-X", "Z"},
    {{B::kPsiPlus, B::kPhiPlus, B::kPhiMinus}, "Psi+ Phi+", "|00>-|11>", "a|10>+b|11>+c|00>+d|01>", "X", "I"},
    {{B::kPsiMinus, B::kPhiPlus, B::kPhiMinus}, "Psi- Phi+", "|00>-|11>", "a|10>+b|11>-c|00>-d|01>", "-iY", "I"},
    {{B::kPsiPlus, B::kPhiMinus, B::kPhiMinus}, "Psi+ Phi-", "|00>-|11>", "a|10>-b|11>+c|00>-d|01>", "X", "Z"},
    {{B::kPsiMinus, B::kPhiMinus, B::kPhiMinus}, "Psi- Phi-", "|00>-|11>", "a|10>-b|11>-c|00>+d|01>", "-iY", "Z"},
    {{B::kPsiPlus, B::kPhiPlus, B::kPsiPlus}, "Psi+ Phi+", "|01>+|11>", "a|00>+b|01>+c|10>+d|11>", "I", "I"},
    {{B::kPsiMinus, B::kPhiPlus, B::kPsiPlus}, "Psi- Phi+", "|01>+|11>", "a|00>+b|01>-c|10>-d|11>", "Z", "I"},
    {{B::kPsiPlus, B::kPhiMinus, B::kPsiPlus}, "Psi+ Phi-", "|01>+|11>", "a|00>-b|01>+c|10>-d|11>", "I", "Z"},
    {{B::kPsiMinus, B::kPhiMinus, B::kPsiPlus}, "Psi- Phi-", "|01>+|11>", "a|00>-b|01>-c|10>+d|11>", "Z", "Z"},
    {{B::kPsiPlus, B::kPhiPlus, B::kPsiMinus}, "Psi+ Phi+", "|01>-|11>", "a|00>+b|01>-c|10>-d|11>", "Z", "I"},
    {{B::kPsiMinus, B::kPhiPlus, B::kPsiMinus}, "Psi- Phi+", "|01>-|11>", "a|00>+b|01>+c|10>+d|11>", "I", "I"},
    {{B::kPsiPlus, B::kPhiMinus, B::kPsiMinus}, "Psi+ Phi-", "|01>-|11>", "a|00>-b|01>-c|10>+d|11>", "Z", "Z"},
    {{B::kPsiMinus, B::kPhiMinus, B::kPsiMinus}, "Psi- Phi-", "|01>-|11>", "a|00>-b|01>+c|10>-d|11>", "I", "Z"},
    {{B::kPsiPlus, B::kPsiPlus, B::kPhiPlus}, "Psi+ Psi+", "|00>+|11>", "-a|11>-b|10>+c|01>+d|00>", "iY", "X"},
    {{B::kPsiMinus, B::kPsiPlus, B::kPhiPlus}, "Psi- Psi+", "|00>+|11>", "-a|11>-b|10>-c|01>-d|00>", "-X", "X"},
    {{B::kPsiPlus, B::kPsiMinus, B::kPhiPlus}, "Psi+ Psi-", "|00>+|11>", "-a|11>+b|10>+c|01>-d|00>", "-iY", "iY"},
    {{B::kPsiMinus, B::kPsiMinus, B::kPhiPlus}, "Psi- Psi-", "|00>+|11>", "-a|11>+b|10>-c|01>+d|00>", "X", "iY"},
    {{B::kPsiPlus, B::kPsiPlus, B::kPhiMinus}, "Psi+ Psi+", "|00>-|11>", "a|11>+b|10>+c|01>+d|00>", "X", "X"},
    {{B::kPsiMinus, B::kPsiPlus, B::kPhiMinus}, "Psi- Psi+", "|00>-|11>", "a|11>+b|10>-c|01>-d|00>", "-iY", "X"},
    {{B::kPsiPlus, B::kPsiMinus, B::kPhiMinus}, "Psi+ Psi-", "|00>-|11>", "a|11>-b|10>+c|01>-d|00>", "X", "-iY"},
    {{B::kPsiMinus, B::kPsiMinus, B::kPhiMinus}, "Psi- Psi-", "|00>-|11>", "a|11>-b|10>-c|01>+d|00>", "-iY", "-iY"},
    {{B::kPsiPlus, B::kPsiPlus, B::kPsiPlus}, "Psi+ Psi+", "|01>+|10>", "a|01>+b|00>+c|11>+d|10>", "I", "X"},
    {{B::kPsiMinus, B::kPsiPlus, B::kPsiPlus}, "Psi- Psi+", "|01>+|10>", "a|01>+b|00>-c|11>-d|10>", "Z", "X"},
    {{B::kPsiPlus, B::kPsiMinus, B::kPsiPlus}, "Psi+ Psi-", "|01>+|10>", "a|01>-b|00>+c|11>-d|10>", "I", "-iY"},
    {{B::kPsiMinus, B::kPsiMinus, B::kPsiPlus}, "Psi- Psi-", "|01>+|10>", "a|01>-b|00>-c|11>+d|10>", "Z", "-iY"},
    {{B::kPsiPlus, B::kPsiPlus, B::kPsiMinus}, "Psi+ Psi+", "|01>-|10>", "a|01>+b|00>-c|11>-d|10>", "Z", "X"},
    {{B::kPsiMinus, B::kPsiPlus, B::kPsiMinus}, "Psi- Psi+", "|01>-|10>", "a|01>+b|00>+c|11>+d|10>", "I", "X"},
    {{B::kPsiPlus, B::kPsiMinus, B::kPsiMinus}, "Psi+ Psi-", "|01>-|10>", "a|01>-b|00>-c|11>+d|10>", "Z", "-iY"},
    {{B::kPsiMinus, B::kPsiMinus, B::kPsiMinus}, "Psi- Psi-", "|01>-|10>", "a|01>-b|00>+c|11>-d|10>", "I", "-iY"},
}};

}  // namespace

std::span<const Table1Row> table1_rows() { return kRows; }

}  // namespace clusterqis
