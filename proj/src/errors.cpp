/*
 * Copyright 2026 The spinquot Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "spinquot/errors.hpp"

namespace spinquot {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotPermutation: return "NotPermutation";
    case Errc::SymmetryViolated: return "SymmetryViolated";
    case Errc::OddNegativeCount: return "OddNegativeCount";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::MalformedShape: return "MalformedShape";
    case Errc::EntryOutOfRange: return "EntryOutOfRange";
    case Errc::InvalidSchubertIndex: return "InvalidSchubertIndex";
    case Errc::UnsupportedRank: return "UnsupportedRank";
    case Errc::NotFullFlagIndex: return "NotFullFlagIndex";
    case Errc::AsymmetricDualPair: return "AsymmetricDualPair";
    case Errc::EvenCardinality: return "EvenCardinality";
    case Errc::FuelExhausted: return "FuelExhausted";
    case Errc::NotAPfaffianIndex: return "NotAPfaffianIndex";
    case Errc::SingularEvaluationMatrix: return "SingularEvaluationMatrix";
    case Errc::BasisMismatch: return "BasisMismatch";
    case Errc::AmbiguousMatch: return "AmbiguousMatch";
    case Errc::NotConfluent: return "NotConfluent";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace spinquot
