// SPDX-License-Identifier: Apache-2.0
//
// swipt-gbd: robust secure SWIPT resource allocation for distributed antennas
// Copyright (C) 2026 The swipt-gbd authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include "swipt/conic/program.hpp"

namespace swipt::conic {

// [[Re A, -Im A], [Im A, Re A]]; PSD iff A is, with log det doubled.
Mat real_embed(const CMat& a);
// Inverse of real_embed for matrices with that block structure.
CMat real_unembed(const Mat& r);
// Complex dual D of a real-embedded dual Z = [[P, Q], [Q^T, R]], chosen so that
// Tr(real_embed(A) Z) = 2 Re Tr(A D) for every Hermitian A.
CMat dual_from_real(const Mat& z);

// Plain-text sparse dump of a program: variable groups, objective, and every
// constraint as (row, col, value) triplets with LMIs in real-embedded form.
std::string dump_sparse(const ConicProgram& p);

}  // namespace swipt::conic
