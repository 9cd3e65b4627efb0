/*
 * Copyright 2026 The hhblocks Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "hhblocks/permcore/group.hpp"

#include <mutex>

namespace hhb::permcore {

struct PermGroup::Impl {
  std::size_t degree = 1;
  std::vector<Permutation> gens;
  StabChain chain;

  mutable std::once_flag classes_once;
  mutable std::vector<ConjClass> classes;
};

std::vector<ConjClass> compute_classes(const PermGroup &G);

} // namespace hhb::permcore
