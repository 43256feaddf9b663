// Copyright 2026 The arrowperm Authors
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

#include "arrowperm/closure.hpp"
#include "arrowperm/error.hpp"
#include "arrowperm/factorize.hpp"
#include "arrowperm/generators.hpp"
#include "arrowperm/group_algebra.hpp"
#include "arrowperm/io.hpp"
#include "arrowperm/matrix.hpp"
#include "arrowperm/realization.hpp"
#include "arrowperm/signed_permutation.hpp"
