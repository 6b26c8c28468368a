// Copyright 2026 The qcompare Authors
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

// Umbrella header.

#ifndef QCOMPARE_QCOMPARE_HPP_
#define QCOMPARE_QCOMPARE_HPP_

#include "qcompare/asymmetric.hpp"
#include "qcompare/choi.hpp"
#include "qcompare/ensembles.hpp"
#include "qcompare/errors.hpp"
#include "qcompare/matcore.hpp"
#include "qcompare/montecarlo.hpp"
#include "qcompare/symmetric.hpp"

#endif  // QCOMPARE_QCOMPARE_HPP_
