/*
   Copyright 2026 The qweyl Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QWEYL_QWEYL_HPP
#define QWEYL_QWEYL_HPP

#include "errors.hpp"
#include "rational.hpp"
#include "laurent.hpp"
#include "cyclo.hpp"
#include "scalars.hpp"
#include "weyl.hpp"
#include "expr.hpp"
#include "center.hpp"
#include "poisson.hpp"
#include "morphisms.hpp"
#include "hatmap.hpp"
#include "matrep.hpp"
#include "json_io.hpp"

#endif  // QWEYL_QWEYL_HPP
