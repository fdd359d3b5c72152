/*
   Copyright 2026 The bicanon Authors

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

#ifndef BICANON_BICANON_HPP
#define BICANON_BICANON_HPP

#include "errors.hpp"
#include "rational.hpp"
#include "cyclotomic.hpp"
#include "mpoly.hpp"
#include "ratfunc.hpp"
#include "expr_parser.hpp"
#include "cover_ring.hpp"
#include "birational.hpp"
#include "builtin_maps.hpp"
#include "qaut.hpp"
#include "biform.hpp"
#include "lattice.hpp"
#include "lefschetz.hpp"
#include "classification.hpp"
#include "moduli.hpp"
#include "io.hpp"
#include "verify.hpp"

#endif
