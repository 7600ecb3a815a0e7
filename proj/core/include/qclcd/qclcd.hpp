/*
   Copyright 2026 The qclcd Authors

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

#ifndef QCLCD_QCLCD_HPP
#define QCLCD_QCLCD_HPP

#include "qclcd/distance.hpp"
#include "qclcd/error.hpp"
#include "qclcd/factor.hpp"
#include "qclcd/field.hpp"
#include "qclcd/json_io.hpp"
#include "qclcd/lcd_check.hpp"
#include "qclcd/matrix.hpp"
#include "qclcd/oracle.hpp"
#include "qclcd/parse.hpp"
#include "qclcd/poly.hpp"
#include "qclcd/qc_code.hpp"
#include "qclcd/replicate.hpp"
#include "qclcd/search.hpp"

#endif  // QCLCD_QCLCD_HPP
