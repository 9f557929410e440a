/* * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * */
/*                                                                           */
/*               This file is part of the program and library                */
/*                            deltamip                                       */
/*                                                                           */
/*  Licensed under the Apache License, Version 2.0 (the "License");          */
/*  you may not use this file except in compliance with the License.         */
/*  You may obtain a copy of the License at                                  */
/*                                                                           */
/*      http://www.apache.org/licenses/LICENSE-2.0                           */
/*                                                                           */
/*  Unless required by applicable law or agreed to in writing, software      */
/*  distributed under the License is distributed on an "AS IS" BASIS,        */
/*  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. */
/*  See the License for the specific language governing permissions and      */
/*  limitations under the License.                                           */
/*                                                                           */
/* * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * */

#ifndef DELTAMIP_BUILTIN_ORACLE_HPP
#define DELTAMIP_BUILTIN_ORACLE_HPP

#include "deltamip/model.hpp"

#include <vector>

namespace deltamip::builtin
{

struct OracleResult
{
   bool feasible = false;
   double value = kInfinity;
   /// Every assignment attaining `value`, in enumeration order.
   std::vector<Solution> optima;
};

inline constexpr double kOracleMaxPoints = 1e6;

/// Exhaustive scan of all integer points of a bounded pure-integer problem.
/// Throws std::invalid_argument if a variable is continuous or unbounded or
/// the box holds more than kOracleMaxPoints points.
OracleResult
enumerate_oracle( const Problem& problem, const Tolerances& tolerances = {} );

} // namespace deltamip::builtin

#endif
