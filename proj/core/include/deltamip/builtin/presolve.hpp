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

#ifndef DELTAMIP_BUILTIN_PRESOLVE_HPP
#define DELTAMIP_BUILTIN_PRESOLVE_HPP

#include "deltamip/builtin/faults.hpp"
#include "deltamip/model.hpp"

#include <functional>

namespace deltamip::builtin
{

struct PresolveOptions
{
   bool propagation = true;
   bool normalization = true;
   int max_rounds = 20;
   FaultSpec faults;
   Tolerances tolerances;
};

enum class PresolveStatus
{
   Unsolved,
   Solved,
   Infeasible
};

const char*
to_string( PresolveStatus status );

struct PresolveResult
{
   Problem reduced;
   /// Values of the variables removed from the problem.
   Solution fixings;
   PresolveStatus status = PresolveStatus::Unsolved;
   int rounds = 0;
};

/// Rounds of fixed-variable substitution, row normalization, redundancy
/// detection, coefficient tightening on binaries, singleton rows and bound
/// propagation until nothing changes.
PresolveResult
presolve( const Problem& problem, const PresolveOptions& options = {} );

/// Integral upper bound implied by the quotient `value`. The safe variant
/// tries ceil(value - delta) and keeps it when `satisfied` accepts it, else
/// floors; the unsafe one floors value + epsilon.
double
integer_upper_bound( double value, bool safe, const Tolerances& tolerances,
                     const std::function<bool( double )>& satisfied );

double
integer_lower_bound( double value, bool safe, const Tolerances& tolerances,
                     const std::function<bool( double )>& satisfied );

/// Combines a solution of the reduced problem with the presolve fixings.
Solution
postsolve( const PresolveResult& result, const Solution& reduced );

} // namespace deltamip::builtin

#endif
