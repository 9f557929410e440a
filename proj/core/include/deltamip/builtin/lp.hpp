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

#ifndef DELTAMIP_BUILTIN_LP_HPP
#define DELTAMIP_BUILTIN_LP_HPP

#include "deltamip/model.hpp"

#include <cstddef>
#include <vector>

namespace deltamip::builtin
{

/// Dense LP  min cost*x  s.t.  row_lower <= A x <= row_upper,  lower <= x <= upper.
struct LpData
{
   std::size_t ncols = 0;
   std::size_t nrows = 0;
   /// Row-major nrows x ncols.
   std::vector<double> matrix;
   std::vector<double> row_lower;
   std::vector<double> row_upper;
   std::vector<double> lower;
   std::vector<double> upper;
   std::vector<double> cost;

   double&
   at( std::size_t row, std::size_t col )
   {
      return matrix[row * ncols + col];
   }

   double
   at( std::size_t row, std::size_t col ) const
   {
      return matrix[row * ncols + col];
   }

   void
   add_row( const std::vector<double>& coefficients, double lhs, double rhs );
};

LpData
make_lp( const Problem& problem );

enum class LpStatus
{
   Optimal,
   Infeasible,
   Unbounded,
   IterationLimit
};

struct LpResult
{
   LpStatus status = LpStatus::Infeasible;
   /// cost*x, without any objective offset.
   double objective = 0.0;
   std::vector<double> x;
   /// Improving direction when status is Unbounded.
   std::vector<double> ray;
   long iterations = 0;
};

struct LpOptions
{
   double pricing_tolerance = 1e-9;
   double pivot_tolerance = 1e-11;
   double feasibility_tolerance = 1e-7;
   long max_iterations = 0; ///< 0 picks a limit from the problem size
};

/// Two-phase bounded primal simplex on a dense tableau with Bland's rule.
LpResult
solve_lp( const LpData& lp, const LpOptions& options = {} );

} // namespace deltamip::builtin

#endif
