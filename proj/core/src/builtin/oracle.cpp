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

#include "deltamip/builtin/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace deltamip::builtin
{

OracleResult
enumerate_oracle( const Problem& problem, const Tolerances& tolerances )
{
   std::size_t n = problem.nvars();
   std::vector<double> lower( n );
   std::vector<double> upper( n );
   double volume = 1.0;
   for( std::size_t j = 0; j < n; ++j )
   {
      const Variable& var = problem.variables[j];
      if( !var.is_integer() )
         throw std::invalid_argument( "oracle needs integer variables, '" + var.name + "' is continuous" );
      if( !std::isfinite( var.lower ) || !std::isfinite( var.upper ) )
         throw std::invalid_argument( "oracle needs finite bounds on '" + var.name + "'" );
      lower[j] = std::ceil( var.lower - tolerances.delta );
      upper[j] = std::floor( var.upper + tolerances.delta );
      volume *= std::max( 0.0, upper[j] - lower[j] + 1.0 );
      if( volume > kOracleMaxPoints )
         throw std::invalid_argument( "oracle box exceeds the point limit" );
   }

   OracleResult result;
   if( volume == 0.0 )
      return result;

   std::vector<double> point = lower;
   while( true )
   {
      Solution candidate = from_dense( problem, point );
      if( is_feasible( problem, candidate, tolerances ) )
      {
         double value = evaluate_objective( problem, candidate );
         double scale = 1e-9 * std::max( 1.0, std::abs( value ) );
         if( !result.feasible || value < result.value - scale )
         {
            result.feasible = true;
            result.value = value;
            result.optima.clear();
            result.optima.push_back( std::move( candidate ) );
         }
         else if( value <= result.value + scale )
            result.optima.push_back( std::move( candidate ) );
      }

      std::size_t j = 0;
      while( j < n && point[j] >= upper[j] )
      {
         point[j] = lower[j];
         ++j;
      }
      if( j == n )
         break;
      point[j] += 1.0;
   }
   return result;
}

} // namespace deltamip::builtin
