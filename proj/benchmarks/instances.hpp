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

#ifndef DELTAMIP_BENCHMARKS_INSTANCES_HPP
#define DELTAMIP_BENCHMARKS_INSTANCES_HPP

#include "deltamip/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>

namespace deltamip::bench
{

/// Sparse covering program with `nvars` general integers; x = 1 is feasible.
inline Problem
covering( std::size_t nvars, std::size_t nconss, std::uint64_t seed )
{
   std::mt19937_64 rng( seed );
   std::uniform_int_distribution<int> cost( 1, 9 );
   std::uniform_int_distribution<std::size_t> column( 0, nvars - 1 );
   std::uniform_int_distribution<int> value( 1, 5 );
   Problem problem;
   problem.name = "covering";
   for( std::size_t j = 0; j < nvars; ++j )
      problem.variables.push_back( Variable{ "x" + std::to_string( j ), 0.0, 3.0, double( cost( rng ) ), VarType::Integer } );
   for( std::size_t i = 0; i < nconss; ++i )
   {
      Constraint row{ "c" + std::to_string( i ), {}, 0.0, kInfinity };
      double sum = 0.0;
      for( int k = 0; k < 4; ++k )
      {
         std::size_t j = column( rng );
         bool seen = false;
         for( const Coefficient& entry : row.coefficients )
            seen = seen || entry.index == j;
         if( seen )
            continue;
         double a = value( rng );
         row.coefficients.push_back( { j, a } );
         sum += a;
      }
      std::sort( row.coefficients.begin(), row.coefficients.end(),
                 []( const Coefficient& a, const Coefficient& b ) { return a.index < b.index; } );
      row.lhs = std::floor( sum / 2.0 );
      problem.constraints.push_back( std::move( row ) );
   }
   return problem;
}

inline Solution
all_ones( const Problem& problem )
{
   Solution solution;
   for( const Variable& var : problem.variables )
      solution.set( var.name, 1.0 );
   return solution;
}

} // namespace deltamip::bench

#endif
