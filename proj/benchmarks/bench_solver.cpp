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

#include "instances.hpp"

#include "deltamip/builtin/lp.hpp"
#include "deltamip/builtin/presolve.hpp"
#include "deltamip/builtin/solver.hpp"

#include <benchmark/benchmark.h>

using namespace deltamip;

static void
BM_LpRelaxation( benchmark::State& state )
{
   std::size_t n = std::size_t( state.range( 0 ) );
   builtin::LpData lp = builtin::make_lp( bench::covering( n, n / 2, 2 ) );
   for( auto _ : state )
      benchmark::DoNotOptimize( builtin::solve_lp( lp ) );
}
BENCHMARK( BM_LpRelaxation )->Arg( 20 )->Arg( 60 )->Arg( 120 );

static void
BM_Presolve( benchmark::State& state )
{
   std::size_t n = std::size_t( state.range( 0 ) );
   Problem problem = bench::covering( n, n, 3 );
   for( auto _ : state )
      benchmark::DoNotOptimize( builtin::presolve( problem ) );
}
BENCHMARK( BM_Presolve )->Arg( 100 )->Arg( 1000 );

static void
BM_BranchAndBound( benchmark::State& state )
{
   std::size_t n = std::size_t( state.range( 0 ) );
   Problem problem = bench::covering( n, n / 2, 4 );
   for( auto _ : state )
      benchmark::DoNotOptimize( builtin::branch_and_bound( problem, builtin::SolverSettings{} ) );
}
BENCHMARK( BM_BranchAndBound )->Arg( 10 )->Arg( 20 )->Unit( benchmark::kMillisecond );
