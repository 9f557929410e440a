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

#include "deltamip/modifiers.hpp"

#include <benchmark/benchmark.h>

using namespace deltamip;

static void
BM_EnumerateConstraints( benchmark::State& state )
{
   Problem problem = bench::covering( 1000, std::size_t( state.range( 0 ) ), 5 );
   Solution reference = bench::all_ones( problem );
   for( auto _ : state )
      benchmark::DoNotOptimize(
         enumerate_candidates( ModifierKind::Constraint, problem, {}, {}, &reference ) );
}
BENCHMARK( BM_EnumerateConstraints )->Arg( 10000 )->Arg( 100000 );

static void
BM_ApplyBatch( benchmark::State& state )
{
   Problem problem = bench::covering( 1000, 100000, 6 );
   Solution reference = bench::all_ones( problem );
   std::vector<Batch> batches = plan_batches(
      enumerate_candidates( ModifierKind::Constraint, problem, {}, {}, &reference ), std::size_t( state.range( 0 ) ) );
   for( auto _ : state )
      benchmark::DoNotOptimize( apply_batch( problem, {}, batches.front(), &reference ) );
}
BENCHMARK( BM_ApplyBatch )->Arg( 100 )->Arg( 1000 )->Unit( benchmark::kMillisecond );

static void
BM_EnumerateFixings( benchmark::State& state )
{
   Problem problem = bench::covering( std::size_t( state.range( 0 ) ), std::size_t( state.range( 0 ) ), 7 );
   Solution reference = bench::all_ones( problem );
   for( auto _ : state )
      benchmark::DoNotOptimize( enumerate_candidates( ModifierKind::Fixing, problem, {}, {}, &reference ) );
}
BENCHMARK( BM_EnumerateFixings )->Arg( 1000 )->Arg( 10000 );
