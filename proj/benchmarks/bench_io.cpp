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

#include "deltamip/io.hpp"

#include <benchmark/benchmark.h>

#include <sstream>

using namespace deltamip;

static void
BM_WriteInstance( benchmark::State& state )
{
   Problem problem = bench::covering( std::size_t( state.range( 0 ) ), std::size_t( state.range( 0 ) ), 1 );
   for( auto _ : state )
      benchmark::DoNotOptimize( format_instance( problem ) );
   state.SetItemsProcessed( state.iterations() * state.range( 0 ) );
}
BENCHMARK( BM_WriteInstance )->Arg( 1000 )->Arg( 10000 );

static void
BM_ReadInstance( benchmark::State& state )
{
   std::string text = format_instance( bench::covering( std::size_t( state.range( 0 ) ), std::size_t( state.range( 0 ) ), 1 ) );
   for( auto _ : state )
   {
      std::istringstream input( text );
      benchmark::DoNotOptimize( read_instance( input ) );
   }
   state.SetBytesProcessed( state.iterations() * std::int64_t( text.size() ) );
}
BENCHMARK( BM_ReadInstance )->Arg( 1000 )->Arg( 10000 );
