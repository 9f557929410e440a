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

#include "generators.hpp"

#include "deltamip/report.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

using namespace deltamip;

namespace
{

const std::filesystem::path kFixtures = DELTAMIP_FIXTURE_DIR;

std::string
slurp( const std::filesystem::path& path )
{
   std::ifstream input( path );
   std::stringstream buffer;
   buffer << input.rdbuf();
   return buffer.str();
}

std::size_t
count_lines( const std::string& text )
{
   return static_cast<std::size_t>( std::count( text.begin(), text.end(), '\n' ) );
}

} // namespace

TEST_CASE( "summary matches the golden table", "[report]" )
{
   std::ifstream log( kFixtures / "two_runs.jsonl" );
   CHECK( summarize( log ) == slurp( kFixtures / "two_runs.summary.txt" ) );
}

TEST_CASE( "summary rows follow completed runs", "[report]" )
{
   std::string header = summarize( std::string() );
   CHECK( count_lines( header ) == 2 );
   CHECK( header.find( "Original Instance" ) != std::string::npos );
   CHECK( header.find( "MIP Solves" ) != std::string::npos );

   std::string two = summarize( slurp( kFixtures / "two_runs.jsonl" ) );
   CHECK( count_lines( two ) == 4 );
   CHECK( two.rfind( header, 0 ) == 0 );
}

TEST_CASE( "run log records every event", "[report]" )
{
   std::ostringstream out;
   RunLog log( out, "case" );
   ReductionState state;
   state.problem = testing::two_binaries();
   RunTotals totals{ 3, 1, 1, 0.5 };
   log.on_start( state, 1 );
   log.on_solve( 1, 1, SolveRecord{ ModifierKind::Constraint, 0, 1, 1, true, 0.1 } );
   log.on_round( LoopStep{ 1, 1, true }, state, totals );
   log.on_end( state, totals );

   std::string text = out.str();
   REQUIRE( count_lines( text ) == 4 );
   CHECK( text.rfind( R"({"event":"start","case":"case","vars":2,"conss":1,"nonzeros":2,"code":1,"iis":false})", 0 ) == 0 );
   CHECK( text.find( R"("modifier":"constraint")" ) != std::string::npos );
   CHECK( text.find( R"("time":0.5)" ) != std::string::npos );
   CHECK( count_lines( summarize( text ) ) == 3 );
}

TEST_CASE( "time members are stripped", "[report]" )
{
   std::string a = "{\"event\":\"end\",\"solves\":3,\"time\":0.25}\n";
   std::string b = "{\"event\":\"end\",\"solves\":3,\"time\":7.5}\n";
   CHECK( strip_times( a ) == strip_times( b ) );
   CHECK( strip_times( a ) == "{\"event\":\"end\",\"solves\":3}\n" );
   CHECK( strip_times( "plain\n" ) == "plain\n" );

   std::ostringstream out;
   RunLog untimed( out, "x", false );
   ReductionState state;
   untimed.on_end( state, RunTotals{ 1, 0, 0, 3.0 } );
   CHECK( out.str().find( "time" ) == std::string::npos );
}
