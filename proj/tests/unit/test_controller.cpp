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

#include "deltamip/builtin/solver.hpp"
#include "deltamip/controller.hpp"
#include "deltamip/io.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <set>
#include <sstream>

using namespace deltamip;

namespace
{

/// Records the calls and changes the pair on the scripted (round, modifier) pairs.
struct CallLog
{
   std::vector<std::pair<long, int>> calls;
   std::set<std::pair<long, int>> changes;

   std::vector<ModifierFn>
   modifiers( int count )
   {
      std::vector<ModifierFn> result;
      for( int t = 1; t <= count; ++t )
      {
         result.push_back( [this, t]( long round, int )
                           {
                              calls.emplace_back( round, t );
                              return changes.count( { round, t } ) > 0;
                           } );
      }
      return result;
   }
};

ReductionState
state_of( const testing::Instance& instance )
{
   ReductionState state;
   state.problem = instance.problem;
   state.settings = instance.settings;
   state.reference = instance.reference;
   return state;
}

struct CountingObserver : RunObserver
{
   int starts = 0;
   int solves = 0;
   int rounds = 0;
   int ends = 0;

   void
   on_start( const ReductionState&, FailCode ) override
   {
      ++starts;
   }

   void
   on_solve( long, int, const SolveRecord& ) override
   {
      ++solves;
   }

   void
   on_round( const LoopStep&, const ReductionState&, const RunTotals& ) override
   {
      ++rounds;
   }

   void
   on_end( const ReductionState&, const RunTotals& ) override
   {
      ++ends;
   }
};

std::size_t
nonzeros( const Problem& problem )
{
   std::size_t count = 0;
   for( const Constraint& row : problem.constraints )
      count += row.coefficients.size();
   return count;
}

std::string
slurp( const std::filesystem::path& path )
{
   std::ifstream input( path );
   std::stringstream buffer;
   buffer << input.rdbuf();
   return buffer.str();
}

} // namespace

TEST_CASE( "unproductive rounds walk through the stages", "[controller]" )
{
   CallLog log;
   std::vector<LoopStep> trajectory = run_loop( StagePlan{ 1, 9, 5 }, log.modifiers( 9 ) );
   REQUIRE( trajectory.size() == 9 );
   for( int s = 1; s <= 9; ++s )
      CHECK( trajectory[static_cast<std::size_t>( s - 1 )] == LoopStep{ 1, s, false } );
   CHECK( log.calls.size() == 45 );
}

TEST_CASE( "an unchanged round adds the next modifier", "[controller]" )
{
   CallLog log;
   log.changes = { { 1, 2 } };
   std::vector<LoopStep> trajectory = run_loop( StagePlan{ 3, 9, 1 }, log.modifiers( 9 ) );
   REQUIRE( trajectory.size() == 1 );
   CHECK( trajectory[0] == LoopStep{ 1, 3, true } );

   CallLog next;
   next.changes = {};
   std::vector<LoopStep> grown = run_loop( StagePlan{ 3, 4, 5 }, next.modifiers( 9 ) );
   REQUIRE( grown.size() == 2 );
   CHECK( grown[1] == LoopStep{ 1, 4, false } );
   CHECK( next.calls.size() == 3 + 4 );
   CHECK( next.calls.back() == std::pair<long, int>{ 1, 4 } );
}

TEST_CASE( "a changed round repeats the same stage", "[controller]" )
{
   CallLog log;
   log.changes = { { 1, 1 }, { 2, 2 } };
   std::vector<LoopStep> trajectory = run_loop( StagePlan{ 2, 2, 10 }, log.modifiers( 9 ) );
   std::vector<LoopStep> expected{ { 1, 2, true }, { 2, 2, true }, { 3, 2, false } };
   CHECK( trajectory == expected );
}

TEST_CASE( "zero rounds run nothing", "[controller]" )
{
   CallLog log;
   CHECK( run_loop( StagePlan{ 1, 9, 0 }, log.modifiers( 9 ) ).empty() );
   CHECK( log.calls.empty() );
}

TEST_CASE( "the last stage is clamped to the modifier count", "[controller]" )
{
   CallLog log;
   std::vector<LoopStep> trajectory = run_loop( StagePlan{ 1, 9, 10 }, log.modifiers( 2 ) );
   CHECK( trajectory.size() == 2 );
   CHECK( trajectory.back().stage == 2 );
}

TEST_CASE( "modifier sequences", "[controller]" )
{
   CHECK( modifier_sequence( false ).size() == 9 );
   CHECK( modifier_sequence( false ).front() == ModifierKind::Constraint );
   CHECK( modifier_sequence( false ).back() == ModifierKind::ConsRound );
   std::vector<ModifierKind> iis{ ModifierKind::Constraint, ModifierKind::VarRound };
   CHECK( modifier_sequence( true ) == iis );
}

TEST_CASE( "verification refuses pairs that do not fail", "[controller]" )
{
   Problem problem = testing::two_binaries();
   ReductionState state;
   state.problem = problem;
   state.reference = Solution{ { "x1", 1.0 }, { "x2", 0.0 } };

   builtin::BuiltinBackend clean;
   try
   {
      verify_initial( clean, state, {} );
      FAIL( "expected an abort" );
   }
   catch( const RunAborted& aborted )
   {
      CHECK( aborted.reason() == RunAborted::Reason::NoFailure );
      CHECK( std::string( aborted.what() ) == "no failure reproduced" );
   }

   builtin::BuiltinBackend faulty( builtin::FaultSpec::parse( "F2" ) );
   CHECK( verify_initial( faulty, state, {} ) == fail::kDual );

   state.reference = Solution{ { "x1", 1.0 }, { "x2", 1.0 } };
   try
   {
      verify_initial( faulty, state, {} );
      FAIL( "expected an abort" );
   }
   catch( const RunAborted& aborted )
   {
      CHECK( aborted.reason() == RunAborted::Reason::InfeasibleReference );
      CHECK( std::string( aborted.what() ).rfind( "infeasible reference", 0 ) == 0 );
   }

   state.reference.reset();
   CHECK_THROWS_AS( verify_initial( faulty, state, {} ), RunAborted );
}

TEST_CASE( "iis verification needs no reference", "[controller]" )
{
   ReductionState state;
   state.problem = testing::planted_iis( 3, 5 );
   state.iis = true;
   builtin::BuiltinBackend backend;
   CHECK( verify_initial( backend, state, {} ) == 1 );
}

TEST_CASE( "snapshots are named by round and overwritten", "[controller]" )
{
   std::filesystem::path dir = testing::scratch_directory( "snapshots" );
   ReductionState state = state_of( testing::vanishing_side_instance() );
   Snapshot first = emit_snapshot( state, 1, dir );
   CHECK( first.instance == dir / "round_1.mps" );
   CHECK( first.settings == dir / "round_1.set" );
   CHECK( read_instance( first.instance ) == state.problem );
   REQUIRE( first.reference.has_value() );
   CHECK( read_solution( *first.reference, state.problem ).solution == *state.reference );

   state.problem.constraints.pop_back();
   state.settings.set( "limits/nodes", "5" );
   Snapshot again = emit_snapshot( state, 1, dir );
   CHECK( read_instance( again.instance ) == state.problem );
   CHECK( read_settings( again.settings ) == state.settings );
   CHECK( slurp( again.settings ).find( "limits/nodes" ) != std::string::npos );
   std::filesystem::remove_all( dir );
}

TEST_CASE( "a planted run shrinks monotonically", "[controller]" )
{
   std::filesystem::path dir = testing::scratch_directory( "controller-run" );
   testing::Instance instance = testing::planted_vanishing_side( 5, 40, 20 );
   builtin::BuiltinBackend backend( builtin::FaultSpec::parse( "F4" ) );

   RunConfig config;
   config.context.nbatches = 10;
   config.snapshot_dir = dir;
   config.verify_snapshots = true;
   CountingObserver observer;
   RunResult result = run( config, backend, state_of( instance ), &observer );

   CHECK( result.initial_code == fail::kPrimal );
   CHECK( observer.starts == 1 );
   CHECK( observer.ends == 1 );
   CHECK( observer.rounds == static_cast<int>( result.trajectory.size() ) );
   CHECK( static_cast<std::size_t>( observer.solves ) + 1 == result.totals.solves );
   CHECK( result.final_state.problem.nvars() < instance.problem.nvars() );
   CHECK( is_feasible( result.final_state.problem, *result.final_state.reference ) );

   REQUIRE( !result.snapshots.empty() );
   CHECK( result.snapshots.size() == static_cast<std::size_t>( result.totals.rounds ) );
   std::size_t vars = instance.problem.nvars();
   std::size_t conss = instance.problem.nconss();
   std::size_t nnz = nonzeros( instance.problem );
   for( std::size_t k = 0; k < result.snapshots.size(); ++k )
   {
      const Snapshot& snapshot = result.snapshots[k];
      CHECK( snapshot.round == static_cast<long>( k + 1 ) );
      CHECK( snapshot.instance.filename() == "round_" + std::to_string( k + 1 ) + ".mps" );
      REQUIRE( snapshot.verified_code.has_value() );
      CHECK( *snapshot.verified_code > 0 );
      Problem problem = read_instance( snapshot.instance );
      CHECK( problem.nvars() <= vars );
      CHECK( problem.nconss() <= conss );
      CHECK( nonzeros( problem ) <= nnz );
      vars = problem.nvars();
      conss = problem.nconss();
      nnz = nonzeros( problem );
   }
   std::filesystem::remove_all( dir );
}

TEST_CASE( "a run without rounds keeps the pair", "[controller]" )
{
   testing::Instance instance = testing::vanishing_side_instance();
   builtin::BuiltinBackend backend( builtin::FaultSpec::parse( "F4" ) );
   RunConfig config;
   config.stages.last_round = 0;
   RunResult result = run( config, backend, state_of( instance ) );
   CHECK( result.trajectory.empty() );
   CHECK( result.snapshots.empty() );
   CHECK( result.final_state.problem == instance.problem );
   CHECK( result.totals.solves == 1 );
}
