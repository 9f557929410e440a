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

#include "deltamip/controller.hpp"

#include "deltamip/io.hpp"

#include <algorithm>
#include <chrono>
#include <string>

namespace deltamip
{

std::vector<LoopStep>
run_loop( const StagePlan& plan, const std::vector<ModifierFn>& modifiers,
          const std::function<void( const LoopStep& )>& on_round )
{
   std::vector<LoopStep> trajectory;
   int last_stage = std::min( plan.last_stage, static_cast<int>( modifiers.size() ) );
   long r = 1;
   int s = std::max( plan.initial_stage, 1 );
   while( r <= plan.last_round && s <= last_stage )
   {
      bool changed = false;
      for( int t = 1; t <= s; ++t )
      {
         if( modifiers[static_cast<std::size_t>( t - 1 )]( r, s ) )
            changed = true;
      }
      LoopStep step{ r, s, changed };
      trajectory.push_back( step );
      if( on_round )
         on_round( step );
      if( changed )
         ++r;
      else
         ++s;
   }
   return trajectory;
}

std::vector<ModifierKind>
modifier_sequence( bool iis )
{
   if( iis )
      return { ModifierKind::Constraint, ModifierKind::VarRound };
   return { kModifierOrder.begin(), kModifierOrder.end() };
}

FailCode
verify_initial( SolverBackend& backend, const ReductionState& state, const ModifierContext& context )
{
   if( !state.iis )
   {
      if( !state.reference )
         throw RunAborted( RunAborted::Reason::MissingReference, "a reference solution is required" );
      FeasibilityReport report = is_feasible( state.problem, *state.reference, context.tolerances );
      if( !report )
      {
         std::string what = std::string( to_string( report.kind ) ) + " ";
         if( report.kind == ViolationKind::Constraint )
            what += "'" + state.problem.constraints[report.index].name + "'";
         else
            what += "'" + state.problem.variables[report.index].name + "'";
         throw RunAborted( RunAborted::Reason::InfeasibleReference,
                           "infeasible reference: " + what + " violated by "
                               + format_real( report.violation ) );
      }
   }

   FailCode code = evaluate_pair( backend, state.problem, state.settings, state, context );
   if( code == fail::kPass )
      throw RunAborted( RunAborted::Reason::NoFailure, "no failure reproduced" );
   return code;
}

Snapshot
emit_snapshot( const ReductionState& state, long round, const std::filesystem::path& directory )
{
   std::filesystem::create_directories( directory );
   Snapshot snapshot;
   snapshot.round = round;
   std::string stem = "round_" + std::to_string( round );
   snapshot.instance = directory / ( stem + ".mps" );
   snapshot.settings = directory / ( stem + ".set" );
   write_instance( state.problem, snapshot.instance );
   write_settings( state.settings, snapshot.settings );
   if( state.reference )
   {
      Solution restricted;
      for( const Variable& var : state.problem.variables )
         restricted.set( var.name, state.reference->at( var.name ) );
      snapshot.reference = directory / ( stem + ".sol" );
      write_solution( restricted, *snapshot.reference );
   }
   return snapshot;
}

RunResult
run( const RunConfig& config, SolverBackend& backend, ReductionState initial, RunObserver* observer )
{
   auto start = std::chrono::steady_clock::now();
   RunResult result;
   result.final_state = std::move( initial );
   ReductionState& state = result.final_state;
   RunTotals& totals = result.totals;

   result.initial_code = verify_initial( backend, state, config.context );
   ++totals.solves;
   if( observer != nullptr )
      observer->on_start( state, result.initial_code );

   ModifierContext context = config.context;
   long current_round = 0;
   int current_stage = 0;
   auto forward = config.context.on_solve;
   context.on_solve = [&]( const SolveRecord& record )
   {
      if( forward )
         forward( record );
      if( observer != nullptr )
         observer->on_solve( current_round, current_stage, record );
   };

   std::vector<ModifierFn> modifiers;
   for( ModifierKind kind : modifier_sequence( state.iis ) )
   {
      modifiers.push_back(
          [&, kind]( long round, int stage )
          {
             current_round = round;
             current_stage = stage;
             Problem problem_before = state.problem;
             Settings settings_before = state.settings;
             ModifierStats stats = run_modifier( kind, backend, state, context );
             totals.solves += stats.solves;
             totals.kept += stats.kept;
#ifndef NDEBUG
             if( stats.kept > 0
                 && evaluate_pair( backend, state.problem, state.settings, state, context ) == fail::kPass )
                throw std::logic_error( "committed pair no longer reproduces the failure" );
#endif
             return !( state.problem == problem_before && state.settings == settings_before );
          } );
   }

   auto on_round = [&]( const LoopStep& step )
   {
      if( step.changed )
      {
         totals.rounds = step.round;
         if( config.snapshot_dir )
         {
            Snapshot snapshot = emit_snapshot( state, step.round, *config.snapshot_dir );
            if( config.verify_snapshots )
            {
               ReductionState check = state;
               check.problem = read_instance( snapshot.instance );
               check.settings = read_settings( snapshot.settings );
               snapshot.verified_code
                   = evaluate_pair( backend, check.problem, check.settings, check, config.context );
            }
            result.snapshots.push_back( std::move( snapshot ) );
         }
      }
      totals.seconds = std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();
      if( observer != nullptr )
         observer->on_round( step, state, totals );
   };

   result.trajectory = run_loop( config.stages, modifiers, on_round );

   totals.seconds = std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();
   if( observer != nullptr )
      observer->on_end( state, totals );
   return result;
}

} // namespace deltamip
