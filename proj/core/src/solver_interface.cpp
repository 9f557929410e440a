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

#include "deltamip/solver_interface.hpp"

#include "deltamip/io.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>

namespace deltamip
{

const char*
to_string( SolveStatus status )
{
   switch( status )
   {
   case SolveStatus::Optimal:
      return "optimal";
   case SolveStatus::Infeasible:
      return "infeasible";
   case SolveStatus::Unbounded:
      return "unbounded";
   case SolveStatus::LimitReached:
      return "limit";
   case SolveStatus::Error:
      return "error";
   }
   return "unknown";
}

void
SolverBackend::setup( const Problem& problem, const Settings& settings, const SolveLimits& limits )
{
   problem_ = problem;
   settings_ = settings;
   limits_ = limits;
   do_setup();
}

void
SolverBackend::write( const std::filesystem::path& instance,
                      const std::filesystem::path& settings ) const
{
   write_instance( problem_, instance );
   write_settings( settings_, settings );
}

namespace
{

SolveOutcome
error_outcome( FailCode code, std::string message )
{
   SolveOutcome outcome;
   outcome.status = SolveStatus::Error;
   outcome.internal_code = code;
   outcome.message = std::move( message );
   return outcome;
}

double
scaled( double value, const Tolerances& tolerances )
{
   return tolerances.delta * std::max( 1.0, std::abs( value ) );
}

} // namespace

SolveOutcome
call_solver( SolverBackend& backend, const Problem& problem, const Settings& settings,
             const SolveLimits& limits )
{
   try
   {
      backend.setup( problem, settings, limits );
   }
   catch( const std::exception& error )
   {
      return error_outcome( fail::kCrash, std::string( "setup rejected: " ) + error.what() );
   }

   try
   {
      SolveOutcome outcome = backend.solve();
      if( outcome.status == SolveStatus::Error && outcome.internal_code >= 0 )
         outcome.internal_code = fail::kCrash;
      return outcome;
   }
   catch( const std::exception& error )
   {
      return error_outcome( fail::kCrash, error.what() );
   }
}

bool
check_dual_fail( const SolveOutcome& outcome, const Problem& problem, const Solution& reference,
                 const Tolerances& tolerances )
{
   double dual = outcome.status == SolveStatus::Infeasible ? kInfinity : outcome.dual_bound;
   if( std::isnan( dual ) )
      return false;
   double value = evaluate_objective( problem, reference );
   return dual > value + scaled( value, tolerances );
}

FailCode
classify_primal( const SolveOutcome& outcome, const Problem& problem, const Tolerances& tolerances )
{
   if( outcome.status == SolveStatus::Unbounded && outcome.ray
       && !verify_ray( problem, *outcome.ray, tolerances ) )
      return fail::kRay;

   if( outcome.status == SolveStatus::Optimal && outcome.solutions.empty() )
      return fail::kPrimal;

   for( const Solution& solution : outcome.solutions )
   {
      if( !is_feasible( problem, solution, tolerances ) )
         return fail::kPrimal;
   }
   return fail::kPass;
}

bool
check_primal_fail( const SolveOutcome& outcome, const Problem& problem, const Tolerances& tolerances )
{
   return classify_primal( outcome, problem, tolerances ) != fail::kPass;
}

bool
check_objective_fail( const SolveOutcome& outcome, const Problem& problem,
                      const Tolerances& tolerances )
{
   if( outcome.solutions.empty() || std::isnan( outcome.primal_bound ) )
      return false;
   double value = evaluate_objective( problem, outcome.solutions.front() );
   return outcome.primal_bound < value - scaled( value, tolerances );
}

FailCode
evaluate( const SolveOutcome& outcome, const Problem& problem, const Solution* reference,
          const Passcodes& passcodes, const Tolerances& tolerances )
{
   auto finish = [&]( FailCode code ) { return passcodes.count( code ) != 0 ? fail::kPass : code; };

   if( outcome.internal_code < 0 )
      return finish( outcome.internal_code );
   if( outcome.status == SolveStatus::Error )
      return finish( fail::kCrash );

   FailCode primal = classify_primal( outcome, problem, tolerances );
   if( primal != fail::kPass )
      return finish( primal );

   if( reference != nullptr && check_dual_fail( outcome, problem, *reference, tolerances ) )
      return finish( fail::kDual );

   if( check_objective_fail( outcome, problem, tolerances ) )
      return finish( fail::kObjective );

   return fail::kPass;
}

FailCode
evaluate_iis( const SolveOutcome& outcome, const Passcodes& passcodes )
{
   FailCode code = outcome.status == SolveStatus::Infeasible ? fail::kDual : fail::kPass;
   return passcodes.count( code ) != 0 ? fail::kPass : code;
}

} // namespace deltamip
