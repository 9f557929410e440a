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

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

using namespace deltamip;
using namespace deltamip::builtin;

namespace
{

SolveOutcome
solve( const Problem& problem, const Settings& settings = {}, const FaultSpec& faults = {} )
{
   BuiltinBackend backend( faults );
   return call_solver( backend, problem, settings );
}

SolveOutcome
without_time( SolveOutcome outcome )
{
   outcome.statistics.seconds = 0.0;
   return outcome;
}

/// Knapsack with a fractional relaxation so branching is needed.
Problem
knapsack()
{
   Problem problem;
   const double weight[] = { 12, 7, 11, 8, 9, 6, 13, 5 };
   const double value[] = { 24.5, 13.25, 23, 15.75, 16, 11.5, 25.25, 9 };
   Constraint row{ "cap", {}, -kInfinity, 30.0 };
   for( std::size_t j = 0; j < 8; ++j )
   {
      problem.variables.push_back( Variable{ "k" + std::to_string( j ), 0.0, 1.0, -value[j], VarType::Integer } );
      row.coefficients.push_back( { j, weight[j] } );
   }
   problem.constraints.push_back( row );
   return problem;
}

} // namespace

TEST_CASE( "solves the two-binary program", "[builtin_solver]" )
{
   SolveOutcome outcome = solve( testing::two_binaries() );
   REQUIRE( outcome.status == SolveStatus::Optimal );
   CHECK( outcome.primal_bound == -1.0 );
   CHECK( outcome.dual_bound == -1.0 );
   REQUIRE( !outcome.solutions.empty() );
   CHECK( outcome.solutions[0] == Solution{ { "x1", 1.0 }, { "x2", 0.0 } } );
}

TEST_CASE( "objective cut from an interior point cuts off the optimum", "[builtin_solver]" )
{
   Problem problem = testing::two_binaries();
   Solution optimum{ { "x1", 1.0 }, { "x2", 0.0 } };
   SolveOutcome outcome = solve( problem, {}, FaultSpec::parse( "F2" ) );
   CHECK( outcome.dual_bound > -1.0 );
   CHECK( evaluate( outcome, problem, &optimum, {} ) == fail::kDual );

   SolveOutcome off = solve( problem, Settings{ { "separation/objcut", "false" } }, FaultSpec::parse( "F2" ) );
   CHECK( evaluate( off, problem, &optimum, {} ) == 0 );
}

TEST_CASE( "presolve-solved instances lose their solution under F5", "[builtin_solver]" )
{
   testing::Instance instance = testing::fault_family( Fault::F5, 3 );
   SolveOutcome clean = solve( instance.problem );
   REQUIRE( clean.status == SolveStatus::Optimal );
   CHECK( clean.solutions.size() == 1 );

   SolveOutcome faulty = solve( instance.problem, {}, FaultSpec::parse( "F5" ) );
   CHECK( faulty.status == SolveStatus::Optimal );
   CHECK( faulty.solutions.empty() );
   CHECK( evaluate( faulty, instance.problem, &instance.reference, {} ) == fail::kPrimal );
}

TEST_CASE( "dual inference instance matches the frozen optimum", "[builtin_solver]" )
{
   for( bool integer : { false, true } )
   {
      SolveOutcome outcome = solve( testing::dual_infer_instance( integer ) );
      REQUIRE( outcome.status == SolveStatus::Optimal );
      CHECK( outcome.primal_bound == Catch::Approx( 20000.0 ).epsilon( 1e-9 ) );
   }
}

TEST_CASE( "branching finds the knapsack optimum", "[builtin_solver]" )
{
   Problem problem = knapsack();
   SolveOutcome outcome = solve( problem );
   REQUIRE( outcome.status == SolveStatus::Optimal );
   CHECK( outcome.primal_bound == -60.75 );
   CHECK( outcome.statistics.nodes > 1 );

   SolveOutcome first = solve( problem, Settings{ { "branching/rule", "first" }, { "presolve/enabled", "false" } } );
   CHECK( first.primal_bound == -60.75 );
   SolveOutcome seeded = solve( problem, Settings{ { "randomization/seed", "7" } } );
   CHECK( seeded.primal_bound == -60.75 );
}

TEST_CASE( "identical inputs give identical outcomes", "[builtin_solver]" )
{
   Problem problem = knapsack();
   Settings settings{ { "randomization/seed", "3" } };
   CHECK( without_time( solve( problem, settings ) ) == without_time( solve( problem, settings ) ) );
}

TEST_CASE( "node limit stops the search", "[builtin_solver]" )
{
   SolveOutcome outcome = solve( knapsack(), Settings{ { "limits/nodes", "1" }, { "presolve/enabled", "false" } } );
   CHECK( outcome.status == SolveStatus::LimitReached );
   CHECK( outcome.dual_bound <= -60.75 );
   CHECK( evaluate( outcome, knapsack(), nullptr, {} ) == 0 );
}

TEST_CASE( "infeasible and unbounded instances", "[builtin_solver]" )
{
   Problem infeasible = testing::two_binaries();
   infeasible.constraints[0].lhs = 3.0;
   infeasible.constraints[0].rhs = kInfinity;
   for( const char* presolve : { "true", "false" } )
   {
      SolveOutcome outcome = solve( infeasible, Settings{ { "presolve/enabled", presolve } } );
      CHECK( outcome.status == SolveStatus::Infeasible );
      CHECK( outcome.dual_bound == kInfinity );
   }

   Problem open;
   open.variables.push_back( Variable{ "x", 0.0, kInfinity, -1.0, VarType::Integer } );
   open.variables.push_back( Variable{ "y", 0.0, 3.0, 0.0, VarType::Continuous } );
   open.constraints.push_back( Constraint{ "r", { { 0, 1.0 }, { 1, -1.0 } }, -1.0, kInfinity } );
   SolveOutcome outcome = solve( open );
   REQUIRE( outcome.status == SolveStatus::Unbounded );
   REQUIRE( outcome.ray.has_value() );
   CHECK( verify_ray( open, *outcome.ray ) );
   CHECK( evaluate( outcome, open, nullptr, {} ) == 0 );
}

TEST_CASE( "settings are validated", "[builtin_solver]" )
{
   SolverSettings settings;
   CHECK_THROWS_AS( settings.apply( Settings{ { "unknown/key", "1" } } ), std::invalid_argument );
   CHECK_THROWS_AS( settings.apply( Settings{ { "presolve/enabled", "maybe" } } ), std::invalid_argument );
   CHECK_THROWS_AS( settings.apply( Settings{ { "branching/rule", "random" } } ), std::invalid_argument );
   settings.apply( Settings{ { "fault/f3", "true" }, { "presolve/maxrounds", "-1" } } );
   CHECK( settings.faults.has( Fault::F3 ) );
   CHECK( settings.presolve_rounds > 20 );
   const auto& keys = SolverSettings::keys();
   CHECK( std::find( keys.begin(), keys.end(), "presolve/enabled" ) != keys.end() );
   CHECK( std::find( keys.begin(), keys.end(), "limits/time" ) != keys.end() );
}

TEST_CASE( "settings overlay the backend defaults", "[builtin_solver]" )
{
   BuiltinBackend backend( FaultSpec::parse( "F4" ) );
   backend.setup( testing::two_binaries(), Settings{ { "fault/f4", "false" } }, {} );
   CHECK_FALSE( backend.effective_settings().faults.has( Fault::F4 ) );
   backend.setup( testing::two_binaries(), Settings{}, {} );
   CHECK( backend.effective_settings().faults.has( Fault::F4 ) );
}
