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

#include "deltamip/builtin/oracle.hpp"
#include "deltamip/builtin/solver.hpp"
#include "deltamip/solver_interface.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

using namespace deltamip;

namespace
{

const Solution kOptimum{ { "x1", 1.0 }, { "x2", 0.0 } };

SolveOutcome
optimal( double dual, double primal, Solution solution )
{
   SolveOutcome outcome;
   outcome.status = SolveStatus::Optimal;
   outcome.dual_bound = dual;
   outcome.primal_bound = primal;
   outcome.solutions.push_back( std::move( solution ) );
   return outcome;
}

class ThrowingBackend : public SolverBackend
{
 public:
   std::string
   name() const override
   {
      return "throwing";
   }

   SolveOutcome
   solve() override
   {
      throw std::runtime_error( "boom" );
   }
};

} // namespace

TEST_CASE( "dual fail compares against the reference objective", "[solver_interface]" )
{
   Problem problem = testing::two_binaries();
   CHECK( check_dual_fail( optimal( 0.0, 0.0, kOptimum ), problem, kOptimum ) );
   CHECK_FALSE( check_dual_fail( optimal( -1.0, -1.0, kOptimum ), problem, kOptimum ) );
   CHECK_FALSE( check_dual_fail( optimal( -kInfinity, -1.0, kOptimum ), problem, kOptimum ) );
   CHECK_FALSE( check_dual_fail( optimal( -1.0 + 5e-7, -1.0, kOptimum ), problem, kOptimum ) );
}

TEST_CASE( "dual fail is monotone in the bound", "[solver_interface]" )
{
   Problem problem = testing::two_binaries();
   bool seen = false;
   for( double bound = -3.0; bound <= 3.0; bound += 0.125 )
   {
      bool fails = check_dual_fail( optimal( bound, bound, kOptimum ), problem, kOptimum );
      CHECK( ( !seen || fails ) );
      seen = seen || fails;
   }
   CHECK( seen );
}

TEST_CASE( "primal fail flags infeasible solutions and bad rays", "[solver_interface]" )
{
   Problem problem = testing::two_binaries();
   CHECK( check_primal_fail( optimal( -2.0, -2.0, Solution{ { "x1", 1.0 }, { "x2", 1.0 } } ), problem ) );
   CHECK_FALSE( check_primal_fail( optimal( -1.0, -1.0, kOptimum ), problem ) );

   SolveOutcome unbounded;
   unbounded.status = SolveStatus::Unbounded;
   unbounded.ray = Solution{ { "x1", 0.0 }, { "x2", 0.0 } };
   CHECK( check_primal_fail( unbounded, problem ) );
   CHECK( classify_primal( unbounded, problem ) == fail::kRay );

   SolveOutcome empty;
   empty.status = SolveStatus::Optimal;
   CHECK( classify_primal( empty, problem ) == fail::kPrimal );
}

TEST_CASE( "objective fail checks the claimed primal bound", "[solver_interface]" )
{
   Problem problem = testing::two_binaries();
   CHECK( check_objective_fail( optimal( -2.0, -2.0, kOptimum ), problem ) );
   CHECK_FALSE( check_objective_fail( optimal( -1.0, -1.0, kOptimum ), problem ) );
   CHECK_FALSE( check_objective_fail( optimal( -1.0, -1.0000001, kOptimum ), problem ) );
}

TEST_CASE( "evaluate orders codes and honors passcodes", "[solver_interface]" )
{
   Problem problem = testing::two_binaries();
   SolveOutcome timeout;
   timeout.status = SolveStatus::Error;
   timeout.internal_code = fail::kTimeout;
   CHECK( evaluate( timeout, problem, &kOptimum, { fail::kTimeout } ) == 0 );
   CHECK( evaluate( timeout, problem, &kOptimum, {} ) == fail::kTimeout );

   CHECK( evaluate( optimal( 0.0, 0.0, Solution{ { "x1", 0.0 }, { "x2", 0.0 } } ), problem, &kOptimum, {} ) ==
          fail::kDual );
   CHECK( evaluate( optimal( -1.0, -1.0, kOptimum ), problem, &kOptimum, {} ) == 0 );

   SolveOutcome both = optimal( 0.0, 0.0, Solution{ { "x1", 1.0 }, { "x2", 1.0 } } );
   CHECK( evaluate( both, problem, &kOptimum, {} ) == fail::kPrimal );
   CHECK( evaluate( both, problem, &kOptimum, { fail::kPrimal } ) == 0 );

   SolveOutcome limit;
   limit.status = SolveStatus::LimitReached;
   CHECK( evaluate( limit, problem, &kOptimum, {} ) == 0 );

   SolveOutcome error;
   error.status = SolveStatus::Error;
   CHECK( evaluate( error, problem, &kOptimum, {} ) < 0 );

   CHECK( evaluate( optimal( -2.0, -2.0, kOptimum ), problem, nullptr, {} ) == fail::kObjective );
}

TEST_CASE( "infeasibility-only evaluation", "[solver_interface]" )
{
   SolveOutcome infeasible;
   infeasible.status = SolveStatus::Infeasible;
   CHECK( evaluate_iis( infeasible, {} ) == 1 );
   CHECK( evaluate_iis( infeasible, { 1 } ) == 0 );
   SolveOutcome feasible = optimal( 0.0, 0.0, kOptimum );
   CHECK( evaluate_iis( feasible, {} ) == 0 );
}

TEST_CASE( "call_solver maps exceptions to crashes", "[solver_interface]" )
{
   ThrowingBackend backend;
   SolveOutcome outcome = call_solver( backend, testing::two_binaries(), {} );
   CHECK( outcome.status == SolveStatus::Error );
   CHECK( outcome.internal_code == fail::kCrash );
   CHECK( outcome.message.find( "boom" ) != std::string::npos );

   builtin::BuiltinBackend builtin;
   SolveOutcome rejected = call_solver( builtin, testing::two_binaries(), Settings{ { "no/such/key", "1" } } );
   CHECK( rejected.status == SolveStatus::Error );
   CHECK( rejected.internal_code < 0 );
}

TEST_CASE( "builtin backend through the lifecycle", "[solver_interface]" )
{
   Problem problem = testing::two_binaries();
   builtin::BuiltinBackend clean;
   SolveOutcome outcome = call_solver( clean, problem, {} );
   CHECK( outcome.status == SolveStatus::Optimal );
   CHECK( outcome.primal_bound == -1.0 );
   CHECK( evaluate( outcome, problem, &kOptimum, {} ) == 0 );

   builtin::BuiltinBackend faulty( builtin::FaultSpec::parse( "F2" ) );
   SolveOutcome cut = call_solver( faulty, problem, {} );
   CHECK( cut.dual_bound > -1.0 );
   CHECK( evaluate( cut, problem, &kOptimum, {} ) == fail::kDual );
}

TEST_CASE( "fault-free solves never report a bug", "[solver_interface]" )
{
   testing::Rng rng( 41 );
   int checked = 0;
   for( int i = 0; i < 1000; ++i )
   {
      Problem problem = testing::random_integer_problem( rng, 10, 8, 3 );
      builtin::OracleResult oracle = builtin::enumerate_oracle( problem );
      const Solution* reference = oracle.feasible ? &oracle.optima.front() : nullptr;
      builtin::BuiltinBackend backend;
      SolveOutcome outcome = call_solver( backend, problem, {} );
      INFO( "instance " << i );
      CHECK( evaluate( outcome, problem, reference, {} ) == 0 );
      checked += reference != nullptr;
   }
   CHECK( checked > 100 );
}
