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

#include "deltamip/model.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace deltamip;
using Catch::Approx;

namespace
{

Problem
single_row( double coefficient, double lower, double upper )
{
   Problem problem;
   problem.variables.push_back( Variable{ "x", lower, upper, 0.0, VarType::Continuous } );
   problem.constraints.push_back( Constraint{ "r", { { 0, coefficient } }, -kInfinity, kInfinity } );
   return problem;
}

} // namespace

TEST_CASE( "activity sums the stored entries", "[model]" )
{
   Problem problem = testing::two_binaries();
   CHECK( activity( problem, 0, Solution{ { "x1", 1.0 }, { "x2", 0.0 } } ) == 1.0 );

   Problem empty;
   empty.constraints.push_back( Constraint{ "e", {}, -kInfinity, 1.0 } );
   CHECK( activity( empty, 0, Solution{} ) == 0.0 );

   Problem infer = testing::dual_infer_instance();
   Solution point{ { "x0", 1.0 }, { "x1", 1.0 }, { "x2", 1.0 }, { "x3", 0.0 }, { "x4", 0.0 } };
   double reverse = 0.0;
   const auto& entries = infer.constraints[1].coefficients;
   for( auto it = entries.rbegin(); it != entries.rend(); ++it )
      reverse += it->value * point.at( infer.variables[it->index].name );
   CHECK( activity( infer, 1, point ) == 1.0 );
   CHECK( reverse == 1.0 );
}

TEST_CASE( "activity rejects unknown variables", "[model]" )
{
   Problem problem = testing::two_binaries();
   CHECK_THROWS_AS( activity( problem, 0, Solution{ { "x1", 1.0 } } ), ModelError );
}

TEST_CASE( "relative violation uses the scaled side", "[model]" )
{
   Problem problem = testing::two_binaries();
   CHECK( relative_violation( problem, 0, Solution{ { "x1", 1.0 }, { "x2", 1.0 } } ) == Approx( 0.5 ) );
   CHECK( relative_violation( problem, 0, Solution{ { "x1", 1.0 }, { "x2", 0.0 } } ) == 0.0 );
   CHECK( relative_violation( -kInfinity, 123.0, kInfinity ) == 0.0 );
   CHECK( relative_violation( 10.0, 4.0, kInfinity ) == Approx( 0.6 ) );
}

TEST_CASE( "feasibility report names the worst offender", "[model]" )
{
   Problem problem = testing::two_binaries();
   CHECK( is_feasible( problem, Solution{ { "x1", 1.0 }, { "x2", 0.0 } } ) );

   FeasibilityReport report = is_feasible( problem, Solution{ { "x1", 1.0 }, { "x2", 1.0 } } );
   CHECK_FALSE( report.feasible );
   CHECK( report.kind == ViolationKind::Constraint );
   CHECK( report.index == 0 );
   CHECK( report.violation == Approx( 0.5 ) );

   CHECK( is_feasible( Problem{}, Solution{} ) );

   CHECK( is_feasible( problem, Solution{ { "x1", 0.5 }, { "x2", 0.0 } } ).kind == ViolationKind::Integrality );
   CHECK( is_feasible( problem, Solution{ { "x1", 2.0 }, { "x2", -1.0 } } ).kind == ViolationKind::Bound );
   CHECK( is_feasible( problem, Solution{ { "x1", 1.0 } } ).kind == ViolationKind::Missing );
}

TEST_CASE( "objective evaluation adds the offset", "[model]" )
{
   Problem problem = testing::two_binaries();
   CHECK( evaluate_objective( problem, Solution{ { "x1", 1.0 }, { "x2", 0.0 } } ) == -1.0 );

   Problem constant;
   constant.variables.push_back( Variable{ "y", 0.0, 1.0, 0.0, VarType::Continuous } );
   constant.offset = 3.5;
   CHECK( evaluate_objective( constant, Solution{ { "y", 0.7 } } ) == 3.5 );

   Problem infer = testing::dual_infer_instance();
   Solution zero{ { "x0", 0.0 }, { "x1", 0.0 }, { "x2", 0.0 }, { "x3", 0.0 }, { "x4", 0.0 } };
   CHECK( evaluate_objective( infer, zero ) == 0.0 );
   CHECK_THROWS_AS( evaluate_objective( infer, Solution{ { "x1", 1.0 } } ), ModelError );
}

TEST_CASE( "activity bounds exclude one variable", "[model]" )
{
   Problem infer = testing::dual_infer_instance();
   CHECK( max_activity( infer, 0, 0 ) == Approx( 313600.0 ).margin( 1e-6 ) );
   CHECK( min_activity( infer, 0, 0 ) == 0.0 );

   Problem empty;
   empty.constraints.push_back( Constraint{ "e", {}, -kInfinity, kInfinity } );
   CHECK( max_activity( empty, 0 ) == 0.0 );
   CHECK( min_activity( empty, 0 ) == 0.0 );

   CHECK( max_activity( single_row( 2.0, 0.0, kInfinity ), 0 ) == kInfinity );
   CHECK( min_activity( single_row( -3.0, 0.0, 2.0 ), 0 ) == -6.0 );
}

TEST_CASE( "excluding a variable equals zeroing its bounds", "[model]" )
{
   std::mt19937_64 rng( 11 );
   for( int trial = 0; trial < 50; ++trial )
   {
      Problem problem = testing::random_integer_problem( rng, 8, 8, 3 );
      for( std::size_t i = 0; i < problem.nconss(); ++i )
      {
         for( std::size_t k = 0; k < problem.nvars(); ++k )
         {
            Problem zeroed = problem;
            zeroed.variables[k].lower = 0.0;
            zeroed.variables[k].upper = 0.0;
            CHECK( max_activity( problem, i, k ) == max_activity( zeroed, i ) );
            CHECK( min_activity( problem, i, k ) == min_activity( zeroed, i ) );
         }
      }
   }
}

TEST_CASE( "maximal activity dominates sampled activities", "[model]" )
{
   std::mt19937_64 rng( 12 );
   std::uniform_real_distribution<double> unit( 0.0, 1.0 );
   std::uniform_real_distribution<double> coef( -10.0, 10.0 );
   for( int trial = 0; trial < 20; ++trial )
   {
      Problem problem;
      for( int j = 0; j < 10; ++j )
      {
         double lower = coef( rng );
         problem.variables.push_back(
            Variable{ "v" + std::to_string( j ), lower, lower + 5.0 * unit( rng ), 0.0, VarType::Continuous } );
      }
      for( int i = 0; i < 10; ++i )
      {
         Constraint row{ "r" + std::to_string( i ), {}, -kInfinity, kInfinity };
         for( std::size_t j = 0; j < 10; ++j )
            row.coefficients.push_back( { j, coef( rng ) } );
         problem.constraints.push_back( row );
      }
      for( int sample = 0; sample < 50; ++sample )
      {
         Solution point;
         for( const Variable& var : problem.variables )
            point.set( var.name, var.lower + ( var.upper - var.lower ) * unit( rng ) );
         for( std::size_t i = 0; i < problem.nconss(); ++i )
         {
            double act = activity( problem, i, point );
            double slack = 10 * 1e-9 * 100.0;
            CHECK( max_activity( problem, i ) >= act - slack );
            CHECK( min_activity( problem, i ) <= act + slack );
         }
      }
   }
}

TEST_CASE( "objective is affine in the point", "[model]" )
{
   std::mt19937_64 rng( 13 );
   for( int trial = 0; trial < 100; ++trial )
   {
      testing::Instance a = testing::random_feasible_instance( rng );
      a.problem.offset = 2.25;
      std::uniform_real_distribution<double> weight( -2.0, 2.0 );
      double alpha = weight( rng );
      double beta = weight( rng );
      Solution x;
      Solution y;
      Solution combo;
      for( const Variable& var : a.problem.variables )
      {
         double xv = weight( rng );
         double yv = weight( rng );
         x.set( var.name, xv );
         y.set( var.name, yv );
         combo.set( var.name, alpha * xv + beta * yv );
      }
      double offset = a.problem.offset;
      double lhs = evaluate_objective( a.problem, combo ) - offset;
      double rhs = alpha * ( evaluate_objective( a.problem, x ) - offset ) +
                   beta * ( evaluate_objective( a.problem, y ) - offset );
      CHECK( lhs == Approx( rhs ).epsilon( 1e-9 ).margin( 1e-9 ) );
   }
}

TEST_CASE( "rays must be improving recession directions", "[model]" )
{
   Problem open;
   open.variables.push_back( Variable{ "x", 0.0, kInfinity, -1.0, VarType::Continuous } );
   CHECK( verify_ray( open, Solution{ { "x", 1.0 } } ) );
   CHECK_FALSE( verify_ray( open, Solution{ { "x", 0.0 } } ) );
   CHECK_FALSE( verify_ray( open, Solution{ { "x", -1.0 } } ) );

   Problem capped = open;
   capped.variables[0].upper = 5.0;
   CHECK_FALSE( verify_ray( capped, Solution{ { "x", 1.0 } } ) );

   Problem row = open;
   row.variables.push_back( Variable{ "y", 0.0, kInfinity, 0.0, VarType::Continuous } );
   row.constraints.push_back( Constraint{ "r", { { 0, 1.0 }, { 1, -1.0 } }, -kInfinity, 3.0 } );
   CHECK( verify_ray( row, Solution{ { "x", 1.0 }, { "y", 1.0 } } ) );
   CHECK_FALSE( verify_ray( row, Solution{ { "x", 1.0 }, { "y", 0.0 } } ) );
}

TEST_CASE( "valid rays keep feasible points feasible", "[model]" )
{
   Problem problem;
   problem.variables.push_back( Variable{ "x", 0.0, kInfinity, -1.0, VarType::Continuous } );
   problem.variables.push_back( Variable{ "y", -kInfinity, 4.0, 0.0, VarType::Continuous } );
   problem.constraints.push_back( Constraint{ "r", { { 0, 1.0 }, { 1, 2.0 } }, -kInfinity, 10.0 } );
   problem.constraints.push_back( Constraint{ "s", { { 0, 1.0 }, { 1, 1.0 } }, -5.0, kInfinity } );
   Solution ray{ { "x", 2.0 }, { "y", -1.0 } };
   REQUIRE( verify_ray( problem, ray ) );
   Solution point{ { "x", 1.0 }, { "y", 1.0 } };
   REQUIRE( is_feasible( problem, point ) );
   for( double t : { 1.0, 10.0, 100.0 } )
   {
      Solution moved{ { "x", 1.0 + t * 2.0 }, { "y", 1.0 - t } };
      CHECK( is_feasible( problem, moved ) );
   }
}

TEST_CASE( "validate rejects malformed problems", "[model]" )
{
   Problem problem = testing::two_binaries();
   CHECK_NOTHROW( problem.validate() );

   Problem unsorted = problem;
   std::swap( unsorted.constraints[0].coefficients[0], unsorted.constraints[0].coefficients[1] );
   CHECK_THROWS_AS( unsorted.validate(), ModelError );

   Problem duplicate = problem;
   duplicate.variables[1].name = "x1";
   CHECK_THROWS_AS( duplicate.validate(), ModelError );

   Problem inverted = problem;
   inverted.variables[0].lower = 2.0;
   CHECK_THROWS_AS( inverted.validate(), ModelError );

   Problem zero = problem;
   zero.constraints[0].coefficients[0].value = 0.0;
   CHECK_THROWS_AS( zero.validate(), ModelError );
}

TEST_CASE( "settings keep insertion order", "[model]" )
{
   Settings settings{ { "b", "1" }, { "a", "2" } };
   settings.set( "b", "3" );
   settings.set( "c", "4" );
   REQUIRE( settings.size() == 3 );
   CHECK( settings.entries()[0] == Settings::Entry{ "b", "3" } );
   CHECK( settings.entries()[2].first == "c" );
   CHECK( settings.erase( "a" ) );
   CHECK_FALSE( settings.contains( "a" ) );
}
