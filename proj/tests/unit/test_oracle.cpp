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

#include <catch2/catch_amalgamated.hpp>

using namespace deltamip;
using namespace deltamip::builtin;

TEST_CASE( "oracle finds the unique optimum", "[oracle]" )
{
   OracleResult result = enumerate_oracle( testing::two_binaries() );
   REQUIRE( result.feasible );
   CHECK( result.value == -1.0 );
   REQUIRE( result.optima.size() == 1 );
   CHECK( result.optima[0] == Solution{ { "x1", 1.0 }, { "x2", 0.0 } } );
}

TEST_CASE( "oracle detects infeasibility", "[oracle]" )
{
   Problem problem = testing::two_binaries();
   problem.constraints[0].rhs = -1.0;
   OracleResult result = enumerate_oracle( problem );
   CHECK_FALSE( result.feasible );
   CHECK( result.optima.empty() );
}

TEST_CASE( "oracle lists all tied optima", "[oracle]" )
{
   Problem problem = testing::two_binaries();
   problem.variables[0].objective = 0.0;
   OracleResult result = enumerate_oracle( problem );
   CHECK( result.value == 0.0 );
   CHECK( result.optima.size() == 3 );
}

TEST_CASE( "oracle preconditions", "[oracle]" )
{
   Problem continuous = testing::two_binaries();
   continuous.variables[1].type = VarType::Continuous;
   CHECK_THROWS_AS( enumerate_oracle( continuous ), std::invalid_argument );

   Problem unbounded = testing::two_binaries();
   unbounded.variables[1].upper = kInfinity;
   CHECK_THROWS_AS( enumerate_oracle( unbounded ), std::invalid_argument );

   CHECK_THROWS_AS( enumerate_oracle( testing::dual_infer_instance( true ) ), std::invalid_argument );

   OracleResult empty = enumerate_oracle( Problem{} );
   CHECK( empty.feasible );
   CHECK( empty.value == 0.0 );
}
