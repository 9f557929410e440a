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

#include "deltamip/builtin/faults.hpp"

#include <cctype>
#include <stdexcept>

namespace deltamip::builtin
{

namespace
{
constexpr std::array<const char*, kFaultCount> kNames = { "F1", "F2", "F3", "F4", "F5" };
}

const char*
to_string( Fault fault )
{
   return kNames[static_cast<std::size_t>( fault )];
}

std::optional<Fault>
parse_fault( std::string_view name )
{
   if( name.size() != 2 || std::toupper( static_cast<unsigned char>( name[0] ) ) != 'F' )
      return std::nullopt;
   int digit = name[1] - '0';
   if( digit < 1 || digit > static_cast<int>( kFaultCount ) )
      return std::nullopt;
   return static_cast<Fault>( digit - 1 );
}

FaultSpec
FaultSpec::parse( std::string_view list )
{
   FaultSpec result;
   std::size_t start = 0;
   while( start <= list.size() )
   {
      std::size_t end = list.find( ',', start );
      if( end == std::string_view::npos )
         end = list.size();
      std::string_view token = list.substr( start, end - start );
      while( !token.empty() && std::isspace( static_cast<unsigned char>( token.front() ) ) )
         token.remove_prefix( 1 );
      while( !token.empty() && std::isspace( static_cast<unsigned char>( token.back() ) ) )
         token.remove_suffix( 1 );
      if( !token.empty() )
      {
         auto fault = parse_fault( token );
         if( !fault )
            throw std::invalid_argument( "unknown fault '" + std::string( token ) + "'" );
         result.set( *fault );
      }
      start = end + 1;
   }
   return result;
}

std::string
FaultSpec::str() const
{
   std::string out;
   for( std::size_t k = 0; k < kFaultCount; ++k )
   {
      if( !enabled[k] )
         continue;
      if( !out.empty() )
         out += ',';
      out += kNames[k];
   }
   return out;
}

double
shifted_max_activity( const Problem& problem, std::size_t row, std::optional<std::size_t> excluded )
{
   const Constraint& cons = problem.constraints.at( row );
   if( cons.coefficients.empty() )
      return 0.0;
   const Variable& first = problem.variables[cons.coefficients.front().index];
   double sum = 0.0;
   for( const Coefficient& entry : cons.coefficients )
   {
      if( excluded && entry.index == *excluded )
         continue;
      double bound = entry.value > 0.0 ? first.upper : first.lower;
      if( !std::isfinite( bound ) )
         return kInfinity;
      sum += entry.value * bound;
   }
   return sum;
}

} // namespace deltamip::builtin
