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

#ifndef DELTAMIP_BUILTIN_FAULTS_HPP
#define DELTAMIP_BUILTIN_FAULTS_HPP

#include "deltamip/model.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace deltamip::builtin
{

enum class Fault
{
   F1, ///< activity computed with the bounds of the row's first variable
   F2, ///< objective cutoff rounded from an interior point
   F3, ///< integer bounds floored/ceiled against epsilon only
   F4, ///< normalized sides below the threshold snap to zero
   F5  ///< optimal status without solutions when presolve finishes
};

inline constexpr std::size_t kFaultCount = 5;

const char*
to_string( Fault fault );

std::optional<Fault>
parse_fault( std::string_view name );

struct FaultSpec
{
   std::array<bool, kFaultCount> enabled{};
   double f4_threshold = 1e-6;

   bool
   has( Fault fault ) const
   {
      return enabled[static_cast<std::size_t>( fault )];
   }

   void
   set( Fault fault, bool on = true )
   {
      enabled[static_cast<std::size_t>( fault )] = on;
   }

   bool
   empty() const
   {
      for( bool on : enabled )
      {
         if( on )
            return false;
      }
      return true;
   }

   /// Comma separated names such as "F1,F4"; case-insensitive. Throws
   /// std::invalid_argument on unknown names.
   static FaultSpec
   parse( std::string_view list );

   std::string
   str() const;

   friend bool operator==( const FaultSpec&, const FaultSpec& ) = default;
};

/// max_activity with every entry using the bounds of the row's first variable.
double
shifted_max_activity( const Problem& problem, std::size_t row,
                      std::optional<std::size_t> excluded = std::nullopt );

} // namespace deltamip::builtin

#endif
