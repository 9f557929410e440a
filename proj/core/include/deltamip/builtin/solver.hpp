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

#ifndef DELTAMIP_BUILTIN_SOLVER_HPP
#define DELTAMIP_BUILTIN_SOLVER_HPP

#include "deltamip/builtin/faults.hpp"
#include "deltamip/builtin/presolve.hpp"
#include "deltamip/model.hpp"
#include "deltamip/solver_interface.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace deltamip::builtin
{

enum class BranchingRule
{
   MostFractional,
   FirstFractional
};

/// Recognized settings:
///   presolve/enabled, presolve/propagation, presolve/normalization (bool)
///   presolve/maxrounds (int), separation/objcut (bool)
///   branching/rule (mostfrac | first), randomization/seed (int)
///   fault/f1 .. fault/f5 (bool), fault/f4/threshold (real)
///   limits/time (seconds), limits/nodes (int)
struct SolverSettings
{
   bool presolve = true;
   bool propagation = true;
   bool normalization = true;
   int presolve_rounds = 20;
   bool objective_cut = true;
   BranchingRule branching = BranchingRule::MostFractional;
   std::uint64_t seed = 0;
   FaultSpec faults;
   std::optional<double> time_limit;
   std::optional<long> node_limit;

   /// Overlays `settings` on this; throws std::invalid_argument for unknown
   /// keys or malformed values.
   void
   apply( const Settings& settings );

   static const std::vector<std::string>&
   keys();
};

SolveOutcome
branch_and_bound( const Problem& problem, const SolverSettings& settings,
                  const SolveLimits& limits = {}, const Tolerances& tolerances = {} );

/// In-process backend around branch_and_bound. Faults and seed given at
/// construction act as defaults below the settings file.
class BuiltinBackend : public SolverBackend
{
 public:
   explicit BuiltinBackend( FaultSpec faults = {}, std::uint64_t seed = 0 );

   std::string
   name() const override
   {
      return "builtin";
   }

   SolveOutcome
   solve() override;

   const SolverSettings&
   effective_settings() const
   {
      return effective_;
   }

 protected:
   void
   do_setup() override;

 private:
   SolverSettings defaults_;
   SolverSettings effective_;
};

} // namespace deltamip::builtin

#endif
