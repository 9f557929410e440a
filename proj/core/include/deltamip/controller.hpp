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

#ifndef DELTAMIP_CONTROLLER_HPP
#define DELTAMIP_CONTROLLER_HPP

#include "deltamip/modifiers.hpp"
#include "deltamip/solver_interface.hpp"

#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace deltamip
{

struct StagePlan
{
   int initial_stage = 1;
   int last_stage = 9;
   long last_round = 10000;
};

struct LoopStep
{
   long round;
   int stage;
   bool changed;

   friend bool operator==( const LoopStep&, const LoopStep& ) = default;
};

/// A modifier invocation; returns whether it changed the pair.
using ModifierFn = std::function<bool( long round, int stage )>;

/// The stage-round loop: each round calls modifiers 1..stage in order; an
/// unchanged round enters the next stage, a changed one the next round.
/// The last stage is clamped to the number of modifiers.
std::vector<LoopStep>
run_loop( const StagePlan& plan, const std::vector<ModifierFn>& modifiers,
          const std::function<void( const LoopStep& )>& on_round = {} );

/// Modifiers used in a run, in stage order.
std::vector<ModifierKind>
modifier_sequence( bool iis );

struct RunConfig
{
   StagePlan stages;
   ModifierContext context;
   std::optional<std::filesystem::path> snapshot_dir;
   /// Re-read and re-solve every snapshot once.
   bool verify_snapshots = false;
};

struct Snapshot
{
   long round = 0;
   std::filesystem::path instance;
   std::filesystem::path settings;
   /// round_<r>.sol, the reference restricted to the remaining variables.
   std::optional<std::filesystem::path> reference;
   std::optional<FailCode> verified_code;
};

struct RunTotals
{
   std::size_t solves = 0;
   std::size_t kept = 0;
   long rounds = 0;
   double seconds = 0.0;
};

class RunObserver
{
 public:
   virtual ~RunObserver() = default;

   virtual void
   on_start( const ReductionState&, FailCode )
   {
   }

   virtual void
   on_solve( long /*round*/, int /*stage*/, const SolveRecord& )
   {
   }

   virtual void
   on_round( const LoopStep&, const ReductionState&, const RunTotals& )
   {
   }

   virtual void
   on_end( const ReductionState&, const RunTotals& )
   {
   }
};

class RunAborted : public std::runtime_error
{
 public:
   enum class Reason
   {
      NoFailure,
      InfeasibleReference,
      MissingReference
   };

   RunAborted( Reason reason, const std::string& message )
       : std::runtime_error( message ), reason_( reason )
   {
   }

   Reason
   reason() const
   {
      return reason_;
   }

 private:
   Reason reason_;
};

/// Solves the initial pair once. Throws RunAborted when the reference is
/// missing or infeasible (outside IIS mode) or when nothing fails.
FailCode
verify_initial( SolverBackend& backend, const ReductionState& state, const ModifierContext& context );

/// Writes round_<r>.mps and round_<r>.set into `directory`, plus round_<r>.sol
/// when the state has a reference.
Snapshot
emit_snapshot( const ReductionState& state, long round, const std::filesystem::path& directory );

struct RunResult
{
   ReductionState final_state;
   FailCode initial_code = fail::kPass;
   std::vector<Snapshot> snapshots;
   std::vector<LoopStep> trajectory;
   RunTotals totals;
};

/// Verifies the initial pair and reduces it; a snapshot is written after
/// every round that changed the pair.
RunResult
run( const RunConfig& config, SolverBackend& backend, ReductionState initial,
     RunObserver* observer = nullptr );

} // namespace deltamip

#endif
