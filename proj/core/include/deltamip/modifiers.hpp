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

#ifndef DELTAMIP_MODIFIERS_HPP
#define DELTAMIP_MODIFIERS_HPP

#include "deltamip/model.hpp"
#include "deltamip/solver_interface.hpp"

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace deltamip
{

/// Reduction strategies in priority order.
enum class ModifierKind
{
   Constraint = 1,
   Variable,
   Coefficient,
   Fixing,
   Setting,
   Side,
   Objective,
   VarRound,
   ConsRound
};

inline constexpr std::array<ModifierKind, 9> kModifierOrder = {
    ModifierKind::Constraint, ModifierKind::Variable,  ModifierKind::Coefficient,
    ModifierKind::Fixing,     ModifierKind::Setting,   ModifierKind::Side,
    ModifierKind::Objective,  ModifierKind::VarRound,  ModifierKind::ConsRound };

inline int
priority( ModifierKind kind )
{
   return static_cast<int>( kind );
}

const char*
to_string( ModifierKind kind );

std::optional<ModifierKind>
parse_modifier( std::string_view name );

namespace edit
{

struct DeleteConstraint
{
   std::string row;
};

struct FixVariable
{
   std::string var;
   double value;
};

/// Drops the entry of a fixed variable and moves its contribution to the sides.
struct DeleteCoefficient
{
   std::string row;
   std::string var;
   double value;
};

/// Removes a fixed variable, folding it into sides and objective offset.
struct RemoveVariable
{
   std::string var;
   double value;
};

struct ChangeSetting
{
   std::string key;
   std::string value;
};

struct FixSide
{
   std::string row;
   double value;
};

struct ZeroObjective
{
   std::string var;
};

struct RoundVariable
{
   std::string var;
   double objective;
   double lower;
   double upper;
};

struct RoundConstraint
{
   std::string row;
   /// Rounded coefficients keyed by variable name, in row order; zeros are dropped.
   std::vector<std::pair<std::string, double>> coefficients;
   double lhs;
   double rhs;
};

} // namespace edit

using Edit = std::variant<edit::DeleteConstraint, edit::FixVariable, edit::DeleteCoefficient,
                          edit::RemoveVariable, edit::ChangeSetting, edit::FixSide,
                          edit::ZeroObjective, edit::RoundVariable, edit::RoundConstraint>;

/// One atomic edit. Targets are addressed by name so that candidates planned
/// before earlier commits can still be resolved or detected as stale.
struct Modification
{
   ModifierKind kind;
   Edit change;
};

using Batch = std::vector<Modification>;

struct EnumerationOptions
{
   /// IIS mode: VarRound only widens bounds (floor lower, ceil upper).
   bool relax_only = false;
   Tolerances tolerances;
};

/// Candidate edits of one kind in stored order. Kinds that need the
/// reference throw std::invalid_argument when it is null.
std::vector<Modification>
enumerate_candidates( ModifierKind kind, const Problem& problem, const Settings& settings,
                      const Settings& target, const Solution* reference,
                      const EnumerationOptions& options = {} );

/// Consecutive batches of size ceil(n / nbatches); nbatches == 0 means one
/// candidate per batch.
std::vector<Batch>
plan_batches( const std::vector<Modification>& candidates, std::size_t nbatches );

/// Sizes of the batches plan_batches would produce.
std::vector<std::size_t>
batch_sizes( std::size_t ncandidates, std::size_t nbatches );

struct AppliedBatch
{
   Problem problem;
   Settings settings;
   std::size_t applied = 0;
   std::size_t stale = 0;
};

/// Applies all edits on copies. With a reference, rows whose side shifts
/// left the reference slightly outside are relaxed to its activity.
AppliedBatch
apply_batch( const Problem& problem, const Settings& settings, const Batch& batch,
             const Solution* reference = nullptr, const Tolerances& tolerances = {} );

/// Settings-problem pair under reduction.
struct ReductionState
{
   Settings settings;
   Problem problem;
   Settings target;
   std::optional<Solution> reference;
   bool iis = false;
};

struct ModifierStats
{
   std::size_t candidates = 0;
   std::size_t batches = 0;
   std::size_t solves = 0;
   std::size_t kept = 0;
   std::size_t stale = 0;
   /// Batches skipped because they would have cut off the reference.
   std::size_t unsafe = 0;
};

struct SolveRecord
{
   ModifierKind kind;
   std::size_t batch;
   std::size_t batch_size;
   FailCode code;
   bool kept;
   double seconds;
};

struct ModifierContext
{
   std::size_t nbatches = 0;
   Passcodes passcodes;
   SolveLimits limits;
   Tolerances tolerances;
   std::function<void( const SolveRecord& )> on_solve;
};

/// Code of a solve under the state's evaluation mode.
FailCode
evaluate_pair( SolverBackend& backend, const Problem& problem, const Settings& settings,
               const ReductionState& state, const ModifierContext& context );

/// Plans batches of one kind, then applies, solves and keeps every batch
/// that still fails. Returns the statistics; `state` holds the result.
ModifierStats
run_modifier( ModifierKind kind, SolverBackend& backend, ReductionState& state,
              const ModifierContext& context );

} // namespace deltamip

#endif
