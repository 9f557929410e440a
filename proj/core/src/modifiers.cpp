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

#include "deltamip/modifiers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace deltamip
{

const char*
to_string( ModifierKind kind )
{
   switch( kind )
   {
   case ModifierKind::Constraint:
      return "constraint";
   case ModifierKind::Variable:
      return "variable";
   case ModifierKind::Coefficient:
      return "coefficient";
   case ModifierKind::Fixing:
      return "fixing";
   case ModifierKind::Setting:
      return "setting";
   case ModifierKind::Side:
      return "side";
   case ModifierKind::Objective:
      return "objective";
   case ModifierKind::VarRound:
      return "varround";
   case ModifierKind::ConsRound:
      return "consround";
   }
   return "unknown";
}

std::optional<ModifierKind>
parse_modifier( std::string_view name )
{
   for( ModifierKind kind : kModifierOrder )
   {
      if( name == to_string( kind ) )
         return kind;
   }
   return std::nullopt;
}

namespace
{

bool
is_fixed( const Variable& var, const Tolerances& tolerances )
{
   return var.upper - var.lower < tolerances.epsilon;
}

bool
is_fractional( double value )
{
   return std::isfinite( value ) && value != std::round( value );
}

const Solution&
require_reference( const Solution* reference, ModifierKind kind )
{
   if( reference == nullptr )
      throw std::invalid_argument( std::string( "modifier '" ) + to_string( kind )
                                   + "' needs a reference solution" );
   return *reference;
}

void
enumerate_var_round( const Problem& problem, const Solution* reference,
                     const EnumerationOptions& options, std::vector<Modification>& result )
{
   for( const Variable& var : problem.variables )
   {
      double objective = std::round( var.objective );
      double lower = var.lower;
      double upper = var.upper;
      if( options.relax_only )
      {
         lower = std::floor( lower );
         upper = std::ceil( upper );
      }
      else
      {
         double value = require_reference( reference, ModifierKind::VarRound ).at( var.name );
         if( std::isfinite( lower ) )
            lower = std::min( std::round( lower ), value );
         if( std::isfinite( upper ) )
            upper = std::max( std::round( upper ), value );
      }
      if( objective == var.objective && lower == var.lower && upper == var.upper )
         continue;
      result.push_back( { ModifierKind::VarRound,
                          edit::RoundVariable{ var.name, objective, lower, upper } } );
   }
}

void
enumerate_cons_round( const Problem& problem, const Solution& reference,
                      std::vector<Modification>& result )
{
   std::vector<double> values = to_dense( problem, reference );
   for( const Constraint& row : problem.constraints )
   {
      bool fractional = is_fractional( row.lhs ) || is_fractional( row.rhs )
                     || std::any_of( row.coefficients.begin(), row.coefficients.end(),
                                     []( const Coefficient& entry ) { return is_fractional( entry.value ); } );
      if( !fractional )
         continue;

      edit::RoundConstraint change{ row.name, {}, row.lhs, row.rhs };
      double act = 0.0;
      for( const Coefficient& entry : row.coefficients )
      {
         double rounded = std::round( entry.value );
         if( rounded == 0.0 )
            continue;
         change.coefficients.emplace_back( problem.variables[entry.index].name, rounded );
         act += rounded * values[entry.index];
      }
      if( std::isfinite( row.rhs ) )
         change.rhs = std::max( std::round( row.rhs ), act );
      if( std::isfinite( row.lhs ) )
         change.lhs = std::min( std::round( row.lhs ), act );

      bool same = change.lhs == row.lhs && change.rhs == row.rhs
               && change.coefficients.size() == row.coefficients.size();
      for( std::size_t k = 0; same && k < row.coefficients.size(); ++k )
         same = change.coefficients[k].second == row.coefficients[k].value;
      if( same )
         continue;
      result.push_back( { ModifierKind::ConsRound, std::move( change ) } );
   }
}

} // namespace

std::vector<Modification>
enumerate_candidates( ModifierKind kind, const Problem& problem, const Settings& settings,
                      const Settings& target, const Solution* reference,
                      const EnumerationOptions& options )
{
   const Tolerances& tol = options.tolerances;
   std::vector<Modification> result;

   switch( kind )
   {
   case ModifierKind::Constraint:
      for( const Constraint& row : problem.constraints )
         result.push_back( { kind, edit::DeleteConstraint{ row.name } } );
      break;

   case ModifierKind::Variable:
   {
      const Solution& ref = require_reference( reference, kind );
      for( const Variable& var : problem.variables )
      {
         if( !is_fixed( var, tol ) )
            result.push_back( { kind, edit::FixVariable{ var.name, ref.at( var.name ) } } );
      }
      break;
   }

   case ModifierKind::Coefficient:
   {
      const Solution& ref = require_reference( reference, kind );
      for( const Constraint& row : problem.constraints )
      {
         for( const Coefficient& entry : row.coefficients )
         {
            const Variable& var = problem.variables[entry.index];
            if( is_fixed( var, tol ) )
               result.push_back( { kind, edit::DeleteCoefficient{ row.name, var.name, ref.at( var.name ) } } );
         }
      }
      break;
   }

   case ModifierKind::Fixing:
   {
      const Solution& ref = require_reference( reference, kind );
      for( const Variable& var : problem.variables )
      {
         if( is_fixed( var, tol ) )
            result.push_back( { kind, edit::RemoveVariable{ var.name, ref.at( var.name ) } } );
      }
      break;
   }

   case ModifierKind::Setting:
      for( const auto& [key, value] : target.entries() )
      {
         auto current = settings.get( key );
         if( !current || *current != value )
            result.push_back( { kind, edit::ChangeSetting{ key, value } } );
      }
      break;

   case ModifierKind::Side:
   {
      const Solution& ref = require_reference( reference, kind );
      std::vector<double> values = to_dense( problem, ref );
      for( const Constraint& row : problem.constraints )
      {
         if( row.lhs < row.rhs - tol.epsilon )
            result.push_back( { kind, edit::FixSide{ row.name, activity( row, values ) } } );
      }
      break;
   }

   case ModifierKind::Objective:
      for( const Variable& var : problem.variables )
      {
         if( var.objective != 0.0 )
            result.push_back( { kind, edit::ZeroObjective{ var.name } } );
      }
      break;

   case ModifierKind::VarRound:
      enumerate_var_round( problem, reference, options, result );
      break;

   case ModifierKind::ConsRound:
      enumerate_cons_round( problem, require_reference( reference, kind ), result );
      break;
   }
   return result;
}

std::vector<std::size_t>
batch_sizes( std::size_t ncandidates, std::size_t nbatches )
{
   std::vector<std::size_t> sizes;
   if( ncandidates == 0 )
      return sizes;
   std::size_t size = nbatches == 0 ? 1 : ( ncandidates + nbatches - 1 ) / nbatches;
   for( std::size_t start = 0; start < ncandidates; start += size )
      sizes.push_back( std::min( size, ncandidates - start ) );
   return sizes;
}

std::vector<Batch>
plan_batches( const std::vector<Modification>& candidates, std::size_t nbatches )
{
   std::vector<Batch> batches;
   std::size_t start = 0;
   for( std::size_t size : batch_sizes( candidates.size(), nbatches ) )
   {
      auto first = candidates.begin() + static_cast<std::ptrdiff_t>( start );
      batches.emplace_back( first, first + static_cast<std::ptrdiff_t>( size ) );
      start += size;
   }
   return batches;
}

namespace
{

/// Name lookup that scans forward from the last hit, since batches list
/// their targets in stored order; a hash map is built on the first miss.
class NameIndex
{
 public:
   template <typename Item>
   std::optional<std::size_t>
   find( const std::string& name, const std::vector<Item>& items )
   {
      if( map_.empty() )
      {
         for( std::size_t i = cursor_; i < items.size(); ++i )
         {
            if( items[i].name == name )
            {
               cursor_ = i + 1;
               return i;
            }
         }
         for( std::size_t i = 0; i < items.size(); ++i )
            map_.emplace( items[i].name, i );
      }
      auto it = map_.find( name );
      if( it == map_.end() )
         return std::nullopt;
      return it->second;
   }

 private:
   std::size_t cursor_ = 0;
   std::unordered_map<std::string, std::size_t> map_;
};

class BatchApplier
{
 public:
   BatchApplier( AppliedBatch& out, const Tolerances& tolerances )
       : out_( out ), problem_( out.problem ), tol_( tolerances )
   {
      row_deleted_.assign( problem_.nconss(), false );
      row_touched_.assign( problem_.nconss(), false );
      var_removed_.assign( problem_.nvars(), false );
   }

   bool
   operator()( const edit::DeleteConstraint& change )
   {
      auto row = find_row( change.row );
      if( !row )
         return false;
      row_deleted_[*row] = true;
      return true;
   }

   bool
   operator()( const edit::FixVariable& change )
   {
      auto var = find_var( change.var );
      if( !var )
         return false;
      problem_.variables[*var].lower = change.value;
      problem_.variables[*var].upper = change.value;
      return true;
   }

   bool
   operator()( const edit::DeleteCoefficient& change )
   {
      auto row = find_row( change.row );
      auto var = find_var( change.var );
      if( !row || !var || !is_fixed( problem_.variables[*var], tol_ ) )
         return false;
      return drop_entry( *row, *var, change.value );
   }

   bool
   operator()( const edit::RemoveVariable& change )
   {
      auto var = find_var( change.var );
      if( !var || !is_fixed( problem_.variables[*var], tol_ ) )
         return false;
      for( std::size_t i = 0; i < problem_.nconss(); ++i )
      {
         if( !row_deleted_[i] )
            drop_entry( i, *var, change.value );
      }
      problem_.offset += problem_.variables[*var].objective * change.value;
      var_removed_[*var] = true;
      return true;
   }

   bool
   operator()( const edit::ChangeSetting& change )
   {
      out_.settings.set( change.key, change.value );
      return true;
   }

   bool
   operator()( const edit::FixSide& change )
   {
      auto row = find_row( change.row );
      if( !row )
         return false;
      problem_.constraints[*row].lhs = change.value;
      problem_.constraints[*row].rhs = change.value;
      return true;
   }

   bool
   operator()( const edit::ZeroObjective& change )
   {
      auto var = find_var( change.var );
      if( !var )
         return false;
      problem_.variables[*var].objective = 0.0;
      return true;
   }

   bool
   operator()( const edit::RoundVariable& change )
   {
      auto var = find_var( change.var );
      if( !var )
         return false;
      Variable& target = problem_.variables[*var];
      target.objective = change.objective;
      target.lower = change.lower;
      target.upper = change.upper;
      return true;
   }

   bool
   operator()( const edit::RoundConstraint& change )
   {
      auto row = find_row( change.row );
      if( !row )
         return false;
      std::vector<Coefficient> coefficients;
      for( const auto& [name, value] : change.coefficients )
      {
         auto var = find_var( name );
         if( !var )
            return false;
         coefficients.push_back( { *var, value } );
      }
      std::sort( coefficients.begin(), coefficients.end(),
                 []( const Coefficient& a, const Coefficient& b ) { return a.index < b.index; } );
      Constraint& target = problem_.constraints[*row];
      target.coefficients = std::move( coefficients );
      target.lhs = change.lhs;
      target.rhs = change.rhs;
      return true;
   }

   void
   relax_to( const Solution& reference )
   {
      for( std::size_t i = 0; i < problem_.nconss(); ++i )
      {
         if( !row_touched_[i] || row_deleted_[i] )
            continue;
         Constraint& row = problem_.constraints[i];
         double act = 0.0;
         bool complete = true;
         for( const Coefficient& entry : row.coefficients )
         {
            auto value = reference.get( problem_.variables[entry.index].name );
            if( !value )
            {
               complete = false;
               break;
            }
            act += entry.value * *value;
         }
         if( !complete )
            continue;
         if( relative_violation( -kInfinity, act, row.rhs ) > tol_.epsilon )
            row.rhs = act;
         if( relative_violation( row.lhs, act, kInfinity ) > tol_.epsilon )
            row.lhs = act;
      }
   }

   void
   compact()
   {
      std::vector<std::size_t> remap( problem_.nvars(), 0 );
      std::vector<Variable> variables;
      for( std::size_t j = 0; j < problem_.nvars(); ++j )
      {
         if( var_removed_[j] )
            continue;
         remap[j] = variables.size();
         variables.push_back( std::move( problem_.variables[j] ) );
      }

      std::vector<Constraint> constraints;
      for( std::size_t i = 0; i < problem_.nconss(); ++i )
      {
         if( row_deleted_[i] )
            continue;
         Constraint& row = problem_.constraints[i];
         for( Coefficient& entry : row.coefficients )
            entry.index = remap[entry.index];
         constraints.push_back( std::move( row ) );
      }
      problem_.variables = std::move( variables );
      problem_.constraints = std::move( constraints );
   }

 private:
   std::optional<std::size_t>
   find_row( const std::string& name )
   {
      auto row = rows_.find( name, problem_.constraints );
      if( !row || row_deleted_[*row] )
         return std::nullopt;
      return row;
   }

   std::optional<std::size_t>
   find_var( const std::string& name )
   {
      auto var = vars_.find( name, problem_.variables );
      if( !var || var_removed_[*var] )
         return std::nullopt;
      return var;
   }

   bool
   drop_entry( std::size_t row, std::size_t var, double value )
   {
      Constraint& cons = problem_.constraints[row];
      auto it = std::find_if( cons.coefficients.begin(), cons.coefficients.end(),
                              [&]( const Coefficient& entry ) { return entry.index == var; } );
      if( it == cons.coefficients.end() )
         return false;
      double shift = it->value * value;
      if( std::isfinite( cons.lhs ) )
         cons.lhs -= shift;
      if( std::isfinite( cons.rhs ) )
         cons.rhs -= shift;
      cons.coefficients.erase( it );
      row_touched_[row] = true;
      return true;
   }

   AppliedBatch& out_;
   Problem& problem_;
   const Tolerances& tol_;
   NameIndex vars_;
   NameIndex rows_;
   std::vector<bool> row_deleted_;
   std::vector<bool> row_touched_;
   std::vector<bool> var_removed_;
};

} // namespace

AppliedBatch
apply_batch( const Problem& problem, const Settings& settings, const Batch& batch,
             const Solution* reference, const Tolerances& tolerances )
{
   AppliedBatch out{ problem, settings, 0, 0 };
   if( batch.empty() )
      return out;

   BatchApplier applier( out, tolerances );
   for( const Modification& modification : batch )
   {
      if( std::visit( applier, modification.change ) )
         ++out.applied;
      else
         ++out.stale;
   }
   if( reference != nullptr )
      applier.relax_to( *reference );
   applier.compact();
   return out;
}

FailCode
evaluate_pair( SolverBackend& backend, const Problem& problem, const Settings& settings,
               const ReductionState& state, const ModifierContext& context )
{
   SolveOutcome outcome = call_solver( backend, problem, settings, context.limits );
   if( state.iis )
      return evaluate_iis( outcome, context.passcodes );
   const Solution* reference = state.reference ? &*state.reference : nullptr;
   return evaluate( outcome, problem, reference, context.passcodes, context.tolerances );
}

ModifierStats
run_modifier( ModifierKind kind, SolverBackend& backend, ReductionState& state,
              const ModifierContext& context )
{
   ModifierStats stats;
   const Solution* reference = state.reference && !state.iis ? &*state.reference : nullptr;

   EnumerationOptions options;
   options.relax_only = state.iis;
   options.tolerances = context.tolerances;
   std::vector<Modification> candidates
       = enumerate_candidates( kind, state.problem, state.settings, state.target, reference, options );
   stats.candidates = candidates.size();

   std::vector<Batch> batches = plan_batches( candidates, context.nbatches );
   stats.batches = batches.size();

   for( std::size_t b = 0; b < batches.size(); ++b )
   {
      AppliedBatch applied
          = apply_batch( state.problem, state.settings, batches[b], reference, context.tolerances );
      stats.stale += applied.stale;
      if( applied.applied == 0 )
         continue;
      if( reference != nullptr && !is_feasible( applied.problem, *reference, context.tolerances ) )
      {
         ++stats.unsafe;
         continue;
      }

      auto start = std::chrono::steady_clock::now();
      FailCode code = evaluate_pair( backend, applied.problem, applied.settings, state, context );
      std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      ++stats.solves;

      bool keep = code != fail::kPass;
      if( context.on_solve )
         context.on_solve( { kind, b, batches[b].size(), code, keep, elapsed.count() } );
      if( keep )
      {
         state.problem = std::move( applied.problem );
         state.settings = std::move( applied.settings );
         ++stats.kept;
      }
   }
   return stats;
}

} // namespace deltamip
