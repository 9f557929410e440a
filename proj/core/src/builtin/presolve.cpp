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

#include "deltamip/builtin/presolve.hpp"

#include <algorithm>
#include <cmath>

namespace deltamip::builtin
{

const char*
to_string( PresolveStatus status )
{
   switch( status )
   {
   case PresolveStatus::Unsolved:
      return "unsolved";
   case PresolveStatus::Solved:
      return "solved";
   case PresolveStatus::Infeasible:
      return "infeasible";
   }
   return "unknown";
}

double
integer_upper_bound( double value, bool safe, const Tolerances& tolerances,
                     const std::function<bool( double )>& satisfied )
{
   if( !safe )
      return std::floor( value + tolerances.epsilon );
   double candidate = std::ceil( value - tolerances.delta );
   if( candidate <= value )
      return candidate;
   return satisfied( candidate ) ? candidate : std::floor( value );
}

double
integer_lower_bound( double value, bool safe, const Tolerances& tolerances,
                     const std::function<bool( double )>& satisfied )
{
   if( !safe )
      return std::ceil( value - tolerances.epsilon );
   double candidate = std::floor( value + tolerances.delta );
   if( candidate >= value )
      return candidate;
   return satisfied( candidate ) ? candidate : std::ceil( value );
}

Solution
postsolve( const PresolveResult& result, const Solution& reduced )
{
   Solution full = result.fixings;
   for( const Variable& var : result.reduced.variables )
      full.set( var.name, reduced.at( var.name ) );
   return full;
}

namespace
{

// Continuous bounds move only for a noticeable gain and stay moderate in size.
constexpr double kMinRelativeGain = 1e-6;
constexpr double kMaxDerivedBound = 1e12;

bool
is_binary( const Variable& var )
{
   return var.is_integer() && var.lower == 0.0 && var.upper == 1.0;
}

class Presolver
{
 public:
   Presolver( const Problem& problem, const PresolveOptions& options )
       : options_( options ), tol_( options.tolerances )
   {
      result_.reduced = problem;
   }

   PresolveResult
   run()
   {
      Problem& p = result_.reduced;
      for( int round = 0; round < options_.max_rounds; ++round )
      {
         result_.rounds = round + 1;
         changed_ = false;

         round_integer_bounds();
         if( !infeasible_ )
            substitute_fixed();
         if( !infeasible_ )
            reduce_rows();
         if( !infeasible_ && options_.propagation )
            propagate();
         if( !infeasible_ )
            round_integer_bounds();

         if( infeasible_ )
         {
            result_.status = PresolveStatus::Infeasible;
            return std::move( result_ );
         }
         if( !changed_ )
            break;
      }
      if( p.nvars() == 0 && p.nconss() == 0 )
         result_.status = PresolveStatus::Solved;
      return std::move( result_ );
   }

 private:
   void
   round_integer_bounds()
   {
      for( Variable& var : result_.reduced.variables )
      {
         if( var.is_integer() )
         {
            double lower = std::ceil( var.lower - tol_.delta );
            double upper = std::floor( var.upper + tol_.delta );
            if( lower != var.lower || upper != var.upper )
            {
               var.lower = lower;
               var.upper = upper;
               changed_ = true;
            }
            if( var.lower > var.upper )
               infeasible_ = true;
         }
         else if( var.lower > var.upper + tol_.delta * std::max( 1.0, std::abs( var.upper ) ) )
            infeasible_ = true;
      }
   }

   void
   substitute_fixed()
   {
      Problem& p = result_.reduced;
      std::vector<bool> removed( p.nvars(), false );
      bool any = false;
      for( std::size_t j = 0; j < p.nvars(); ++j )
      {
         const Variable& var = p.variables[j];
         if( var.upper - var.lower >= tol_.epsilon )
            continue;
         double value = var.is_integer() ? std::round( var.lower ) : var.lower;
         result_.fixings.set( var.name, value );
         p.offset += var.objective * value;
         removed[j] = true;
         any = true;
      }
      if( !any )
         return;
      changed_ = true;

      std::vector<std::size_t> remap( p.nvars(), 0 );
      std::vector<Variable> variables;
      for( std::size_t j = 0; j < p.nvars(); ++j )
      {
         if( removed[j] )
            continue;
         remap[j] = variables.size();
         variables.push_back( p.variables[j] );
      }
      for( Constraint& row : p.constraints )
      {
         std::vector<Coefficient> kept;
         for( const Coefficient& entry : row.coefficients )
         {
            if( removed[entry.index] )
            {
               double shift = entry.value * *result_.fixings.get( p.variables[entry.index].name );
               if( std::isfinite( row.lhs ) )
                  row.lhs -= shift;
               if( std::isfinite( row.rhs ) )
                  row.rhs -= shift;
            }
            else
               kept.push_back( { remap[entry.index], entry.value } );
         }
         row.coefficients = std::move( kept );
      }
      p.variables = std::move( variables );
   }

   void
   reduce_rows()
   {
      Problem& p = result_.reduced;
      std::vector<bool> deleted( p.nconss(), false );
      for( std::size_t i = 0; i < p.nconss() && !infeasible_; ++i )
      {
         Constraint& row = p.constraints[i];
         if( row.coefficients.empty() )
         {
            if( relative_violation( row.lhs, 0.0, row.rhs ) >= tol_.delta )
               infeasible_ = true;
            deleted[i] = true;
            continue;
         }
         if( options_.normalization )
            normalize( row );
         if( redundant( i ) )
         {
            deleted[i] = true;
            continue;
         }
         if( infeasible_ )
            break;
         tighten_coefficients( i );
         if( row.coefficients.size() == 1 )
         {
            singleton_to_bounds( row );
            deleted[i] = true;
         }
      }

      if( std::find( deleted.begin(), deleted.end(), true ) == deleted.end() )
         return;
      changed_ = true;
      std::vector<Constraint> kept;
      for( std::size_t i = 0; i < p.nconss(); ++i )
      {
         if( !deleted[i] )
            kept.push_back( std::move( p.constraints[i] ) );
      }
      p.constraints = std::move( kept );
   }

   // The stored row keeps its scale; normalized sides only drive the
   // vanishing-side snap.
   void
   normalize( Constraint& row )
   {
      if( !options_.faults.has( Fault::F4 ) )
         return;
      double scale = std::abs( row.coefficients.front().value );
      double threshold = options_.faults.f4_threshold;
      for( double* side : { &row.lhs, &row.rhs } )
      {
         if( !std::isfinite( *side ) || *side == 0.0 )
            continue;
         if( std::abs( *side / scale ) < threshold )
         {
            *side = 0.0;
            changed_ = true;
         }
      }
   }

   bool
   redundant( std::size_t i )
   {
      const Problem& p = result_.reduced;
      const Constraint& row = p.constraints[i];
      double minact = min_activity( p, i );
      double maxact = max_activity( p, i );

      if( std::isfinite( minact ) && relative_violation( -kInfinity, minact, row.rhs ) >= tol_.delta )
         infeasible_ = true;
      if( std::isfinite( maxact ) && relative_violation( row.lhs, maxact, kInfinity ) >= tol_.delta )
         infeasible_ = true;
      if( infeasible_ )
         return false;

      bool lhs_implied = !std::isfinite( row.lhs )
                      || minact >= row.lhs - tol_.epsilon * std::max( 1.0, std::abs( row.lhs ) );
      bool rhs_implied = !std::isfinite( row.rhs )
                      || maxact <= row.rhs + tol_.epsilon * std::max( 1.0, std::abs( row.rhs ) );
      return lhs_implied && rhs_implied;
   }

   // One-sided rows: shrink binary coefficients that exceed what the row can
   // ever need, keeping the set of integer solutions.
   void
   tighten_coefficients( std::size_t i )
   {
      Problem& p = result_.reduced;
      Constraint& row = p.constraints[i];
      bool upper_only = !std::isfinite( row.lhs ) && std::isfinite( row.rhs );
      bool lower_only = std::isfinite( row.lhs ) && !std::isfinite( row.rhs );
      if( !upper_only && !lower_only )
         return;

      double sign = upper_only ? 1.0 : -1.0;
      double side = sign * ( upper_only ? row.rhs : row.lhs );
      for( Coefficient& entry : row.coefficients )
      {
         if( !is_binary( p.variables[entry.index] ) )
            continue;
         double maxact = upper_only ? max_activity( p, i ) : -min_activity( p, i );
         if( !std::isfinite( maxact ) )
            return;
         double a = sign * entry.value;
         double gap;
         if( a > 0.0 )
         {
            gap = side - ( maxact - a );
            if( gap <= tol_.epsilon * std::max( 1.0, std::abs( side ) ) || gap >= a )
               continue;
            a -= gap;
            side -= gap;
         }
         else
         {
            gap = side - ( maxact + a );
            if( gap <= tol_.epsilon * std::max( 1.0, std::abs( side ) ) || gap >= -a )
               continue;
            a += gap;
         }
         entry.value = sign * a;
         if( upper_only )
            row.rhs = side;
         else
            row.lhs = -side;
         changed_ = true;
      }
   }

   void
   singleton_to_bounds( const Constraint& row )
   {
      const Coefficient entry = row.coefficients.front();
      Variable& var = result_.reduced.variables[entry.index];
      double a = entry.value;
      auto fits = [&]( double x ) { return relative_violation( row.lhs, a * x, row.rhs ) < tol_.delta; };

      if( std::isfinite( row.rhs ) )
      {
         if( a > 0.0 )
            set_upper( var, row.rhs / a, fits, true );
         else
            set_lower( var, row.rhs / a, fits, true );
      }
      if( std::isfinite( row.lhs ) )
      {
         if( a > 0.0 )
            set_lower( var, row.lhs / a, fits, true );
         else
            set_upper( var, row.lhs / a, fits, true );
      }
   }

   void
   propagate()
   {
      Problem& p = result_.reduced;
      bool shifted = options_.faults.has( Fault::F1 );
      for( std::size_t i = 0; i < p.nconss() && !infeasible_; ++i )
      {
         const Constraint& row = p.constraints[i];
         for( const Coefficient& entry : row.coefficients )
         {
            Variable& var = p.variables[entry.index];
            double a = entry.value;
            if( std::isfinite( row.rhs ) )
            {
               double minres = min_activity( p, i, entry.index );
               if( std::isfinite( minres ) )
               {
                  auto fits = [&]( double x )
                  { return relative_violation( -kInfinity, minres + a * x, row.rhs ) < tol_.delta; };
                  double bound = ( row.rhs - minres ) / a;
                  if( a > 0.0 )
                     set_upper( var, bound, fits, false );
                  else
                     set_lower( var, bound, fits, false );
               }
            }
            if( std::isfinite( row.lhs ) )
            {
               double maxres = shifted ? shifted_max_activity( p, i, entry.index )
                                       : max_activity( p, i, entry.index );
               if( std::isfinite( maxres ) )
               {
                  auto fits = [&]( double x )
                  { return relative_violation( row.lhs, maxres + a * x, kInfinity ) < tol_.delta; };
                  double bound = ( row.lhs - maxres ) / a;
                  if( a > 0.0 )
                     set_lower( var, bound, fits, false );
                  else
                     set_upper( var, bound, fits, false );
               }
            }
            if( infeasible_ )
               break;
         }
      }
   }

   void
   set_upper( Variable& var, double value, const std::function<bool( double )>& fits, bool exact )
   {
      if( var.is_integer() )
      {
         value = integer_upper_bound( value, !options_.faults.has( Fault::F3 ), tol_, fits );
         if( value >= var.upper )
            return;
      }
      else
      {
         if( std::abs( value ) > kMaxDerivedBound )
            return;
         double gain = exact ? 0.0 : kMinRelativeGain * std::max( 1.0, std::abs( var.upper ) );
         if( std::isfinite( var.upper ) && value >= var.upper - gain )
            return;
      }
      var.upper = value;
      changed_ = true;
      check_bounds( var );
   }

   void
   set_lower( Variable& var, double value, const std::function<bool( double )>& fits, bool exact )
   {
      if( var.is_integer() )
      {
         value = integer_lower_bound( value, !options_.faults.has( Fault::F3 ), tol_, fits );
         if( value <= var.lower )
            return;
      }
      else
      {
         if( std::abs( value ) > kMaxDerivedBound )
            return;
         double gain = exact ? 0.0 : kMinRelativeGain * std::max( 1.0, std::abs( var.lower ) );
         if( std::isfinite( var.lower ) && value <= var.lower + gain )
            return;
      }
      var.lower = value;
      changed_ = true;
      check_bounds( var );
   }

   void
   check_bounds( const Variable& var )
   {
      if( var.is_integer() ? var.lower > var.upper
                           : var.lower > var.upper + tol_.delta * std::max( 1.0, std::abs( var.upper ) ) )
         infeasible_ = true;
   }

   const PresolveOptions& options_;
   const Tolerances& tol_;
   PresolveResult result_;
   bool changed_ = false;
   bool infeasible_ = false;
};

} // namespace

PresolveResult
presolve( const Problem& problem, const PresolveOptions& options )
{
   Presolver presolver( problem, options );
   return presolver.run();
}

} // namespace deltamip::builtin
