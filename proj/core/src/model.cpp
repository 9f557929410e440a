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

#include "deltamip/model.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace deltamip
{

std::size_t
Problem::nnonzeros() const
{
   std::size_t count = 0;
   for( const Constraint& row : constraints )
      count += row.coefficients.size();
   return count;
}

std::optional<std::size_t>
Problem::find_variable( const std::string& name ) const
{
   for( std::size_t i = 0; i < variables.size(); ++i )
   {
      if( variables[i].name == name )
         return i;
   }
   return std::nullopt;
}

std::optional<std::size_t>
Problem::find_constraint( const std::string& name ) const
{
   for( std::size_t i = 0; i < constraints.size(); ++i )
   {
      if( constraints[i].name == name )
         return i;
   }
   return std::nullopt;
}

void
Problem::validate( const Tolerances& tolerances ) const
{
   std::unordered_set<std::string> names;
   for( const Variable& var : variables )
   {
      if( !names.insert( var.name ).second )
         throw ModelError( "duplicate variable name '" + var.name + "'" );
      if( var.lower > var.upper + tolerances.epsilon )
         throw ModelError( "variable '" + var.name + "' has lower bound above upper bound" );
   }
   names.clear();
   for( const Constraint& row : constraints )
   {
      if( !names.insert( row.name ).second )
         throw ModelError( "duplicate constraint name '" + row.name + "'" );
      if( row.lhs > row.rhs + tolerances.epsilon )
         throw ModelError( "constraint '" + row.name + "' has lhs above rhs" );
      for( std::size_t k = 0; k < row.coefficients.size(); ++k )
      {
         const Coefficient& entry = row.coefficients[k];
         if( entry.index >= variables.size() )
            throw ModelError( "constraint '" + row.name + "' references an unknown column" );
         if( entry.value == 0.0 )
            throw ModelError( "constraint '" + row.name + "' stores an explicit zero" );
         if( k > 0 && row.coefficients[k - 1].index >= entry.index )
            throw ModelError( "constraint '" + row.name + "' is not sorted by column" );
      }
   }
}

Settings::Settings( std::initializer_list<Entry> entries )
{
   for( const Entry& entry : entries )
      set( entry.first, entry.second );
}

void
Settings::set( const std::string& name, std::string value )
{
   for( Entry& entry : entries_ )
   {
      if( entry.first == name )
      {
         entry.second = std::move( value );
         return;
      }
   }
   entries_.emplace_back( name, std::move( value ) );
}

std::optional<std::string>
Settings::get( const std::string& name ) const
{
   for( const Entry& entry : entries_ )
   {
      if( entry.first == name )
         return entry.second;
   }
   return std::nullopt;
}

bool
Settings::erase( const std::string& name )
{
   auto it = std::find_if( entries_.begin(), entries_.end(),
                           [&]( const Entry& entry ) { return entry.first == name; } );
   if( it == entries_.end() )
      return false;
   entries_.erase( it );
   return true;
}

std::optional<double>
Solution::get( const std::string& name ) const
{
   auto it = values_.find( name );
   if( it == values_.end() )
      return std::nullopt;
   return it->second;
}

double
Solution::at( const std::string& name ) const
{
   auto it = values_.find( name );
   if( it == values_.end() )
      throw ModelError( "solution has no value for variable '" + name + "'" );
   return it->second;
}

std::vector<double>
to_dense( const Problem& problem, const Solution& solution, bool missing_as_zero )
{
   std::vector<double> values( problem.nvars(), 0.0 );
   for( std::size_t j = 0; j < problem.nvars(); ++j )
   {
      auto value = solution.get( problem.variables[j].name );
      if( value )
         values[j] = *value;
      else if( !missing_as_zero )
         throw ModelError( "solution has no value for variable '" + problem.variables[j].name + "'" );
   }
   return values;
}

Solution
from_dense( const Problem& problem, const std::vector<double>& values )
{
   Solution solution;
   for( std::size_t j = 0; j < problem.nvars(); ++j )
      solution.set( problem.variables[j].name, values[j] );
   return solution;
}

double
activity( const Constraint& row, const std::vector<double>& values )
{
   double sum = 0.0;
   for( const Coefficient& entry : row.coefficients )
      sum += entry.value * values[entry.index];
   return sum;
}

double
activity( const Problem& problem, std::size_t row, const Solution& solution )
{
   double sum = 0.0;
   for( const Coefficient& entry : problem.constraints.at( row ).coefficients )
      sum += entry.value * solution.at( problem.variables[entry.index].name );
   return sum;
}

double
relative_violation( double lhs, double value, double rhs )
{
   double violation = 0.0;
   if( std::isfinite( rhs ) && value > rhs )
      violation = ( value - rhs ) / std::max( { 1.0, std::abs( rhs ), std::abs( value ) } );
   if( std::isfinite( lhs ) && value < lhs )
      violation = std::max( violation, ( lhs - value ) / std::max( { 1.0, std::abs( lhs ), std::abs( value ) } ) );
   return violation;
}

double
relative_violation( const Problem& problem, std::size_t row, const Solution& solution )
{
   const Constraint& cons = problem.constraints.at( row );
   return relative_violation( cons.lhs, activity( problem, row, solution ), cons.rhs );
}

namespace
{

double
bound_violation( double lower, double value, double upper )
{
   double violation = 0.0;
   if( std::isfinite( lower ) && value < lower )
      violation = ( lower - value ) / std::max( 1.0, std::abs( lower ) );
   if( std::isfinite( upper ) && value > upper )
      violation = std::max( violation, ( value - upper ) / std::max( 1.0, std::abs( upper ) ) );
   return violation;
}

void
record( FeasibilityReport& report, ViolationKind kind, std::size_t index, double violation )
{
   report.feasible = false;
   if( report.kind == ViolationKind::None || violation > report.violation )
   {
      report.kind = kind;
      report.index = index;
      report.violation = violation;
   }
}

} // namespace

FeasibilityReport
is_feasible( const Problem& problem, const Solution& solution, const Tolerances& tolerances )
{
   FeasibilityReport report;
   std::vector<double> values( problem.nvars(), 0.0 );
   bool complete = true;

   for( std::size_t j = 0; j < problem.nvars(); ++j )
   {
      const Variable& var = problem.variables[j];
      auto value = solution.get( var.name );
      if( !value )
      {
         record( report, ViolationKind::Missing, j, kInfinity );
         complete = false;
         continue;
      }
      values[j] = *value;

      double violation = bound_violation( var.lower, *value, var.upper );
      if( violation > tolerances.delta )
         record( report, ViolationKind::Bound, j, violation );

      if( var.is_integer() )
      {
         double fractionality = std::abs( *value - std::round( *value ) );
         if( fractionality >= tolerances.delta )
            record( report, ViolationKind::Integrality, j, fractionality );
      }
   }

   if( !complete )
      return report;

   for( std::size_t i = 0; i < problem.nconss(); ++i )
   {
      const Constraint& row = problem.constraints[i];
      double violation = relative_violation( row.lhs, activity( row, values ), row.rhs );
      if( violation >= tolerances.delta )
         record( report, ViolationKind::Constraint, i, violation );
   }
   return report;
}

double
evaluate_objective( const Problem& problem, const Solution& solution )
{
   double value = 0.0;
   for( const Variable& var : problem.variables )
   {
      if( var.objective != 0.0 )
         value += var.objective * solution.at( var.name );
   }
   return value + problem.offset;
}

double
max_activity( const Problem& problem, std::size_t row, std::optional<std::size_t> excluded )
{
   double sum = 0.0;
   for( const Coefficient& entry : problem.constraints.at( row ).coefficients )
   {
      if( excluded && entry.index == *excluded )
         continue;
      const Variable& var = problem.variables[entry.index];
      double bound = entry.value > 0.0 ? var.upper : var.lower;
      if( !std::isfinite( bound ) )
         return kInfinity;
      sum += entry.value * bound;
   }
   return sum;
}

double
min_activity( const Problem& problem, std::size_t row, std::optional<std::size_t> excluded )
{
   double sum = 0.0;
   for( const Coefficient& entry : problem.constraints.at( row ).coefficients )
   {
      if( excluded && entry.index == *excluded )
         continue;
      const Variable& var = problem.variables[entry.index];
      double bound = entry.value > 0.0 ? var.lower : var.upper;
      if( !std::isfinite( bound ) )
         return -kInfinity;
      sum += entry.value * bound;
   }
   return sum;
}

bool
verify_ray( const Problem& problem, const Solution& ray, const Tolerances& tolerances )
{
   std::vector<double> direction = to_dense( problem, ray, true );

   bool nonzero = std::any_of( direction.begin(), direction.end(),
                               [&]( double value ) { return std::abs( value ) > tolerances.epsilon; } );
   if( !nonzero )
      return false;

   double improvement = 0.0;
   for( std::size_t j = 0; j < problem.nvars(); ++j )
      improvement += problem.variables[j].objective * direction[j];
   if( improvement >= -tolerances.epsilon )
      return false;

   for( const Constraint& row : problem.constraints )
   {
      double change = activity( row, direction );
      if( std::isfinite( row.rhs ) && change > tolerances.epsilon )
         return false;
      if( std::isfinite( row.lhs ) && change < -tolerances.epsilon )
         return false;
   }

   for( std::size_t j = 0; j < problem.nvars(); ++j )
   {
      const Variable& var = problem.variables[j];
      if( std::isfinite( var.lower ) && direction[j] < -tolerances.epsilon )
         return false;
      if( std::isfinite( var.upper ) && direction[j] > tolerances.epsilon )
         return false;
   }
   return true;
}

const char*
to_string( ViolationKind kind )
{
   switch( kind )
   {
   case ViolationKind::None:
      return "none";
   case ViolationKind::Constraint:
      return "constraint";
   case ViolationKind::Bound:
      return "bound";
   case ViolationKind::Integrality:
      return "integrality";
   case ViolationKind::Missing:
      return "missing";
   }
   return "unknown";
}

} // namespace deltamip
