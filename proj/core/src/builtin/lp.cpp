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

#include "deltamip/builtin/lp.hpp"

#include <algorithm>
#include <cmath>

namespace deltamip::builtin
{

void
LpData::add_row( const std::vector<double>& coefficients, double lhs, double rhs )
{
   matrix.insert( matrix.end(), coefficients.begin(), coefficients.end() );
   row_lower.push_back( lhs );
   row_upper.push_back( rhs );
   ++nrows;
}

LpData
make_lp( const Problem& problem )
{
   LpData lp;
   lp.ncols = problem.nvars();
   lp.nrows = problem.nconss();
   lp.matrix.assign( lp.ncols * lp.nrows, 0.0 );
   for( std::size_t i = 0; i < problem.nconss(); ++i )
   {
      const Constraint& row = problem.constraints[i];
      for( const Coefficient& entry : row.coefficients )
         lp.at( i, entry.index ) = entry.value;
      lp.row_lower.push_back( row.lhs );
      lp.row_upper.push_back( row.rhs );
   }
   for( const Variable& var : problem.variables )
   {
      lp.lower.push_back( var.lower );
      lp.upper.push_back( var.upper );
      lp.cost.push_back( var.objective );
   }
   return lp;
}

namespace
{

enum class VarState
{
   Basic,
   AtLower,
   AtUpper,
   FreeZero
};

// Columns: [structural | slack | artificial]. Row i reads A_i x - s_i (+- art_i) = 0
// and the tableau is stored so that x_B(i) + sum_{j nonbasic} T_ij x_j = 0.
class Simplex
{
 public:
   Simplex( const LpData& lp, const LpOptions& options ) : lp_( lp ), options_( options )
   {
      n_ = lp.ncols;
      m_ = lp.nrows;
      total_ = n_ + 2 * m_;
      max_iterations_ = options.max_iterations > 0
                            ? options.max_iterations
                            : static_cast<long>( 50 * ( total_ + m_ ) + 1000 );
   }

   LpResult
   run()
   {
      LpResult result;
      for( std::size_t j = 0; j < n_; ++j )
      {
         if( lp_.lower[j] > lp_.upper[j] )
         {
            result.status = LpStatus::Infeasible;
            return result;
         }
      }
      for( std::size_t i = 0; i < m_; ++i )
      {
         if( lp_.row_lower[i] > lp_.row_upper[i] )
         {
            result.status = LpStatus::Infeasible;
            return result;
         }
      }

      initialize();

      // phase 1: drive artificials to zero
      cost_.assign( total_, 0.0 );
      for( std::size_t i = 0; i < m_; ++i )
         cost_[artificial( i )] = 1.0;
      LpStatus status = optimize( result );
      if( status == LpStatus::IterationLimit )
      {
         result.status = status;
         return result;
      }
      recompute_basics();
      double infeasibility = 0.0;
      for( std::size_t i = 0; i < m_; ++i )
         infeasibility = std::max( infeasibility, std::abs( value_[artificial( i )] ) );
      if( infeasibility > options_.feasibility_tolerance )
      {
         result.status = LpStatus::Infeasible;
         return result;
      }

      // phase 2: artificials are pinned to zero
      for( std::size_t i = 0; i < m_; ++i )
      {
         upper_[artificial( i )] = 0.0;
         if( state_[artificial( i )] != VarState::Basic )
            value_[artificial( i )] = 0.0;
      }
      cost_.assign( total_, 0.0 );
      for( std::size_t j = 0; j < n_; ++j )
         cost_[j] = lp_.cost[j];
      status = optimize( result );
      result.status = status;
      if( status == LpStatus::IterationLimit )
         return result;

      recompute_basics();
      result.x.assign( value_.begin(), value_.begin() + static_cast<std::ptrdiff_t>( n_ ) );
      result.objective = 0.0;
      for( std::size_t j = 0; j < n_; ++j )
         result.objective += lp_.cost[j] * result.x[j];
      return result;
   }

 private:
   std::size_t
   slack( std::size_t row ) const
   {
      return n_ + row;
   }

   std::size_t
   artificial( std::size_t row ) const
   {
      return n_ + m_ + row;
   }

   double&
   t( std::size_t row, std::size_t col )
   {
      return tableau_[row * total_ + col];
   }

   static double
   initial_value( double lower, double upper, VarState& state )
   {
      if( std::isfinite( lower ) )
      {
         state = VarState::AtLower;
         return lower;
      }
      if( std::isfinite( upper ) )
      {
         state = VarState::AtUpper;
         return upper;
      }
      state = VarState::FreeZero;
      return 0.0;
   }

   void
   initialize()
   {
      lower_.assign( total_, 0.0 );
      upper_.assign( total_, 0.0 );
      value_.assign( total_, 0.0 );
      state_.assign( total_, VarState::AtLower );
      tableau_.assign( m_ * total_, 0.0 );
      basis_.assign( m_, 0 );

      for( std::size_t j = 0; j < n_; ++j )
      {
         lower_[j] = lp_.lower[j];
         upper_[j] = lp_.upper[j];
         value_[j] = initial_value( lower_[j], upper_[j], state_[j] );
      }

      for( std::size_t i = 0; i < m_; ++i )
      {
         std::size_t s = slack( i );
         std::size_t a = artificial( i );
         lower_[s] = lp_.row_lower[i];
         upper_[s] = lp_.row_upper[i];
         lower_[a] = 0.0;
         upper_[a] = kInfinity;

         double act = 0.0;
         for( std::size_t j = 0; j < n_; ++j )
            act += lp_.at( i, j ) * value_[j];

         bool inside = ( !std::isfinite( lower_[s] ) || act >= lower_[s] )
                    && ( !std::isfinite( upper_[s] ) || act <= upper_[s] );
         if( inside )
         {
            // slack is basic: s_i - A_i x = 0
            for( std::size_t j = 0; j < n_; ++j )
               t( i, j ) = -lp_.at( i, j );
            t( i, s ) = 1.0;
            basis_[i] = s;
            state_[s] = VarState::Basic;
            value_[s] = act;
            state_[a] = VarState::AtLower;
            value_[a] = 0.0;
            upper_[a] = 0.0;
         }
         else
         {
            double side = act < lower_[s] ? lower_[s] : upper_[s];
            state_[s] = act < lower_[s] ? VarState::AtLower : VarState::AtUpper;
            value_[s] = side;
            double residual = act - side;
            double sign = residual > 0.0 ? -1.0 : 1.0;
            // sign * (A_i x - s_i) + art_i = 0
            for( std::size_t j = 0; j < n_; ++j )
               t( i, j ) = sign * lp_.at( i, j );
            t( i, s ) = -sign;
            t( i, a ) = 1.0;
            basis_[i] = a;
            state_[a] = VarState::Basic;
            value_[a] = std::abs( residual );
         }
      }
   }

   void
   compute_reduced_costs()
   {
      reduced_.assign( cost_.begin(), cost_.end() );
      for( std::size_t i = 0; i < m_; ++i )
      {
         double cb = cost_[basis_[i]];
         if( cb == 0.0 )
            continue;
         const double* row = &tableau_[i * total_];
         for( std::size_t j = 0; j < total_; ++j )
            reduced_[j] -= cb * row[j];
      }
   }

   void
   recompute_basics()
   {
      for( std::size_t i = 0; i < m_; ++i )
      {
         const double* row = &tableau_[i * total_];
         double sum = 0.0;
         for( std::size_t j = 0; j < total_; ++j )
         {
            if( state_[j] != VarState::Basic && row[j] != 0.0 )
               sum += row[j] * value_[j];
         }
         value_[basis_[i]] = -sum;
      }
   }

   LpStatus
   optimize( LpResult& result )
   {
      compute_reduced_costs();
      while( true )
      {
         if( result.iterations >= max_iterations_ )
            return LpStatus::IterationLimit;

         // Bland: first eligible column
         std::size_t entering = total_;
         double direction = 0.0;
         for( std::size_t j = 0; j < total_; ++j )
         {
            if( state_[j] == VarState::Basic || lower_[j] == upper_[j] )
               continue;
            double rc = reduced_[j];
            bool can_increase = state_[j] != VarState::AtUpper && value_[j] < upper_[j];
            bool can_decrease = state_[j] != VarState::AtLower && value_[j] > lower_[j];
            if( rc < -options_.pricing_tolerance && can_increase )
            {
               entering = j;
               direction = 1.0;
               break;
            }
            if( rc > options_.pricing_tolerance && can_decrease )
            {
               entering = j;
               direction = -1.0;
               break;
            }
         }
         if( entering == total_ )
            return LpStatus::Optimal;

         ++result.iterations;

         // ratio test; ties go to the basic variable with smallest index
         double step = kInfinity;
         std::size_t leaving_row = m_;
         bool leaving_to_upper = false;
         for( std::size_t i = 0; i < m_; ++i )
         {
            double rate = -t( i, entering ) * direction;
            if( std::abs( rate ) <= options_.pivot_tolerance )
               continue;
            std::size_t b = basis_[i];
            double limit;
            bool to_upper;
            if( rate < 0.0 )
            {
               if( !std::isfinite( lower_[b] ) )
                  continue;
               limit = ( value_[b] - lower_[b] ) / -rate;
               to_upper = false;
            }
            else
            {
               if( !std::isfinite( upper_[b] ) )
                  continue;
               limit = ( upper_[b] - value_[b] ) / rate;
               to_upper = true;
            }
            limit = std::max( limit, 0.0 );
            if( leaving_row == m_ || limit < step - 1e-12
                || ( limit <= step + 1e-12 && b < basis_[leaving_row] ) )
            {
               step = limit;
               leaving_row = i;
               leaving_to_upper = to_upper;
            }
         }

         double flip = std::isfinite( lower_[entering] ) && std::isfinite( upper_[entering] )
                           ? upper_[entering] - lower_[entering]
                           : kInfinity;

         if( leaving_row == m_ && !std::isfinite( flip ) )
         {
            if( entering < n_ )
               extract_ray( result, entering, direction );
            else
               extract_ray( result, entering, direction );
            return LpStatus::Unbounded;
         }

         if( flip <= step )
         {
            move( entering, direction * flip );
            if( direction > 0 )
            {
               state_[entering] = VarState::AtUpper;
               value_[entering] = upper_[entering];
            }
            else
            {
               state_[entering] = VarState::AtLower;
               value_[entering] = lower_[entering];
            }
            continue;
         }

         move( entering, direction * step );
         std::size_t leaving = basis_[leaving_row];
         pivot( leaving_row, entering );
         state_[leaving] = leaving_to_upper ? VarState::AtUpper : VarState::AtLower;
         value_[leaving] = leaving_to_upper ? upper_[leaving] : lower_[leaving];
      }
   }

   // Shifts a nonbasic variable and updates the basics accordingly.
   void
   move( std::size_t col, double delta )
   {
      if( delta == 0.0 )
         return;
      value_[col] += delta;
      for( std::size_t i = 0; i < m_; ++i )
      {
         double coef = t( i, col );
         if( coef != 0.0 )
            value_[basis_[i]] -= coef * delta;
      }
   }

   void
   pivot( std::size_t row, std::size_t col )
   {
      double* pivot_row = &tableau_[row * total_];
      double inverse = 1.0 / pivot_row[col];
      for( std::size_t j = 0; j < total_; ++j )
         pivot_row[j] *= inverse;
      pivot_row[col] = 1.0;

      for( std::size_t i = 0; i < m_; ++i )
      {
         if( i == row )
            continue;
         double* current = &tableau_[i * total_];
         double factor = current[col];
         if( factor == 0.0 )
            continue;
         for( std::size_t j = 0; j < total_; ++j )
         {
            if( pivot_row[j] != 0.0 )
               current[j] -= factor * pivot_row[j];
         }
         current[col] = 0.0;
      }

      double factor = reduced_[col];
      if( factor != 0.0 )
      {
         for( std::size_t j = 0; j < total_; ++j )
         {
            if( pivot_row[j] != 0.0 )
               reduced_[j] -= factor * pivot_row[j];
         }
         reduced_[col] = 0.0;
      }

      basis_[row] = col;
      state_[col] = VarState::Basic;
   }

   void
   extract_ray( LpResult& result, std::size_t entering, double direction )
   {
      std::vector<double> ray( total_, 0.0 );
      ray[entering] = direction;
      for( std::size_t i = 0; i < m_; ++i )
         ray[basis_[i]] = -t( i, entering ) * direction;
      result.ray.assign( ray.begin(), ray.begin() + static_cast<std::ptrdiff_t>( n_ ) );
      result.x.assign( value_.begin(), value_.begin() + static_cast<std::ptrdiff_t>( n_ ) );
   }

   const LpData& lp_;
   const LpOptions& options_;
   std::size_t n_ = 0;
   std::size_t m_ = 0;
   std::size_t total_ = 0;
   long max_iterations_ = 0;

   std::vector<double> tableau_;
   std::vector<std::size_t> basis_;
   std::vector<VarState> state_;
   std::vector<double> value_;
   std::vector<double> lower_;
   std::vector<double> upper_;
   std::vector<double> cost_;
   std::vector<double> reduced_;
};

} // namespace

LpResult
solve_lp( const LpData& lp, const LpOptions& options )
{
   Simplex simplex( lp, options );
   return simplex.run();
}

} // namespace deltamip::builtin
