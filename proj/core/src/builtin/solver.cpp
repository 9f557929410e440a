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

#include "deltamip/builtin/solver.hpp"

#include "deltamip/builtin/lp.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <numeric>
#include <queue>
#include <random>
#include <stdexcept>

namespace deltamip::builtin
{

namespace
{

bool
parse_bool( const std::string& key, const std::string& value )
{
   if( value == "true" || value == "1" || value == "on" || value == "yes" || value == "TRUE" )
      return true;
   if( value == "false" || value == "0" || value == "off" || value == "no" || value == "FALSE" )
      return false;
   throw std::invalid_argument( "setting '" + key + "' expects a boolean, got '" + value + "'" );
}

template <typename T>
T
parse_integer( const std::string& key, const std::string& value )
{
   T result{};
   auto [end, error] = std::from_chars( value.data(), value.data() + value.size(), result );
   if( error != std::errc() || end != value.data() + value.size() )
      throw std::invalid_argument( "setting '" + key + "' expects an integer, got '" + value + "'" );
   return result;
}

double
parse_real( const std::string& key, const std::string& value )
{
   try
   {
      std::size_t used = 0;
      double result = std::stod( value, &used );
      if( used == value.size() )
         return result;
   }
   catch( const std::exception& )
   {
   }
   throw std::invalid_argument( "setting '" + key + "' expects a number, got '" + value + "'" );
}

} // namespace

const std::vector<std::string>&
SolverSettings::keys()
{
   static const std::vector<std::string> names = {
       "presolve/enabled",  "presolve/propagation", "presolve/normalization",
       "presolve/maxrounds", "separation/objcut",   "branching/rule",
       "randomization/seed", "fault/f1",            "fault/f2",
       "fault/f3",          "fault/f4",             "fault/f5",
       "fault/f4/threshold", "limits/time",         "limits/nodes" };
   return names;
}

void
SolverSettings::apply( const Settings& settings )
{
   for( const auto& [key, value] : settings.entries() )
   {
      if( key == "presolve/enabled" )
         presolve = parse_bool( key, value );
      else if( key == "presolve/propagation" )
         propagation = parse_bool( key, value );
      else if( key == "presolve/normalization" )
         normalization = parse_bool( key, value );
      else if( key == "presolve/maxrounds" )
      {
         presolve_rounds = parse_integer<int>( key, value );
         if( presolve_rounds < 0 )
            presolve_rounds = 1000;
      }
      else if( key == "separation/objcut" )
         objective_cut = parse_bool( key, value );
      else if( key == "branching/rule" )
      {
         if( value == "mostfrac" )
            branching = BranchingRule::MostFractional;
         else if( value == "first" )
            branching = BranchingRule::FirstFractional;
         else
            throw std::invalid_argument( "setting 'branching/rule' expects mostfrac or first" );
      }
      else if( key == "randomization/seed" )
         seed = parse_integer<std::uint64_t>( key, value );
      else if( key.size() == 8 && key.rfind( "fault/f", 0 ) == 0 )
      {
         auto fault = parse_fault( key.substr( 6 ) );
         if( !fault )
            throw std::invalid_argument( "unknown setting '" + key + "'" );
         faults.set( *fault, parse_bool( key, value ) );
      }
      else if( key == "fault/f4/threshold" )
         faults.f4_threshold = parse_real( key, value );
      else if( key == "limits/time" )
         time_limit = parse_real( key, value );
      else if( key == "limits/nodes" )
         node_limit = parse_integer<long>( key, value );
      else
         throw std::invalid_argument( "unknown setting '" + key + "'" );
   }
}

namespace
{

using Clock = std::chrono::steady_clock;

bool
has_integral_objective( const Problem& problem )
{
   bool any = false;
   for( const Variable& var : problem.variables )
   {
      if( var.objective == 0.0 )
         continue;
      if( !var.is_integer() || var.objective != std::round( var.objective ) )
         return false;
      any = true;
   }
   return any;
}

double
dot( const std::vector<double>& a, const std::vector<double>& b )
{
   double sum = 0.0;
   for( std::size_t j = 0; j < a.size(); ++j )
      sum += a[j] * b[j];
   return sum;
}

struct Node
{
   std::vector<double> lower;
   std::vector<double> upper;
   double bound;
   long id;
};

struct NodeOrder
{
   bool
   operator()( const Node& a, const Node& b ) const
   {
      if( a.bound != b.bound )
         return a.bound > b.bound;
      return a.id > b.id;
   }
};

class Search
{
 public:
   Search( const Problem& problem, const SolverSettings& settings, const SolveLimits& limits,
           const Tolerances& tolerances )
       : problem_( problem ), settings_( settings ), tol_( tolerances ), start_( Clock::now() )
   {
      time_limit_ = settings.time_limit;
      if( limits.time_limit && ( !time_limit_ || *limits.time_limit < *time_limit_ ) )
         time_limit_ = limits.time_limit;
      node_limit_ = settings.node_limit;
      if( limits.node_limit && ( !node_limit_ || *limits.node_limit < *node_limit_ ) )
         node_limit_ = limits.node_limit;
   }

   SolveOutcome
   run()
   {
      SolveOutcome outcome = solve();
      outcome.statistics.nodes = nodes_;
      outcome.statistics.lp_iterations = iterations_;
      outcome.statistics.seconds = elapsed();
      return outcome;
   }

 private:
   double
   elapsed() const
   {
      return std::chrono::duration<double>( Clock::now() - start_ ).count();
   }

   SolveOutcome
   solve()
   {
      SolveOutcome outcome;
      PresolveResult pre;
      if( settings_.presolve )
      {
         PresolveOptions options;
         options.propagation = settings_.propagation;
         options.normalization = settings_.normalization;
         options.max_rounds = settings_.presolve_rounds;
         options.faults = settings_.faults;
         options.tolerances = tol_;
         pre = presolve( problem_, options );
      }
      else
         pre.reduced = problem_;

      if( pre.status == PresolveStatus::Infeasible )
      {
         outcome.status = SolveStatus::Infeasible;
         outcome.dual_bound = kInfinity;
         return outcome;
      }
      if( pre.status == PresolveStatus::Solved )
      {
         outcome.status = SolveStatus::Optimal;
         outcome.dual_bound = pre.reduced.offset;
         outcome.primal_bound = pre.reduced.offset;
         if( !settings_.faults.has( Fault::F5 ) )
            outcome.solutions.push_back( pre.fixings );
         return outcome;
      }

      reduced_ = &pre.reduced;
      SolveOutcome result = search();
      for( Solution& solution : result.solutions )
         solution = postsolve( pre, solution );
      if( result.ray )
      {
         Solution ray = *result.ray;
         for( const auto& [name, value] : pre.fixings.values() )
            ray.set( name, 0.0 );
         result.ray = std::move( ray );
      }
      return result;
   }

   LpResult
   solve_node( const LpData& lp )
   {
      LpResult result = solve_lp( lp );
      iterations_ += result.iterations;
      if( result.status == LpStatus::IterationLimit )
         throw std::runtime_error( "simplex iteration limit reached" );
      return result;
   }

   // Adds cost*x >= cutoff when the objective is integral.
   void
   add_objective_cut( LpData& lp, const LpResult& root )
   {
      if( !settings_.objective_cut || !has_integral_objective( *reduced_ ) )
         return;

      double value = root.objective;
      double cutoff;
      if( settings_.faults.has( Fault::F2 ) )
      {
         LpData anti = lp;
         for( double& c : anti.cost )
            c = -c;
         LpResult other = solve_node( anti );
         if( other.status != LpStatus::Optimal )
            return;
         std::vector<double> interior( lp.ncols );
         for( std::size_t j = 0; j < lp.ncols; ++j )
            interior[j] = 0.5 * ( root.x[j] + other.x[j] );
         double inner = dot( lp.cost, interior );
         if( std::abs( inner - std::round( inner ) ) <= tol_.epsilon )
            return;
         cutoff = std::ceil( inner );
      }
      else
         cutoff = std::ceil( value - tol_.delta * std::max( 1.0, std::abs( value ) ) );

      if( cutoff <= value + tol_.epsilon )
         return;
      lp.add_row( lp.cost, cutoff, kInfinity );
   }

   std::size_t
   select_branching( const std::vector<double>& x ) const
   {
      std::size_t best = x.size();
      double best_score = 0.0;
      for( std::size_t k = 0; k < order_.size(); ++k )
      {
         std::size_t j = order_[k];
         if( !reduced_->variables[j].is_integer() )
            continue;
         double fraction = x[j] - std::floor( x[j] );
         double score = std::min( fraction, 1.0 - fraction );
         if( score <= tol_.delta )
            continue;
         if( settings_.branching == BranchingRule::FirstFractional )
            return j;
         if( score > best_score )
         {
            best = j;
            best_score = score;
         }
      }
      return best;
   }

   void
   consider_incumbent( const std::vector<double>& x )
   {
      std::vector<double> rounded = x;
      for( std::size_t j = 0; j < rounded.size(); ++j )
      {
         if( reduced_->variables[j].is_integer() )
            rounded[j] = std::round( rounded[j] );
      }
      Solution candidate = from_dense( *reduced_, rounded );
      if( !is_feasible( *reduced_, candidate, tol_ ) )
         candidate = from_dense( *reduced_, x );
      double value = evaluate_objective( *reduced_, candidate );
      if( value < incumbent_value_ )
      {
         incumbent_value_ = value;
         incumbent_ = std::move( candidate );
      }
   }

   bool
   prunable( double bound ) const
   {
      return bound >= incumbent_value_ - tol_.epsilon * std::max( 1.0, std::abs( incumbent_value_ ) );
   }

   SolveOutcome
   search()
   {
      const Problem& r = *reduced_;
      SolveOutcome outcome;
      LpData lp = make_lp( r );

      order_.resize( r.nvars() );
      std::iota( order_.begin(), order_.end(), std::size_t{ 0 } );
      if( settings_.seed != 0 )
      {
         std::mt19937_64 engine( settings_.seed );
         std::shuffle( order_.begin(), order_.end(), engine );
      }

      LpResult root = solve_node( lp );
      if( root.status == LpStatus::Infeasible )
      {
         outcome.status = SolveStatus::Infeasible;
         outcome.dual_bound = kInfinity;
         return outcome;
      }
      if( root.status == LpStatus::Unbounded )
      {
         outcome.status = SolveStatus::Unbounded;
         outcome.primal_bound = -kInfinity;
         outcome.ray = from_dense( r, root.ray );
         return outcome;
      }

      std::size_t rows_before = lp.nrows;
      add_objective_cut( lp, root );
      if( lp.nrows != rows_before )
      {
         root = solve_node( lp );
         if( root.status != LpStatus::Optimal )
         {
            outcome.status = SolveStatus::Infeasible;
            outcome.dual_bound = kInfinity;
            return outcome;
         }
      }

      std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
      long next_id = 0;
      open.push( { lp.lower, lp.upper, root.objective + r.offset, next_id++ } );
      bool first = true;
      bool limited = false;

      while( !open.empty() )
      {
         if( ( node_limit_ && nodes_ >= *node_limit_ ) || ( time_limit_ && elapsed() >= *time_limit_ ) )
         {
            limited = true;
            break;
         }
         Node node = open.top();
         open.pop();
         if( prunable( node.bound ) )
            continue;
         ++nodes_;

         LpResult relaxation;
         if( first )
         {
            relaxation = root;
            first = false;
         }
         else
         {
            lp.lower = node.lower;
            lp.upper = node.upper;
            relaxation = solve_node( lp );
         }
         if( relaxation.status != LpStatus::Optimal )
            continue;
         double bound = relaxation.objective + r.offset;
         if( prunable( bound ) )
            continue;

         std::size_t j = select_branching( relaxation.x );
         if( j == relaxation.x.size() )
         {
            consider_incumbent( relaxation.x );
            continue;
         }

         double value = relaxation.x[j];
         Node down{ node.lower, node.upper, bound, next_id++ };
         down.upper[j] = std::floor( value );
         Node up{ node.lower, node.upper, bound, next_id++ };
         up.lower[j] = std::ceil( value );
         open.push( std::move( down ) );
         open.push( std::move( up ) );
      }

      if( incumbent_ )
      {
         outcome.solutions.push_back( *incumbent_ );
         outcome.primal_bound = incumbent_value_;
      }
      if( limited )
      {
         outcome.status = SolveStatus::LimitReached;
         double dual = incumbent_value_;
         while( !open.empty() )
         {
            dual = std::min( dual, open.top().bound );
            open.pop();
         }
         outcome.dual_bound = dual;
         return outcome;
      }
      if( incumbent_ )
      {
         outcome.status = SolveStatus::Optimal;
         outcome.dual_bound = incumbent_value_;
      }
      else
      {
         outcome.status = SolveStatus::Infeasible;
         outcome.dual_bound = kInfinity;
      }
      return outcome;
   }

   const Problem& problem_;
   const SolverSettings& settings_;
   const Tolerances& tol_;
   Clock::time_point start_;
   std::optional<double> time_limit_;
   std::optional<long> node_limit_;

   const Problem* reduced_ = nullptr;
   std::vector<std::size_t> order_;
   std::optional<Solution> incumbent_;
   double incumbent_value_ = kInfinity;
   long nodes_ = 0;
   long iterations_ = 0;
};

} // namespace

SolveOutcome
branch_and_bound( const Problem& problem, const SolverSettings& settings, const SolveLimits& limits,
                  const Tolerances& tolerances )
{
   Search search( problem, settings, limits, tolerances );
   return search.run();
}

BuiltinBackend::BuiltinBackend( FaultSpec faults, std::uint64_t seed )
{
   defaults_.faults = faults;
   defaults_.seed = seed;
   effective_ = defaults_;
}

void
BuiltinBackend::do_setup()
{
   SolverSettings effective = defaults_;
   effective.apply( settings_ );
   effective_ = effective;
}

SolveOutcome
BuiltinBackend::solve()
{
   return branch_and_bound( problem_, effective_, limits_ );
}

} // namespace deltamip::builtin
