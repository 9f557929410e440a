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

#ifndef DELTAMIP_MODEL_HPP
#define DELTAMIP_MODEL_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace deltamip
{

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

class ModelError : public std::runtime_error
{
 public:
   using std::runtime_error::runtime_error;
};

/// Numerical tolerances shared by every component.
///
/// `epsilon` decides equality of two numbers (|a - b| < epsilon), `delta` is
/// the relative feasibility tolerance and every value whose magnitude reaches
/// `infinity` is read as an infinite bound or side.
struct Tolerances
{
   double epsilon = 1e-9;
   double delta = 1e-6;
   double infinity = 1e20;

   bool
   is_equal( double a, double b ) const
   {
      return std::abs( a - b ) < epsilon;
   }

   bool
   is_infinite( double value ) const
   {
      return value >= infinity || value <= -infinity;
   }

   /// Maps values beyond the infinity threshold onto +-inf.
   double
   normalize( double value ) const
   {
      if( value >= infinity )
         return kInfinity;
      if( value <= -infinity )
         return -kInfinity;
      return value;
   }
};

enum class VarType
{
   Continuous,
   Integer
};

struct Variable
{
   std::string name;
   double lower = 0.0;
   double upper = kInfinity;
   double objective = 0.0;
   VarType type = VarType::Continuous;

   bool
   is_integer() const
   {
      return type == VarType::Integer;
   }

   friend bool operator==( const Variable&, const Variable& ) = default;
};

struct Coefficient
{
   std::size_t index;
   double value;

   friend bool operator==( const Coefficient&, const Coefficient& ) = default;
};

/// A row lhs <= sum(coefficients) <= rhs. Coefficients are sorted by variable
/// index, free of duplicates and free of explicit zeros.
struct Constraint
{
   std::string name;
   std::vector<Coefficient> coefficients;
   double lhs = -kInfinity;
   double rhs = kInfinity;

   friend bool operator==( const Constraint&, const Constraint& ) = default;
};

enum class ObjSense
{
   Minimize,
   Maximize
};

/// Mixed-integer program in minimization form. `original_sense` only records
/// how the instance was stated on input so writers can restore it.
struct Problem
{
   std::string name;
   std::vector<Variable> variables;
   std::vector<Constraint> constraints;
   double offset = 0.0;
   ObjSense original_sense = ObjSense::Minimize;

   std::size_t
   nvars() const
   {
      return variables.size();
   }

   std::size_t
   nconss() const
   {
      return constraints.size();
   }

   std::size_t
   nnonzeros() const;

   std::optional<std::size_t>
   find_variable( const std::string& name ) const;

   std::optional<std::size_t>
   find_constraint( const std::string& name ) const;

   /// Throws ModelError when an index is out of range, coefficients are not
   /// sorted or contain zeros, names repeat, or a bound/side pair is inverted.
   void
   validate( const Tolerances& tolerances = {} ) const;

   friend bool operator==( const Problem&, const Problem& ) = default;
};

/// Ordered parameter map. Values stay opaque strings.
class Settings
{
 public:
   using Entry = std::pair<std::string, std::string>;

   Settings() = default;
   Settings( std::initializer_list<Entry> entries );

   /// Inserts or overwrites while keeping the original position of a key.
   void
   set( const std::string& name, std::string value );

   std::optional<std::string>
   get( const std::string& name ) const;

   bool
   contains( const std::string& name ) const
   {
      return get( name ).has_value();
   }

   bool
   erase( const std::string& name );

   const std::vector<Entry>&
   entries() const
   {
      return entries_;
   }

   std::size_t
   size() const
   {
      return entries_.size();
   }

   bool
   empty() const
   {
      return entries_.empty();
   }

   friend bool operator==( const Settings&, const Settings& ) = default;

 private:
   std::vector<Entry> entries_;
};

/// Assignment of values to variable names. Values of variables that were
/// removed from a problem stay in the map.
class Solution
{
 public:
   Solution() = default;
   Solution( std::initializer_list<std::pair<const std::string, double>> values )
       : values_( values )
   {
   }

   void
   set( const std::string& name, double value )
   {
      values_[name] = value;
   }

   std::optional<double>
   get( const std::string& name ) const;

   /// Throws ModelError for unknown names.
   double
   at( const std::string& name ) const;

   bool
   contains( const std::string& name ) const
   {
      return values_.count( name ) != 0;
   }

   std::size_t
   size() const
   {
      return values_.size();
   }

   const std::map<std::string, double>&
   values() const
   {
      return values_;
   }

   friend bool operator==( const Solution&, const Solution& ) = default;

 private:
   std::map<std::string, double> values_;
};

/// Dense value vector in problem column order; throws ModelError if a
/// variable is missing and `missing_as_zero` is false.
std::vector<double>
to_dense( const Problem& problem, const Solution& solution, bool missing_as_zero = false );

Solution
from_dense( const Problem& problem, const std::vector<double>& values );

// -- evaluation ------------------------------------------------------------

/// Row activity summed left to right in stored order.
double
activity( const Problem& problem, std::size_t row, const Solution& solution );

double
activity( const Constraint& row, const std::vector<double>& values );

double
relative_violation( const Problem& problem, std::size_t row, const Solution& solution );

/// Relative violation of lhs <= value <= rhs with the scaling
/// max{1, |side|, |value|}; infinite sides never contribute.
double
relative_violation( double lhs, double value, double rhs );

enum class ViolationKind
{
   None,
   Constraint,
   Bound,
   Integrality,
   Missing
};

struct FeasibilityReport
{
   bool feasible = true;
   ViolationKind kind = ViolationKind::None;
   std::size_t index = 0;
   double violation = 0.0;

   explicit
   operator bool() const
   {
      return feasible;
   }
};

FeasibilityReport
is_feasible( const Problem& problem, const Solution& solution, const Tolerances& tolerances = {} );

double
evaluate_objective( const Problem& problem, const Solution& solution );

/// Maximal activity of a row with the variable `excluded` left out; +inf if
/// a contributing bound is infinite.
double
max_activity( const Problem& problem, std::size_t row,
              std::optional<std::size_t> excluded = std::nullopt );

double
min_activity( const Problem& problem, std::size_t row,
              std::optional<std::size_t> excluded = std::nullopt );

/// Checks that `ray` is a nonzero improving direction of the recession cone.
bool
verify_ray( const Problem& problem, const Solution& ray, const Tolerances& tolerances = {} );

const char*
to_string( ViolationKind kind );

} // namespace deltamip

#endif
