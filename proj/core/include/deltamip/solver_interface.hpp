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

#ifndef DELTAMIP_SOLVER_INTERFACE_HPP
#define DELTAMIP_SOLVER_INTERFACE_HPP

#include "deltamip/model.hpp"

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace deltamip
{

enum class SolveStatus
{
   Optimal,
   Infeasible,
   Unbounded,
   LimitReached,
   Error
};

const char*
to_string( SolveStatus status );

struct SolveStatistics
{
   long nodes = 0;
   long lp_iterations = 0;
   double seconds = 0.0;

   friend bool operator==( const SolveStatistics&, const SolveStatistics& ) = default;
};

struct SolveOutcome
{
   SolveStatus status = SolveStatus::Error;
   double dual_bound = -kInfinity;
   double primal_bound = kInfinity;
   /// Best solution first.
   std::vector<Solution> solutions;
   std::optional<Solution> ray;
   /// Negative for backend-internal errors, 0 otherwise.
   int internal_code = 0;
   std::string message;
   SolveStatistics statistics;

   friend bool operator==( const SolveOutcome&, const SolveOutcome& ) = default;
};

/// Signed return code of one solve: 0 passes, positive codes are detected
/// bugs and negative codes are backend-internal errors.
using FailCode = int;

namespace fail
{
inline constexpr FailCode kPass = 0;
inline constexpr FailCode kDual = 1;
inline constexpr FailCode kPrimal = 2;
inline constexpr FailCode kObjective = 3;
inline constexpr FailCode kRay = 4;
inline constexpr FailCode kCrash = -1;
inline constexpr FailCode kParse = -2;
inline constexpr FailCode kTimeout = -3;
} // namespace fail

using Passcodes = std::set<FailCode>;

struct SolveLimits
{
   std::optional<double> time_limit;
   std::optional<long> node_limit;
};

/// Lifecycle shared by all solvers: setup() copies the pair, solve() runs it.
class SolverBackend
{
 public:
   virtual ~SolverBackend() = default;

   virtual std::string
   name() const = 0;

   /// Throws std::invalid_argument when the settings are rejected.
   void
   setup( const Problem& problem, const Settings& settings, const SolveLimits& limits );

   virtual SolveOutcome
   solve() = 0;

   /// Writes the pair passed to the last setup().
   void
   write( const std::filesystem::path& instance, const std::filesystem::path& settings ) const;

 protected:
   virtual void
   do_setup()
   {
   }

   Problem problem_;
   Settings settings_;
   SolveLimits limits_;
};

/// setup + solve with every exception turned into an error outcome.
SolveOutcome
call_solver( SolverBackend& backend, const Problem& problem, const Settings& settings,
             const SolveLimits& limits = {} );

bool
check_dual_fail( const SolveOutcome& outcome, const Problem& problem, const Solution& reference,
                 const Tolerances& tolerances = {} );

/// 0, kPrimal for an infeasible (or missing) solution, kRay for an invalid ray.
FailCode
classify_primal( const SolveOutcome& outcome, const Problem& problem,
                 const Tolerances& tolerances = {} );

bool
check_primal_fail( const SolveOutcome& outcome, const Problem& problem,
                   const Tolerances& tolerances = {} );

bool
check_objective_fail( const SolveOutcome& outcome, const Problem& problem,
                      const Tolerances& tolerances = {} );

/// First triggered code in the order internal, ray, primal, dual, objective;
/// a code listed in `passcodes` becomes 0. Without a reference the dual
/// check is skipped.
FailCode
evaluate( const SolveOutcome& outcome, const Problem& problem, const Solution* reference,
          const Passcodes& passcodes, const Tolerances& tolerances = {} );

/// Infeasibility-only evaluation used while extracting an IIS.
FailCode
evaluate_iis( const SolveOutcome& outcome, const Passcodes& passcodes );

} // namespace deltamip

#endif
