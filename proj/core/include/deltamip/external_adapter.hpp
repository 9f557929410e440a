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

#ifndef DELTAMIP_EXTERNAL_ADAPTER_HPP
#define DELTAMIP_EXTERNAL_ADAPTER_HPP

#include "deltamip/model.hpp"
#include "deltamip/solver_interface.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace deltamip
{

class ConfigError : public std::runtime_error
{
 public:
   using std::runtime_error::runtime_error;
};

/// Declarative description of how to drive a solver executable.
///
/// The command runs through /bin/sh with {instance}, {settings} and
/// {solution_out} replaced by quoted paths inside a fresh temporary
/// directory. Standard output and error are matched against the patterns.
struct AdapterConfig
{
   std::string command;
   /// Tried in order; the first regex found in the output decides the status.
   std::vector<std::pair<std::string, SolveStatus>> status_patterns;
   /// Each holds one capture group.
   std::string dual_bound_pattern;
   std::string primal_bound_pattern;
   std::string error_code_pattern;
   std::optional<std::filesystem::path> working_directory;
   /// Variables copied into the child environment; unset inherits everything.
   std::optional<std::vector<std::string>> env_passthrough;
   std::string time_limit_key;
   std::string node_limit_key;
   double kill_grace = 10.0;
};

/// Parses the JSON config; throws ConfigError on missing fields, unknown
/// statuses or invalid regexes.
AdapterConfig
parse_adapter_config( const std::string& text );

AdapterConfig
load_adapter_config( const std::filesystem::path& path );

/// One external solve. Never throws for solver misbehavior: a kill gives
/// LimitReached, an ERROR pattern gives its negated code, a nonzero exit
/// without status gives -1 and unreadable output -2.
SolveOutcome
run_external( const AdapterConfig& config, const Problem& problem, const Settings& settings,
              const SolveLimits& limits );

class ExternalBackend : public SolverBackend
{
 public:
   explicit ExternalBackend( AdapterConfig config ) : config_( std::move( config ) )
   {
   }

   std::string
   name() const override
   {
      return "external";
   }

   SolveOutcome
   solve() override
   {
      return run_external( config_, problem_, settings_, limits_ );
   }

 private:
   AdapterConfig config_;
};

} // namespace deltamip

#endif
