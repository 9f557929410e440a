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

#include "deltamip/external_adapter.hpp"

#include "deltamip/io.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <csignal>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <regex>
#include <sstream>
#include <thread>
#include <tuple>

#include <fcntl.h>
#include <sys/wait.h>
#include <unistd.h>

extern char** environ;

namespace deltamip
{

namespace
{

SolveStatus
parse_status( const std::string& name )
{
   if( name == "optimal" )
      return SolveStatus::Optimal;
   if( name == "infeasible" )
      return SolveStatus::Infeasible;
   if( name == "unbounded" )
      return SolveStatus::Unbounded;
   if( name == "limit" || name == "limit-reached" )
      return SolveStatus::LimitReached;
   if( name == "error" )
      return SolveStatus::Error;
   throw ConfigError( "unknown status '" + name + "'" );
}

void
check_regex( const std::string& pattern, bool capture )
{
   if( pattern.empty() )
      return;
   try
   {
      std::regex compiled( pattern );
      if( capture && compiled.mark_count() < 1 )
         throw ConfigError( "pattern '" + pattern + "' needs a capture group" );
   }
   catch( const std::regex_error& error )
   {
      throw ConfigError( "invalid pattern '" + pattern + "': " + error.what() );
   }
}

class TempDir
{
 public:
   TempDir()
   {
      std::string pattern = ( std::filesystem::temp_directory_path() / "deltamip-XXXXXX" ).string();
      if( mkdtemp( pattern.data() ) == nullptr )
         throw std::runtime_error( std::string( "cannot create temporary directory: " ) + std::strerror( errno ) );
      path_ = pattern;
   }

   ~TempDir()
   {
      std::error_code ignored;
      std::filesystem::remove_all( path_, ignored );
   }

   TempDir( const TempDir& ) = delete;
   TempDir&
   operator=( const TempDir& ) = delete;

   const std::filesystem::path&
   path() const
   {
      return path_;
   }

 private:
   std::filesystem::path path_;
};

std::string
shell_quote( const std::string& text )
{
   std::string out = "'";
   for( char c : text )
   {
      if( c == '\'' )
         out += "'\\''";
      else
         out += c;
   }
   return out + "'";
}

void
replace_all( std::string& text, const std::string& key, const std::string& value )
{
   for( std::size_t pos = text.find( key ); pos != std::string::npos; pos = text.find( key, pos + value.size() ) )
      text.replace( pos, key.size(), value );
}

struct ProcessResult
{
   bool killed = false;
   bool exited = false;
   int exit_code = 0;
   std::string output;
};

ProcessResult
run_process( const AdapterConfig& config, const std::string& command,
             const std::filesystem::path& log_path, std::optional<double> deadline )
{
   std::vector<std::string> env_storage;
   std::vector<char*> envp;
   if( config.env_passthrough )
   {
      for( const std::string& name : *config.env_passthrough )
      {
         if( const char* value = std::getenv( name.c_str() ) )
            env_storage.push_back( name + "=" + value );
      }
      for( std::string& entry : env_storage )
         envp.push_back( entry.data() );
      envp.push_back( nullptr );
   }

   pid_t pid = fork();
   if( pid < 0 )
      throw std::runtime_error( std::string( "fork failed: " ) + std::strerror( errno ) );
   if( pid == 0 )
   {
      setpgid( 0, 0 );
      int fd = open( log_path.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0600 );
      if( fd >= 0 )
      {
         dup2( fd, STDOUT_FILENO );
         dup2( fd, STDERR_FILENO );
         close( fd );
      }
      if( config.working_directory && chdir( config.working_directory->c_str() ) != 0 )
         _exit( 127 );
      char* const* env = config.env_passthrough ? envp.data() : environ;
      const char* argv[] = { "sh", "-c", command.c_str(), nullptr };
      execve( "/bin/sh", const_cast<char* const*>( argv ), env );
      _exit( 127 );
   }
   setpgid( pid, pid );

   ProcessResult result;
   auto start = std::chrono::steady_clock::now();
   int status = 0;
   while( true )
   {
      pid_t done = waitpid( pid, &status, WNOHANG );
      if( done == pid )
         break;
      if( done < 0 && errno != EINTR )
         break;
      double elapsed = std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();
      if( deadline && elapsed >= *deadline )
      {
         kill( -pid, SIGKILL );
         kill( pid, SIGKILL );
         waitpid( pid, &status, 0 );
         result.killed = true;
         break;
      }
      std::this_thread::sleep_for( std::chrono::milliseconds( 5 ) );
   }

   if( !result.killed && WIFEXITED( status ) )
   {
      result.exited = true;
      result.exit_code = WEXITSTATUS( status );
   }

   std::ifstream log( log_path );
   std::stringstream buffer;
   buffer << log.rdbuf();
   result.output = buffer.str();
   return result;
}

std::optional<std::string>
capture( const std::string& pattern, const std::string& text )
{
   if( pattern.empty() )
      return std::nullopt;
   std::smatch match;
   if( !std::regex_search( text, match, std::regex( pattern ) ) || match.size() < 2 )
      return std::nullopt;
   return match[1].str();
}

std::optional<double>
parse_number( const std::string& text, const Tolerances& tolerances )
{
   std::string token = text;
   if( token == "inf" || token == "+inf" || token == "infinity" )
      return kInfinity;
   if( token == "-inf" || token == "-infinity" )
      return -kInfinity;
   char* end = nullptr;
   double value = std::strtod( token.c_str(), &end );
   if( token.empty() || end != token.c_str() + token.size() )
      return std::nullopt;
   return tolerances.normalize( value );
}

SolveOutcome
error_outcome( FailCode code, std::string message )
{
   SolveOutcome outcome;
   outcome.status = SolveStatus::Error;
   outcome.internal_code = code;
   outcome.message = std::move( message );
   return outcome;
}

} // namespace

AdapterConfig
parse_adapter_config( const std::string& text )
{
   using json = nlohmann::json;
   json document = json::parse( text, nullptr, false );
   if( document.is_discarded() || !document.is_object() )
      throw ConfigError( "adapter config is not a JSON object" );

   AdapterConfig config;
   try
   {
      config.command = document.at( "command" ).get<std::string>();
      if( config.command.find( "{instance}" ) == std::string::npos )
         throw ConfigError( "command must contain {instance}" );

      if( document.contains( "status_patterns" ) )
      {
         for( const json& entry : document.at( "status_patterns" ) )
         {
            std::string pattern = entry.at( "pattern" ).get<std::string>();
            check_regex( pattern, false );
            config.status_patterns.emplace_back( pattern, parse_status( entry.at( "status" ).get<std::string>() ) );
         }
      }
      config.dual_bound_pattern = document.value( "dual_bound_pattern", "" );
      config.primal_bound_pattern = document.value( "primal_bound_pattern", "" );
      config.error_code_pattern = document.value( "error_code_pattern", "" );
      check_regex( config.dual_bound_pattern, true );
      check_regex( config.primal_bound_pattern, true );
      check_regex( config.error_code_pattern, true );

      if( document.contains( "working_directory" ) )
         config.working_directory = document.at( "working_directory" ).get<std::string>();
      if( document.contains( "env_passthrough" ) )
         config.env_passthrough = document.at( "env_passthrough" ).get<std::vector<std::string>>();
      config.time_limit_key = document.value( "time_limit_key", "" );
      config.node_limit_key = document.value( "node_limit_key", "" );
      config.kill_grace = document.value( "kill_grace", 10.0 );
      if( config.kill_grace < 0.0 )
         throw ConfigError( "kill_grace must be nonnegative" );
   }
   catch( const json::exception& error )
   {
      throw ConfigError( std::string( "adapter config: " ) + error.what() );
   }
   return config;
}

AdapterConfig
load_adapter_config( const std::filesystem::path& path )
{
   std::ifstream input( path );
   if( !input )
      throw ConfigError( "cannot open adapter config '" + path.string() + "'" );
   std::stringstream buffer;
   buffer << input.rdbuf();
   return parse_adapter_config( buffer.str() );
}

SolveOutcome
run_external( const AdapterConfig& config, const Problem& problem, const Settings& settings,
              const SolveLimits& limits )
{
   Tolerances tolerances;
   TempDir dir;
   std::filesystem::path instance = dir.path() / "instance.mps";
   std::filesystem::path settings_path = dir.path() / "settings.set";
   std::filesystem::path solution = dir.path() / "solution.sol";
   std::filesystem::path log = dir.path() / "output.log";

   Settings effective = settings;
   if( limits.time_limit && !config.time_limit_key.empty() )
      effective.set( config.time_limit_key, format_real( *limits.time_limit ) );
   if( limits.node_limit && !config.node_limit_key.empty() )
      effective.set( config.node_limit_key, std::to_string( *limits.node_limit ) );
   write_instance( problem, instance );
   write_settings( effective, settings_path );

   std::string command = config.command;
   replace_all( command, "{instance}", shell_quote( instance.string() ) );
   replace_all( command, "{settings}", shell_quote( settings_path.string() ) );
   replace_all( command, "{solution_out}", shell_quote( solution.string() ) );

   std::optional<double> deadline;
   if( limits.time_limit )
      deadline = *limits.time_limit + config.kill_grace;

   auto start = std::chrono::steady_clock::now();
   ProcessResult process = run_process( config, command, log, deadline );
   double seconds = std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();

   SolveOutcome outcome;
   outcome.statistics.seconds = seconds;
   if( process.killed )
   {
      outcome.status = SolveStatus::LimitReached;
      outcome.message = "killed at the time limit";
      return outcome;
   }

   if( auto code = capture( config.error_code_pattern, process.output ) )
   {
      auto value = parse_number( *code, tolerances );
      if( !value || *value != std::round( *value ) || *value == 0.0 )
         return error_outcome( fail::kParse, "unreadable error code '" + *code + "'" );
      outcome = error_outcome( -static_cast<int>( std::abs( *value ) ), "solver reported error " + *code );
      outcome.statistics.seconds = seconds;
      return outcome;
   }

   std::optional<SolveStatus> status;
   for( const auto& [pattern, value] : config.status_patterns )
   {
      if( std::regex_search( process.output, std::regex( pattern ) ) )
      {
         status = value;
         break;
      }
   }
   if( !status )
   {
      if( !process.exited || process.exit_code != 0 )
         return error_outcome( fail::kCrash, "solver exited without a recognized status" );
      return error_outcome( fail::kParse, "no status found in solver output" );
   }
   if( *status == SolveStatus::Error )
      return error_outcome( fail::kCrash, "solver reported an error status" );
   outcome.status = *status;

   bool has_dual = false;
   bool has_primal = false;
   for( auto [pattern, target, found] :
        { std::tuple{ &config.dual_bound_pattern, &outcome.dual_bound, &has_dual },
          std::tuple{ &config.primal_bound_pattern, &outcome.primal_bound, &has_primal } } )
   {
      if( auto text = capture( *pattern, process.output ) )
      {
         auto value = parse_number( *text, tolerances );
         if( !value )
            return error_outcome( fail::kParse, "unreadable bound '" + *text + "'" );
         *target = *value;
         *found = true;
      }
   }

   if( std::filesystem::exists( solution ) )
   {
      try
      {
         outcome.solutions.push_back( read_solution( solution, problem ).solution );
      }
      catch( const std::exception& error )
      {
         return error_outcome( fail::kParse, std::string( "unreadable solution: " ) + error.what() );
      }
   }

   if( !has_primal && !outcome.solutions.empty() )
      outcome.primal_bound = evaluate_objective( problem, outcome.solutions.front() );
   if( !has_dual && outcome.status == SolveStatus::Optimal )
      outcome.dual_bound = outcome.primal_bound;
   if( !has_dual && outcome.status == SolveStatus::Infeasible )
      outcome.dual_bound = kInfinity;
   return outcome;
}

} // namespace deltamip
