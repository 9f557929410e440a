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

#include "deltamip/cli.hpp"

#include "deltamip/builtin/solver.hpp"
#include "deltamip/controller.hpp"
#include "deltamip/external_adapter.hpp"
#include "deltamip/io.hpp"
#include "deltamip/report.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

namespace deltamip::cli
{

namespace
{

struct SolverOptions
{
   std::string backend = "builtin";
   std::string faults;
   std::uint64_t seed = 0;
   std::optional<double> time_limit;
   std::optional<long> node_limit;
   std::string passcodes;
};

struct ReduceOptions
{
   std::string instance;
   std::string settings;
   std::string reference;
   std::string target_settings;
   std::size_t nbatches = 0;
   int initial_stage = 1;
   int last_stage = 9;
   long max_rounds = 10000;
   std::string output_dir;
   bool verify_snapshots = false;
};

class UsageError : public std::runtime_error
{
 public:
   using std::runtime_error::runtime_error;
};

Passcodes
parse_passcodes( const std::string& text )
{
   Passcodes codes;
   std::stringstream stream( text );
   std::string token;
   while( std::getline( stream, token, ',' ) )
   {
      if( token.find_first_not_of( " \t" ) == std::string::npos )
         continue;
      try
      {
         std::size_t used = 0;
         int code = std::stoi( token, &used );
         if( token.find_first_not_of( " \t", used ) != std::string::npos )
            throw UsageError( "" );
         codes.insert( code );
      }
      catch( const std::exception& )
      {
         throw UsageError( "invalid passcode '" + token + "'" );
      }
   }
   return codes;
}

std::unique_ptr<SolverBackend>
make_backend( const SolverOptions& options )
{
   if( options.backend == "builtin" )
      return std::make_unique<builtin::BuiltinBackend>( builtin::FaultSpec::parse( options.faults ), options.seed );
   const std::string prefix = "external:";
   if( options.backend.rfind( prefix, 0 ) == 0 )
   {
      if( !options.faults.empty() )
         throw UsageError( "--faults applies to the builtin backend only" );
      return std::make_unique<ExternalBackend>( load_adapter_config( options.backend.substr( prefix.size() ) ) );
   }
   throw UsageError( "unknown backend '" + options.backend + "'" );
}

SolveLimits
make_limits( const SolverOptions& options )
{
   return { options.time_limit, options.node_limit };
}

void
add_solver_options( CLI::App* command, SolverOptions& options )
{
   command->add_option( "--backend", options.backend, "builtin or external:<config.json>" )
       ->default_val( "builtin" );
   command->add_option( "--faults", options.faults, "Faults of the builtin backend, e.g. F1,F4" );
   command->add_option( "--seed", options.seed, "Seed of the builtin backend" );
   command->add_option( "--time-limit", options.time_limit, "Time limit per solve in seconds" )
       ->check( CLI::NonNegativeNumber );
   command->add_option( "--node-limit", options.node_limit, "Node limit per solve" )
       ->check( CLI::NonNegativeNumber );
   command->add_option( "--passcodes", options.passcodes, "Codes accepted as correct, e.g. -3,3" );
}

std::filesystem::path
output_directory( const std::string& flag )
{
   if( !flag.empty() )
      return flag;
   if( const char* env = std::getenv( kOutputDirEnv ) )
   {
      if( *env != '\0' )
         return env;
   }
   return "deltamip_out";
}

class ProgressPrinter : public RunObserver
{
 public:
   ProgressPrinter( std::ostream& out, RunLog& log ) : out_( out ), log_( log )
   {
   }

   void
   on_start( const ReductionState& state, FailCode code ) override
   {
      log_.on_start( state, code );
      fmt::print( out_, "initial code {} vars {} conss {} nonzeros {}\n", code, state.problem.nvars(),
                  state.problem.nconss(), state.problem.nnonzeros() );
   }

   void
   on_solve( long round, int stage, const SolveRecord& record ) override
   {
      log_.on_solve( round, stage, record );
   }

   void
   on_round( const LoopStep& step, const ReductionState& state, const RunTotals& totals ) override
   {
      log_.on_round( step, state, totals );
      fmt::print( out_, "round {} stage {} {} vars {} conss {} nonzeros {} solves {}\n", step.round,
                  step.stage, step.changed ? "reduced" : "unchanged", state.problem.nvars(),
                  state.problem.nconss(), state.problem.nnonzeros(), totals.solves );
   }

   void
   on_end( const ReductionState& state, const RunTotals& totals ) override
   {
      log_.on_end( state, totals );
   }

 private:
   std::ostream& out_;
   RunLog& log_;
};

int
reduce( const ReduceOptions& options, const SolverOptions& solver, bool iis, std::ostream& out,
        std::ostream& err )
{
   ReductionState state;
   state.iis = iis;
   state.problem = read_instance( options.instance );
   if( !options.settings.empty() )
      state.settings = read_settings( options.settings );
   state.target = options.target_settings.empty() ? state.settings : read_settings( options.target_settings );
   if( !options.reference.empty() )
   {
      SolutionRead read = read_solution( options.reference, state.problem );
      if( read.missing > 0 )
         fmt::print( err, "warning: reference misses {} variables, set to 0\n", read.missing );
      state.reference = std::move( read.solution );
   }
   else if( !iis )
      throw UsageError( "reduce requires --reference" );

   if( options.initial_stage < 1 || options.last_stage < options.initial_stage )
      throw UsageError( "stages must satisfy 1 <= initial <= last" );

   std::unique_ptr<SolverBackend> backend = make_backend( solver );

   RunConfig config;
   config.stages = { options.initial_stage, std::min( options.last_stage, 9 ), options.max_rounds };
   config.context.nbatches = options.nbatches;
   config.context.passcodes = parse_passcodes( solver.passcodes );
   config.context.limits = make_limits( solver );
   std::filesystem::path directory = output_directory( options.output_dir );
   config.snapshot_dir = directory;
   config.verify_snapshots = options.verify_snapshots;
   std::filesystem::create_directories( directory );

   std::ofstream log_file( directory / "run.jsonl" );
   RunLog log( log_file, std::filesystem::path( options.instance ).stem().string() );
   ProgressPrinter printer( out, log );

   RunResult result;
   try
   {
      result = deltamip::run( config, *backend, std::move( state ), &printer );
   }
   catch( const RunAborted& aborted )
   {
      fmt::print( err, "{}\n", aborted.what() );
      return kExitNotReproduced;
   }

   for( const Snapshot& snapshot : result.snapshots )
   {
      if( snapshot.verified_code && *snapshot.verified_code == fail::kPass )
         fmt::print( err, "warning: snapshot {} does not reproduce\n", snapshot.instance.string() );
   }
   const Problem& final_problem = result.final_state.problem;
   fmt::print( out, "final vars {} conss {} nonzeros {} rounds {} solves {} time {:.1f}\n",
               final_problem.nvars(), final_problem.nconss(), final_problem.nnonzeros(),
               result.totals.rounds, result.totals.solves, result.totals.seconds );
   if( result.snapshots.empty() )
   {
      fmt::print( out, "no reduction found\n" );
      return kExitNoReduction;
   }
   fmt::print( out, "last snapshot {}\n", result.snapshots.back().instance.string() );
   return kExitReduced;
}

int
check( const std::string& instance, const std::string& settings_path, const std::string& reference,
       const SolverOptions& solver, std::ostream& out )
{
   Problem problem = read_instance( instance );
   Settings settings = settings_path.empty() ? Settings{} : read_settings( settings_path );
   std::optional<Solution> solution;
   if( !reference.empty() )
      solution = read_solution( reference, problem ).solution;
   std::unique_ptr<SolverBackend> backend = make_backend( solver );

   SolveOutcome outcome = call_solver( *backend, problem, settings, make_limits( solver ) );
   FailCode code = evaluate( outcome, problem, solution ? &*solution : nullptr,
                             parse_passcodes( solver.passcodes ) );
   fmt::print( out, "status {}\n", to_string( outcome.status ) );
   fmt::print( out, "dual bound {}\n", format_real( outcome.dual_bound ) );
   fmt::print( out, "primal bound {}\n", format_real( outcome.primal_bound ) );
   if( !outcome.message.empty() )
      fmt::print( out, "message {}\n", outcome.message );
   fmt::print( out, "code {}\n", code );
   return 0;
}

// Behaves like an external solver executable around the builtin backend.
int
mock_solve( const std::string& instance, const std::string& settings_path,
            const std::string& solution_out, const SolverOptions& solver, std::ostream& out )
{
   Problem problem;
   Settings settings;
   try
   {
      problem = read_instance( instance );
      if( !settings_path.empty() )
         settings = read_settings( settings_path );
   }
   catch( const std::exception& error )
   {
      fmt::print( out, "ERROR 2 {}\n", error.what() );
      return 1;
   }

   builtin::BuiltinBackend backend( builtin::FaultSpec::parse( solver.faults ), solver.seed );
   try
   {
      backend.setup( problem, settings, make_limits( solver ) );
   }
   catch( const std::exception& error )
   {
      fmt::print( out, "ERROR 1 {}\n", error.what() );
      return 1;
   }
   SolveOutcome outcome = backend.solve();
   fmt::print( out, "status: {}\n", to_string( outcome.status ) );
   fmt::print( out, "dual bound: {}\n", format_real( outcome.dual_bound ) );
   fmt::print( out, "primal bound: {}\n", format_real( outcome.primal_bound ) );
   if( !outcome.solutions.empty() && !solution_out.empty() )
      write_solution( outcome.solutions.front(), solution_out );
   return 0;
}

} // namespace

int
run( const std::vector<std::string>& args, std::ostream& out, std::ostream& err )
{
   CLI::App app( "Delta debugger for mixed-integer programs", "deltamip" );
   app.require_subcommand( 1 );

   ReduceOptions reduce_options;
   SolverOptions reduce_solver;
   CLI::App* reduce_cmd = app.add_subcommand( "reduce", "Shrink a failing settings-problem pair" );
   CLI::App* iis_cmd = app.add_subcommand( "iis", "Shrink an infeasible problem to an infeasible subset" );
   for( CLI::App* command : { reduce_cmd, iis_cmd } )
   {
      command->add_option( "instance", reduce_options.instance, "Instance in free MPS" )
          ->required()
          ->check( CLI::ExistingFile );
      command->add_option( "settings", reduce_options.settings, "Settings file" )->check( CLI::ExistingFile );
      command->add_option( "--target-settings", reduce_options.target_settings, "Settings the pair moves towards" )
          ->check( CLI::ExistingFile );
      command->add_option( "--nbatches", reduce_options.nbatches, "Maximal solves per modifier call" )
          ->check( CLI::PositiveNumber );
      command->add_option( "--initial-stage", reduce_options.initial_stage, "First stage" )
          ->check( CLI::Range( 1, 9 ) );
      command->add_option( "--last-stage", reduce_options.last_stage, "Last stage" )->check( CLI::Range( 1, 9 ) );
      command->add_option( "--max-rounds", reduce_options.max_rounds, "Last round" )
          ->check( CLI::NonNegativeNumber );
      command->add_option( "--output-dir", reduce_options.output_dir, "Snapshot and log directory" );
      command->add_flag( "--verify-snapshots", reduce_options.verify_snapshots,
                         "Re-solve every snapshot once" );
      add_solver_options( command, reduce_solver );
   }
   reduce_cmd->add_option( "--reference", reduce_options.reference, "Feasible reference solution" )
       ->required()
       ->check( CLI::ExistingFile );

   std::string check_instance;
   std::string check_settings;
   std::string check_reference;
   SolverOptions check_solver;
   CLI::App* check_cmd = app.add_subcommand( "check", "Solve once and print the fail code" );
   check_cmd->add_option( "instance", check_instance )->required()->check( CLI::ExistingFile );
   check_cmd->add_option( "settings", check_settings )->check( CLI::ExistingFile );
   check_cmd->add_option( "--reference", check_reference )->check( CLI::ExistingFile );
   add_solver_options( check_cmd, check_solver );

   std::string mock_instance;
   std::string mock_settings;
   std::string mock_solution;
   SolverOptions mock_solver;
   CLI::App* mock_cmd = app.add_subcommand( "mock-solve", "Builtin solver with a solver-executable interface" );
   mock_cmd->add_option( "instance", mock_instance )->required();
   mock_cmd->add_option( "settings", mock_settings );
   mock_cmd->add_option( "solution_out", mock_solution );
   mock_cmd->add_option( "--faults", mock_solver.faults );
   mock_cmd->add_option( "--seed", mock_solver.seed );

   std::string summary_log;
   CLI::App* summary_cmd = app.add_subcommand( "summarize", "Tabulate a run log" );
   summary_cmd->add_option( "log", summary_log )->required()->check( CLI::ExistingFile );

   std::vector<std::string> reversed( args.rbegin(), args.rend() );
   try
   {
      app.parse( reversed );
   }
   catch( const CLI::CallForHelp& )
   {
      out << app.help();
      return 0;
   }
   catch( const CLI::ParseError& error )
   {
      fmt::print( err, "{}\n", error.what() );
      return kExitConfig;
   }

   try
   {
      if( *reduce_cmd )
         return reduce( reduce_options, reduce_solver, false, out, err );
      if( *iis_cmd )
         return reduce( reduce_options, reduce_solver, true, out, err );
      if( *check_cmd )
         return check( check_instance, check_settings, check_reference, check_solver, out );
      if( *mock_cmd )
         return mock_solve( mock_instance, mock_settings, mock_solution, mock_solver, out );
      if( *summary_cmd )
      {
         std::ifstream input( summary_log );
         out << summarize( input );
         return 0;
      }
   }
   catch( const std::exception& error )
   {
      fmt::print( err, "error: {}\n", error.what() );
      return kExitConfig;
   }
   return kExitConfig;
}

int
main( int argc, char** argv )
{
   std::vector<std::string> args( argv + 1, argv + argc );
   return run( args, std::cout, std::cerr );
}

} // namespace deltamip::cli
