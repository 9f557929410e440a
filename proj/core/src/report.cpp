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

#include "deltamip/report.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace deltamip
{

using json = nlohmann::ordered_json;

namespace
{

void
put_size( json& record, const Problem& problem )
{
   record["vars"] = problem.nvars();
   record["conss"] = problem.nconss();
   record["nonzeros"] = problem.nnonzeros();
}

} // namespace

RunLog::RunLog( std::ostream& output, std::string case_name, bool record_time )
    : output_( output ), case_( std::move( case_name ) ), record_time_( record_time )
{
}

void
RunLog::on_start( const ReductionState& state, FailCode code )
{
   json record{ { "event", "start" }, { "case", case_ } };
   put_size( record, state.problem );
   record["code"] = code;
   record["iis"] = state.iis;
   output_ << record.dump() << '\n';
}

void
RunLog::on_solve( long round, int stage, const SolveRecord& solve )
{
   json record{ { "event", "solve" },
                { "round", round },
                { "stage", stage },
                { "modifier", to_string( solve.kind ) },
                { "batch", solve.batch },
                { "size", solve.batch_size },
                { "code", solve.code },
                { "kept", solve.kept } };
   if( record_time_ )
      record["time"] = solve.seconds;
   output_ << record.dump() << '\n';
}

void
RunLog::on_round( const LoopStep& step, const ReductionState& state, const RunTotals& totals )
{
   json record{ { "event", "round" }, { "round", step.round }, { "stage", step.stage }, { "changed", step.changed } };
   put_size( record, state.problem );
   record["solves"] = totals.solves;
   if( record_time_ )
      record["time"] = totals.seconds;
   output_ << record.dump() << '\n';
}

void
RunLog::on_end( const ReductionState& state, const RunTotals& totals )
{
   json record{ { "event", "end" } };
   put_size( record, state.problem );
   record["rounds"] = totals.rounds;
   record["solves"] = totals.solves;
   if( record_time_ )
      record["time"] = totals.seconds;
   output_ << record.dump() << '\n';
   output_.flush();
}

std::string
summarize( std::istream& log )
{
   std::string out;
   out += fmt::format( "{:<16} | {:^26} | {:^26} | {:^30}\n", "Case", "Original Instance",
                       "Final Instance", "Statistics" );
   out += fmt::format( "{:<16} | {:>6} {:>7} {:>11} | {:>6} {:>7} {:>11} | {:>6} {:>11} {:>11}\n", "",
                       "Vars", "Conss", "Nonzeroes", "Vars", "Conss", "Nonzeroes", "Rounds",
                       "MIP Solves", "Time [s]" );

   std::optional<json> start;
   std::string line;
   while( std::getline( log, line ) )
   {
      if( line.find_first_not_of( " \t\r" ) == std::string::npos )
         continue;
      json record = json::parse( line, nullptr, false );
      if( record.is_discarded() || !record.is_object() )
         continue;
      std::string event = record.value( "event", "" );
      if( event == "start" )
         start = record;
      else if( event == "end" && start )
      {
         out += fmt::format( "{:<16} | {:>6} {:>7} {:>11} | {:>6} {:>7} {:>11} | {:>6} {:>11} {:>11.1f}\n",
                             start->value( "case", "" ), start->value( "vars", 0 ),
                             start->value( "conss", 0 ), start->value( "nonzeros", 0 ),
                             record.value( "vars", 0 ), record.value( "conss", 0 ),
                             record.value( "nonzeros", 0 ), record.value( "rounds", 0 ),
                             record.value( "solves", 0 ), record.value( "time", 0.0 ) );
         start.reset();
      }
   }
   return out;
}

std::string
summarize( const std::string& log )
{
   std::istringstream input( log );
   return summarize( input );
}

std::string
strip_times( const std::string& log )
{
   std::istringstream input( log );
   std::string out;
   std::string line;
   while( std::getline( input, line ) )
   {
      json record = json::parse( line, nullptr, false );
      if( !record.is_discarded() && record.is_object() )
      {
         record.erase( "time" );
         out += record.dump();
      }
      else
         out += line;
      out += '\n';
   }
   return out;
}

} // namespace deltamip
