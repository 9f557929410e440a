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

#ifndef DELTAMIP_REPORT_HPP
#define DELTAMIP_REPORT_HPP

#include "deltamip/controller.hpp"

#include <iosfwd>
#include <string>

namespace deltamip
{

/// Run log as JSON lines: one "start", one "solve" per solver call, one
/// "round" per loop iteration and one "end" record.
class RunLog : public RunObserver
{
 public:
   RunLog( std::ostream& output, std::string case_name, bool record_time = true );

   void
   on_start( const ReductionState& state, FailCode code ) override;

   void
   on_solve( long round, int stage, const SolveRecord& record ) override;

   void
   on_round( const LoopStep& step, const ReductionState& state, const RunTotals& totals ) override;

   void
   on_end( const ReductionState& state, const RunTotals& totals ) override;

 private:
   std::ostream& output_;
   std::string case_;
   bool record_time_;
};

/// Table with columns Case | Original Vars Conss Nonzeroes | Final Vars
/// Conss Nonzeroes | Rounds, MIP Solves, Time [s], one row per completed run.
std::string
summarize( std::istream& log );

std::string
summarize( const std::string& log );

/// Drops every "time" member so logs of identical runs compare equal.
std::string
strip_times( const std::string& log );

} // namespace deltamip

#endif
