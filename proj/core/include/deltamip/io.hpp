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

#ifndef DELTAMIP_IO_HPP
#define DELTAMIP_IO_HPP

#include "deltamip/model.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace deltamip
{

class IoError : public std::runtime_error
{
 public:
   using std::runtime_error::runtime_error;
};

/// Syntax or consistency error in an input file; `line` is 1-based.
class ParseError : public std::runtime_error
{
 public:
   ParseError( const std::string& source, std::size_t line, const std::string& message );

   std::size_t
   line() const
   {
      return line_;
   }

 private:
   std::size_t line_;
};

// Instances use free MPS. Columns default to [0, +inf), integer columns are
// marked with INTORG/INTEND, infinite bounds are written by omission and the
// objective constant is the negated RHS entry of the objective row.

Problem
read_instance( const std::filesystem::path& path, const Tolerances& tolerances = {} );

Problem
read_instance( std::istream& input, const std::string& source = "<stream>",
               const Tolerances& tolerances = {} );

void
write_instance( const Problem& problem, const std::filesystem::path& path );

void
write_instance( const Problem& problem, std::ostream& output );

std::string
format_instance( const Problem& problem );

struct SolutionRead
{
   Solution solution;
   /// Number of problem variables absent from the file (set to 0).
   std::size_t missing = 0;
};

SolutionRead
read_solution( const std::filesystem::path& path, const Problem& problem );

SolutionRead
read_solution( std::istream& input, const Problem& problem, const std::string& source = "<stream>" );

void
write_solution( const Solution& solution, const std::filesystem::path& path );

void
write_solution( const Solution& solution, std::ostream& output );

Settings
read_settings( const std::filesystem::path& path );

Settings
read_settings( std::istream& input, const std::string& source = "<stream>" );

void
write_settings( const Settings& settings, const std::filesystem::path& path );

void
write_settings( const Settings& settings, std::ostream& output );

/// Shortest decimal text that parses back to exactly `value`.
std::string
format_real( double value );

} // namespace deltamip

#endif
