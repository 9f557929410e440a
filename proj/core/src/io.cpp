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

#include "deltamip/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace deltamip
{

ParseError::ParseError( const std::string& source, std::size_t line, const std::string& message )
    : std::runtime_error( source + ":" + std::to_string( line ) + ": " + message ), line_( line )
{
}

std::string
format_real( double value )
{
   if( std::isinf( value ) )
      return value > 0 ? "inf" : "-inf";
   std::array<char, 64> buffer;
   auto result = std::to_chars( buffer.data(), buffer.data() + buffer.size(), value );
   return std::string( buffer.data(), result.ptr );
}

namespace
{

std::vector<std::string>
split( const std::string& line )
{
   std::vector<std::string> tokens;
   std::istringstream stream( line );
   std::string token;
   while( stream >> token )
      tokens.push_back( token );
   return tokens;
}

std::optional<double>
parse_real( const std::string& token )
{
   const char* begin = token.data();
   const char* end = token.data() + token.size();
   if( begin != end && *begin == '+' )
      ++begin;
   double value = 0.0;
   auto result = std::from_chars( begin, end, value );
   if( result.ec != std::errc() || result.ptr != end )
      return std::nullopt;
   return value;
}

void
strip_cr( std::string& line )
{
   if( !line.empty() && line.back() == '\r' )
      line.pop_back();
}

std::ifstream
open_input( const std::filesystem::path& path )
{
   std::ifstream input( path );
   if( !input )
      throw IoError( "cannot open '" + path.string() + "' for reading" );
   return input;
}

std::ofstream
open_output( const std::filesystem::path& path )
{
   std::ofstream output( path, std::ios::trunc );
   if( !output )
      throw IoError( "cannot open '" + path.string() + "' for writing" );
   return output;
}

void
finish_output( std::ofstream& output, const std::filesystem::path& path )
{
   output.flush();
   if( !output )
      throw IoError( "failed writing '" + path.string() + "'" );
}

enum class Section
{
   None,
   Name,
   ObjSense,
   Rows,
   Columns,
   Rhs,
   Ranges,
   Bounds,
   End
};

enum class RowType
{
   Free,
   Less,
   Greater,
   Equal
};

class MpsReader
{
 public:
   MpsReader( std::istream& input, std::string source, const Tolerances& tolerances )
       : input_( input ), source_( std::move( source ) ), tolerances_( tolerances )
   {
   }

   Problem
   read()
   {
      std::string line;
      while( std::getline( input_, line ) )
      {
         ++lineno_;
         strip_cr( line );
         if( line.empty() || line[0] == '*' )
            continue;
         auto tokens = split( line );
         if( tokens.empty() )
            continue;

         if( line[0] != ' ' && line[0] != '\t' )
         {
            start_section( tokens );
            if( section_ == Section::End )
               break;
            continue;
         }

         switch( section_ )
         {
         case Section::ObjSense:
            read_sense( tokens[0] );
            break;
         case Section::Rows:
            read_row( tokens );
            break;
         case Section::Columns:
            read_column( tokens );
            break;
         case Section::Rhs:
            read_rhs( tokens );
            break;
         case Section::Ranges:
            read_range( tokens );
            break;
         case Section::Bounds:
            read_bound( tokens );
            break;
         default:
            fail( "data line outside of a section" );
         }
      }
      if( section_ != Section::End )
         fail( "missing ENDATA" );
      return finish();
   }

 private:
   [[noreturn]] void
   fail( const std::string& message ) const
   {
      throw ParseError( source_, lineno_, message );
   }

   double
   number( const std::string& token ) const
   {
      auto value = parse_real( token );
      if( !value )
         fail( "invalid number '" + token + "'" );
      return tolerances_.normalize( *value );
   }

   void
   start_section( const std::vector<std::string>& tokens )
   {
      const std::string& name = tokens[0];
      if( name == "NAME" )
      {
         section_ = Section::Name;
         problem_.name = tokens.size() > 1 ? tokens[1] : std::string();
      }
      else if( name == "OBJSENSE" )
      {
         section_ = Section::ObjSense;
         if( tokens.size() > 1 )
            read_sense( tokens[1] );
      }
      else if( name == "ROWS" )
         section_ = Section::Rows;
      else if( name == "COLUMNS" )
         section_ = Section::Columns;
      else if( name == "RHS" )
         section_ = Section::Rhs;
      else if( name == "RANGES" )
         section_ = Section::Ranges;
      else if( name == "BOUNDS" )
         section_ = Section::Bounds;
      else if( name == "ENDATA" )
         section_ = Section::End;
      else
         fail( "unknown section '" + name + "'" );
   }

   void
   read_sense( const std::string& token )
   {
      if( token == "MAX" || token == "MAXIMIZE" )
         problem_.original_sense = ObjSense::Maximize;
      else if( token == "MIN" || token == "MINIMIZE" )
         problem_.original_sense = ObjSense::Minimize;
      else
         fail( "unknown objective sense '" + token + "'" );
   }

   void
   read_row( const std::vector<std::string>& tokens )
   {
      if( tokens.size() != 2 )
         fail( "expected '<type> <name>' in ROWS" );
      const std::string& type = tokens[0];
      const std::string& name = tokens[1];
      if( name == objective_name_ || rows_.count( name ) )
         fail( "duplicate row name '" + name + "'" );

      RowType kind;
      if( type == "N" )
         kind = RowType::Free;
      else if( type == "L" )
         kind = RowType::Less;
      else if( type == "G" )
         kind = RowType::Greater;
      else if( type == "E" )
         kind = RowType::Equal;
      else
         fail( "unknown row type '" + type + "'" );

      if( kind == RowType::Free && objective_name_.empty() )
      {
         objective_name_ = name;
         return;
      }
      rows_.emplace( name, row_types_.size() );
      row_types_.push_back( kind );
      Constraint row;
      row.name = name;
      problem_.constraints.push_back( std::move( row ) );
      rhs_.push_back( 0.0 );
      range_.push_back( std::nullopt );
   }

   void
   read_column( const std::vector<std::string>& tokens )
   {
      if( tokens.size() >= 3 && tokens[1] == "'MARKER'" )
      {
         if( tokens[2] == "'INTORG'" )
            integer_block_ = true;
         else if( tokens[2] == "'INTEND'" )
            integer_block_ = false;
         else
            fail( "unknown marker " + tokens[2] );
         return;
      }
      if( tokens.size() != 3 && tokens.size() != 5 )
         fail( "expected '<column> <row> <value> [<row> <value>]' in COLUMNS" );

      const std::string& column = tokens[0];
      if( column != current_column_ )
      {
         if( columns_.count( column ) )
            fail( "duplicate column name '" + column + "'" );
         columns_.emplace( column, problem_.variables.size() );
         Variable var;
         var.name = column;
         var.type = integer_block_ ? VarType::Integer : VarType::Continuous;
         problem_.variables.push_back( std::move( var ) );
         current_column_ = column;
         seen_rows_.clear();
      }
      std::size_t index = problem_.variables.size() - 1;

      for( std::size_t k = 1; k + 1 < tokens.size(); k += 2 )
      {
         const std::string& row = tokens[k];
         double value = number( tokens[k + 1] );
         if( !seen_rows_.insert( row ).second )
            fail( "duplicate entry for row '" + row + "' in column '" + column + "'" );
         if( row == objective_name_ )
         {
            problem_.variables[index].objective = value;
            continue;
         }
         auto it = rows_.find( row );
         if( it == rows_.end() )
            fail( "unknown row '" + row + "'" );
         if( value != 0.0 )
            problem_.constraints[it->second].coefficients.push_back( { index, value } );
      }
   }

   // RHS and RANGES entries carry an optional set name in front.
   template <typename Handler>
   void
   read_pairs( const std::vector<std::string>& tokens, const char* section, Handler&& handler )
   {
      std::size_t start = tokens.size() % 2 == 1 ? 1 : 0;
      if( tokens.size() < 2 || tokens.size() > 5 )
         fail( std::string( "malformed line in " ) + section );
      for( std::size_t k = start; k + 1 < tokens.size(); k += 2 )
         handler( tokens[k], number( tokens[k + 1] ) );
   }

   void
   read_rhs( const std::vector<std::string>& tokens )
   {
      read_pairs( tokens, "RHS", [&]( const std::string& row, double value ) {
         if( row == objective_name_ )
         {
            offset_ = -value;
            return;
         }
         auto it = rows_.find( row );
         if( it == rows_.end() )
            fail( "unknown row '" + row + "'" );
         rhs_[it->second] = value;
      } );
   }

   void
   read_range( const std::vector<std::string>& tokens )
   {
      read_pairs( tokens, "RANGES", [&]( const std::string& row, double value ) {
         auto it = rows_.find( row );
         if( it == rows_.end() )
            fail( "unknown row '" + row + "'" );
         if( row_types_[it->second] == RowType::Free )
            fail( "range on free row '" + row + "'" );
         range_[it->second] = value;
      } );
   }

   void
   read_bound( const std::vector<std::string>& tokens )
   {
      if( tokens.empty() )
         return;
      const std::string& type = tokens[0];
      bool needs_value = type == "UP" || type == "LO" || type == "FX" || type == "LI" || type == "UI";
      bool no_value = type == "FR" || type == "MI" || type == "PL" || type == "BV";
      if( !needs_value && !no_value )
         fail( "unknown bound type '" + type + "'" );

      std::string column;
      std::optional<std::string> value_token;
      if( tokens.size() == 4 )
      {
         column = tokens[2];
         value_token = tokens[3];
      }
      else if( tokens.size() == 3 )
      {
         if( needs_value )
         {
            column = tokens[1];
            value_token = tokens[2];
         }
         else
            column = tokens[2];
      }
      else if( tokens.size() == 2 && no_value )
         column = tokens[1];
      else
         fail( "malformed bound line" );

      auto it = columns_.find( column );
      if( it == columns_.end() )
         fail( "unknown column '" + column + "' in BOUNDS" );
      Variable& var = problem_.variables[it->second];
      double value = value_token ? number( *value_token ) : 0.0;

      if( type == "UP" )
         var.upper = value;
      else if( type == "LO" )
         var.lower = value;
      else if( type == "FX" )
         var.lower = var.upper = value;
      else if( type == "FR" )
      {
         var.lower = -kInfinity;
         var.upper = kInfinity;
      }
      else if( type == "MI" )
         var.lower = -kInfinity;
      else if( type == "PL" )
         var.upper = kInfinity;
      else if( type == "BV" )
      {
         var.type = VarType::Integer;
         var.lower = 0.0;
         var.upper = 1.0;
      }
      else if( type == "LI" )
      {
         var.type = VarType::Integer;
         var.lower = value;
      }
      else if( type == "UI" )
      {
         var.type = VarType::Integer;
         var.upper = value;
      }
   }

   Problem
   finish()
   {
      for( std::size_t i = 0; i < problem_.constraints.size(); ++i )
      {
         Constraint& row = problem_.constraints[i];
         double rhs = rhs_[i];
         switch( row_types_[i] )
         {
         case RowType::Free:
            row.lhs = -kInfinity;
            row.rhs = kInfinity;
            break;
         case RowType::Less:
            row.rhs = rhs;
            row.lhs = range_[i] ? rhs - std::abs( *range_[i] ) : -kInfinity;
            break;
         case RowType::Greater:
            row.lhs = rhs;
            row.rhs = range_[i] ? rhs + std::abs( *range_[i] ) : kInfinity;
            break;
         case RowType::Equal:
            row.lhs = rhs;
            row.rhs = rhs;
            if( range_[i] )
            {
               if( *range_[i] > 0 )
                  row.rhs = rhs + *range_[i];
               else
                  row.lhs = rhs + *range_[i];
            }
            break;
         }
         row.lhs = tolerances_.normalize( row.lhs );
         row.rhs = tolerances_.normalize( row.rhs );
      }

      problem_.offset = offset_;
      if( problem_.original_sense == ObjSense::Maximize )
      {
         for( Variable& var : problem_.variables )
            var.objective = -var.objective;
         problem_.offset = -problem_.offset;
      }

      try
      {
         problem_.validate( tolerances_ );
      }
      catch( const ModelError& error )
      {
         fail( error.what() );
      }
      return std::move( problem_ );
   }

   std::istream& input_;
   std::string source_;
   const Tolerances& tolerances_;
   std::size_t lineno_ = 0;
   Section section_ = Section::None;

   Problem problem_;
   std::string objective_name_;
   std::unordered_map<std::string, std::size_t> rows_;
   std::unordered_map<std::string, std::size_t> columns_;
   std::vector<RowType> row_types_;
   std::vector<double> rhs_;
   std::vector<std::optional<double>> range_;
   double offset_ = 0.0;

   std::string current_column_;
   std::unordered_set<std::string> seen_rows_;
   bool integer_block_ = false;
};

void
check_name( const std::string& name, const char* what )
{
   if( name.empty() )
      throw IoError( std::string( "cannot write " ) + what + " with an empty name" );
   for( char c : name )
   {
      if( std::isspace( static_cast<unsigned char>( c ) ) )
         throw IoError( std::string( "cannot write " ) + what + " '" + name + "' containing whitespace" );
   }
}

// Picks the base side and the range width of a ranged row such that the
// reader reconstructs both sides bit for bit whenever possible.
struct RangedRow
{
   char type;
   double side;
   double range;
};

RangedRow
encode_range( double lhs, double rhs )
{
   double width = rhs - lhs;
   std::array<double, 3> candidates = { width, std::nextafter( width, kInfinity ),
                                        std::nextafter( width, 0.0 ) };
   for( double range : candidates )
   {
      if( lhs + range == rhs )
         return { 'G', lhs, range };
   }
   for( double range : candidates )
   {
      if( rhs - range == lhs )
         return { 'L', rhs, range };
   }
   return { 'G', lhs, width };
}

std::string
objective_row_name( const Problem& problem )
{
   std::string name = "OBJ";
   while( problem.find_constraint( name ) )
      name += "_";
   return name;
}

} // namespace

Problem
read_instance( std::istream& input, const std::string& source, const Tolerances& tolerances )
{
   MpsReader reader( input, source, tolerances );
   return reader.read();
}

Problem
read_instance( const std::filesystem::path& path, const Tolerances& tolerances )
{
   std::ifstream input = open_input( path );
   return read_instance( input, path.string(), tolerances );
}

void
write_instance( const Problem& problem, std::ostream& output )
{
   const std::string objective = objective_row_name( problem );
   double sign = problem.original_sense == ObjSense::Maximize ? -1.0 : 1.0;

   output << "NAME " << ( problem.name.empty() ? "deltamip" : problem.name ) << "\n";
   if( problem.original_sense == ObjSense::Maximize )
      output << "OBJSENSE\n    MAX\n";

   output << "ROWS\n";
   output << " N  " << objective << "\n";
   std::vector<std::optional<RangedRow>> ranged( problem.nconss() );
   for( std::size_t i = 0; i < problem.nconss(); ++i )
   {
      const Constraint& row = problem.constraints[i];
      check_name( row.name, "constraint" );
      char type;
      if( std::isinf( row.lhs ) && std::isinf( row.rhs ) )
         type = 'N';
      else if( row.lhs == row.rhs )
         type = 'E';
      else if( std::isinf( row.lhs ) )
         type = 'L';
      else if( std::isinf( row.rhs ) )
         type = 'G';
      else
      {
         ranged[i] = encode_range( row.lhs, row.rhs );
         type = ranged[i]->type;
      }
      output << " " << type << "  " << row.name << "\n";
   }

   // column-wise view in row order
   std::vector<std::vector<std::pair<std::size_t, double>>> columns( problem.nvars() );
   for( std::size_t i = 0; i < problem.nconss(); ++i )
   {
      for( const Coefficient& entry : problem.constraints[i].coefficients )
         columns[entry.index].emplace_back( i, entry.value );
   }

   output << "COLUMNS\n";
   bool integer_block = false;
   for( std::size_t j = 0; j < problem.nvars(); ++j )
   {
      const Variable& var = problem.variables[j];
      check_name( var.name, "variable" );
      if( var.is_integer() != integer_block )
      {
         output << "    MARKER  'MARKER'  " << ( var.is_integer() ? "'INTORG'" : "'INTEND'" ) << "\n";
         integer_block = var.is_integer();
      }
      if( var.objective != 0.0 || columns[j].empty() )
         output << "    " << var.name << "  " << objective << "  " << format_real( sign * var.objective ) << "\n";
      for( const auto& [row, value] : columns[j] )
         output << "    " << var.name << "  " << problem.constraints[row].name << "  " << format_real( value ) << "\n";
   }
   if( integer_block )
      output << "    MARKER  'MARKER'  'INTEND'\n";

   output << "RHS\n";
   for( std::size_t i = 0; i < problem.nconss(); ++i )
   {
      const Constraint& row = problem.constraints[i];
      double side = 0.0;
      if( ranged[i] )
         side = ranged[i]->side;
      else if( std::isfinite( row.rhs ) )
         side = row.rhs;
      else if( std::isfinite( row.lhs ) )
         side = row.lhs;
      if( side != 0.0 )
         output << "    RHS  " << row.name << "  " << format_real( side ) << "\n";
   }
   if( problem.offset != 0.0 )
      output << "    RHS  " << objective << "  " << format_real( -sign * problem.offset ) << "\n";

   output << "RANGES\n";
   for( std::size_t i = 0; i < problem.nconss(); ++i )
   {
      if( ranged[i] )
         output << "    RNG  " << problem.constraints[i].name << "  " << format_real( ranged[i]->range ) << "\n";
   }

   output << "BOUNDS\n";
   for( const Variable& var : problem.variables )
   {
      if( var.lower == var.upper )
      {
         output << " FX BND  " << var.name << "  " << format_real( var.lower ) << "\n";
         continue;
      }
      if( std::isinf( var.lower ) && std::isinf( var.upper ) )
      {
         output << " FR BND  " << var.name << "\n";
         continue;
      }
      if( std::isinf( var.lower ) )
         output << " MI BND  " << var.name << "\n";
      else if( var.lower != 0.0 )
         output << " LO BND  " << var.name << "  " << format_real( var.lower ) << "\n";
      if( std::isfinite( var.upper ) )
         output << " UP BND  " << var.name << "  " << format_real( var.upper ) << "\n";
   }
   output << "ENDATA\n";
}

void
write_instance( const Problem& problem, const std::filesystem::path& path )
{
   std::ofstream output = open_output( path );
   write_instance( problem, output );
   finish_output( output, path );
}

std::string
format_instance( const Problem& problem )
{
   std::ostringstream output;
   write_instance( problem, output );
   return output.str();
}

SolutionRead
read_solution( std::istream& input, const Problem& problem, const std::string& source )
{
   std::unordered_set<std::string> known;
   for( const Variable& var : problem.variables )
      known.insert( var.name );

   SolutionRead result;
   std::string line;
   std::size_t lineno = 0;
   while( std::getline( input, line ) )
   {
      ++lineno;
      strip_cr( line );
      auto tokens = split( line );
      if( tokens.empty() || tokens[0][0] == '#' )
         continue;
      if( tokens.size() != 2 )
         throw ParseError( source, lineno, "expected '<name> <value>'" );
      auto value = parse_real( tokens[1] );
      if( !value )
         throw ParseError( source, lineno, "invalid number '" + tokens[1] + "'" );
      if( !known.count( tokens[0] ) )
         throw ParseError( source, lineno, "unknown variable '" + tokens[0] + "'" );
      if( result.solution.contains( tokens[0] ) )
         throw ParseError( source, lineno, "duplicate value for '" + tokens[0] + "'" );
      result.solution.set( tokens[0], *value );
   }

   for( const Variable& var : problem.variables )
   {
      if( !result.solution.contains( var.name ) )
      {
         result.solution.set( var.name, 0.0 );
         ++result.missing;
      }
   }
   return result;
}

SolutionRead
read_solution( const std::filesystem::path& path, const Problem& problem )
{
   std::ifstream input = open_input( path );
   return read_solution( input, problem, path.string() );
}

void
write_solution( const Solution& solution, std::ostream& output )
{
   for( const auto& [name, value] : solution.values() )
      output << name << " " << format_real( value ) << "\n";
}

void
write_solution( const Solution& solution, const std::filesystem::path& path )
{
   std::ofstream output = open_output( path );
   write_solution( solution, output );
   finish_output( output, path );
}

Settings
read_settings( std::istream& input, const std::string& source )
{
   Settings settings;
   std::string line;
   std::size_t lineno = 0;
   auto trim = []( std::string text ) {
      const char* blank = " \t";
      auto first = text.find_first_not_of( blank );
      if( first == std::string::npos )
         return std::string();
      auto last = text.find_last_not_of( blank );
      return text.substr( first, last - first + 1 );
   };

   while( std::getline( input, line ) )
   {
      ++lineno;
      strip_cr( line );
      std::string content = trim( line );
      if( content.empty() || content[0] == '#' )
         continue;
      auto equals = content.find( '=' );
      if( equals == std::string::npos )
         throw ParseError( source, lineno, "expected '<name> = <value>'" );
      std::string name = trim( content.substr( 0, equals ) );
      std::string value = trim( content.substr( equals + 1 ) );
      if( name.empty() )
         throw ParseError( source, lineno, "empty parameter name" );
      if( settings.contains( name ) )
         throw ParseError( source, lineno, "duplicate parameter '" + name + "'" );
      settings.set( name, value );
   }
   return settings;
}

Settings
read_settings( const std::filesystem::path& path )
{
   std::ifstream input = open_input( path );
   return read_settings( input, path.string() );
}

void
write_settings( const Settings& settings, std::ostream& output )
{
   for( const auto& [name, value] : settings.entries() )
      output << name << " = " << value << "\n";
}

void
write_settings( const Settings& settings, const std::filesystem::path& path )
{
   std::ofstream output = open_output( path );
   write_settings( settings, output );
   finish_output( output, path );
}

} // namespace deltamip
