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

#ifndef DELTAMIP_TESTS_GENERATORS_HPP
#define DELTAMIP_TESTS_GENERATORS_HPP

#include "deltamip/builtin/faults.hpp"
#include "deltamip/model.hpp"

#include <cstdint>
#include <filesystem>
#include <random>

namespace deltamip::testing
{

using Rng = std::mt19937_64;

struct Instance
{
   Problem problem;
   Solution reference;
   Settings settings;
};

/// min -x1  s.t.  x1 + x2 <= 1,  x binary.
Problem
two_binaries();

/// Five-variable instance with the rows 51.2x0 + ... = 192000 and two <= 0 rows.
Problem
dual_infer_instance( bool integer = false );

/// Row -20000007 x + 2 y <= 0 with x binary and y fixed at 0.599028894874692.
Instance
vanishing_side_instance();

/// Bounded pure-integer instance for the enumeration oracle.
Problem
random_integer_problem( Rng& rng, int max_vars = 8, int max_conss = 8, int max_bound = 3 );

/// Mixed instance with fractional data and an exactly feasible reference.
Instance
random_feasible_instance( Rng& rng, int max_vars = 12, int max_conss = 10 );

/// Instance stressing the writer: odd names, infinite bounds, ranges, MAX.
Problem
random_io_problem( Rng& rng );

/// Large instance hiding the vanishing-side structure among noise.
Instance
planted_vanishing_side( std::uint64_t seed, int nvars = 200, int nconss = 100 );

/// Infeasible instance whose only infeasible core is three rows named
/// iis_0, iis_1, iis_2, among `nredundant` satisfiable rows.
Problem
planted_iis( std::uint64_t seed, int nredundant = 50 );

/// Small instance on which `fault` turns a passing solve into a failing one.
Instance
fault_family( builtin::Fault fault, std::uint64_t seed );

/// Writes instance, settings and reference into `directory`.
struct InstanceFiles
{
   std::filesystem::path instance;
   std::filesystem::path settings;
   std::filesystem::path reference;
};

InstanceFiles
write_files( const Instance& instance, const std::filesystem::path& directory, const std::string& stem );

/// Fresh empty directory below the system temp directory.
std::filesystem::path
scratch_directory( const std::string& name );

} // namespace deltamip::testing

#endif
