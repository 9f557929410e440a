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

#ifndef DELTAMIP_CLI_HPP
#define DELTAMIP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace deltamip::cli
{

/// Process exit codes.
inline constexpr int kExitReduced = 0;
inline constexpr int kExitNotReproduced = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNoReduction = 3;

/// Environment variable naming the default output directory.
inline constexpr const char* kOutputDirEnv = "DELTAMIP_OUTPUT_DIR";

/// Runs the command line with `args` excluding the program name.
int
run( const std::vector<std::string>& args, std::ostream& out, std::ostream& err );

int
main( int argc, char** argv );

} // namespace deltamip::cli

#endif
