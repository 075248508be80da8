/*
 * cli.hpp
 *
 * Command-line entry points shared by the `runidx` multiplexer and the
 * standalone ri-buildfasta / ri-align binaries.
 *
 *   build:  ri-buildfasta [-b sais] [-o prefix] ref.fa[.gz]
 *   align:  ri-align [--max-hits k] [--max-range k] count|locate prefix reads.fq
 */

#pragma once

#include <string>
#include <vector>

namespace runidx {

// Index prefix implied by the input path: strip a trailing ".gz", then one
// more extension ("genomes.fa.gz" -> "genomes").
std::string default_prefix(const std::string& fasta_path);

int build_main(const std::vector<std::string>& args, const std::string& prog);
int align_main(const std::vector<std::string>& args, const std::string& prog);

// argv[1] selects build or align; used by the combined binary.
int dispatch_main(int argc, char** argv);

}  // namespace runidx
