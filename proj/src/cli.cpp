#include "runidx/cli.hpp"

#include <cctype>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>

#include "runidx/align_out.hpp"
#include "runidx/index.hpp"
#include "runidx/search.hpp"
#include "runidx/seq_io.hpp"
#include "runidx/serialize.hpp"

namespace runidx {

namespace {

constexpr int kUsageError = 2;

void build_usage(std::ostream& out, const std::string& prog) {
    out << "usage: " << prog << " [-b <algorithm>] [-o <prefix>] <fasta>\n"
        << "  builds a run-length compressed index over the sequences in <fasta>\n"
        << "  (plain or gzipped) and writes <prefix>.ri and <prefix>.1.ri\n"
        << "  -b <algorithm>  construction algorithm, only 'sais' is supported\n"
        << "  -o <prefix>     output prefix (default: input path minus extensions)\n";
}

void align_usage(std::ostream& out, const std::string& prog) {
    out << "usage: " << prog << " [--max-hits <k>] [--max-range <k>] count|locate"
        << " <index-prefix> <fastq>\n"
        << "  count   print name, longest-matched-suffix fraction, and occurrence\n"
        << "          count for every read\n"
        << "  locate  print SAM records for reads that match full-length\n"
        << "  --max-hits <k>   report at most k positions per read\n"
        << "  --max-range <k>  report positions only for reads occurring at most k times\n";
}

// "--max-hits 3" or "--max-hits=3"; returns the value string or nullopt when
// `arg` is not this flag at all.
std::optional<std::string> flag_value(const std::string& arg, const std::string& name,
                                      size_t& i, const std::vector<std::string>& args) {
    if (arg == name) {
        if (i + 1 >= args.size()) throw std::runtime_error("missing value for " + name);
        return args[++i];
    }
    if (arg.rfind(name + "=", 0) == 0) return arg.substr(name.size() + 1);
    return std::nullopt;
}

uint64_t parse_positive_count(const std::string& s, const std::string& flag) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw std::runtime_error(flag + " expects a positive integer, got '" + s + "'");
    uint64_t v = 0;
    try {
        v = std::stoull(s);
    } catch (const std::exception&) {
        throw std::runtime_error(flag + " expects a positive integer, got '" + s + "'");
    }
    if (v == 0) throw std::runtime_error(flag + " expects a positive integer, got '" + s + "'");
    return v;
}

std::string join_args(const std::string& prog, const std::vector<std::string>& args) {
    std::string s = prog;
    for (const auto& a : args) {
        s += ' ';
        s += a;
    }
    return s;
}

}  // namespace

std::string default_prefix(const std::string& fasta_path) {
    std::string p = fasta_path;
    if (p.size() > 3 && p.compare(p.size() - 3, 3, ".gz") == 0) p.resize(p.size() - 3);
    size_t slash = p.find_last_of('/');
    size_t base = slash == std::string::npos ? 0 : slash + 1;
    size_t dot = p.find_last_of('.');
    if (dot != std::string::npos && dot > base) p.resize(dot);
    return p;
}

int build_main(const std::vector<std::string>& args, const std::string& prog) {
    std::string algorithm = "sais";
    std::string prefix;
    std::string fasta_path;

    for (size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "-h" || a == "--help") {
            build_usage(std::cout, prog);
            return 0;
        }
        if (a == "-b") {
            if (i + 1 >= args.size()) {
                std::cerr << "error: missing value for -b\n";
                return kUsageError;
            }
            algorithm = args[++i];
        } else if (a == "-o") {
            if (i + 1 >= args.size()) {
                std::cerr << "error: missing value for -o\n";
                return kUsageError;
            }
            prefix = args[++i];
        } else if (!a.empty() && a[0] == '-') {
            std::cerr << "error: unknown option '" << a << "'\n";
            build_usage(std::cerr, prog);
            return kUsageError;
        } else if (fasta_path.empty()) {
            fasta_path = a;
        } else {
            std::cerr << "error: unexpected argument '" << a << "'\n";
            build_usage(std::cerr, prog);
            return kUsageError;
        }
    }

    if (fasta_path.empty()) {
        std::cerr << "error: no input FASTA given\n";
        build_usage(std::cerr, prog);
        return kUsageError;
    }
    if (algorithm != "sais") {
        std::cerr << "error: unsupported construction algorithm '" << algorithm
                  << "' (only 'sais' is available)\n";
        return 1;
    }
    if (prefix.empty()) prefix = default_prefix(fasta_path);

    try {
        std::ifstream in(fasta_path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open " + fasta_path);
        bool gz = has_gzip_magic(in);

        auto t0 = std::chrono::steady_clock::now();
        auto records = read_fasta(in, gz);
        auto [corpus, catalog] = build_corpus(records);
        run_index idx = run_index::build(corpus);

        std::filesystem::path parent = std::filesystem::path(prefix).parent_path();
        if (!parent.empty()) std::filesystem::create_directories(parent);
        save_index(prefix, idx, catalog);
        auto t1 = std::chrono::steady_clock::now();

        double secs = std::chrono::duration<double>(t1 - t0).count();
        std::cerr << prefix << ".ri: " << idx.size() << " symbols, " << idx.num_runs()
                  << " runs, built in " << secs << " s\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

int align_main(const std::vector<std::string>& args, const std::string& prog) {
    uint64_t max_hits = 0;
    uint64_t max_range = 0;
    std::vector<std::string> positional;

    try {
        for (size_t i = 0; i < args.size(); ++i) {
            const std::string& a = args[i];
            if (a == "-h" || a == "--help") {
                align_usage(std::cout, prog);
                return 0;
            }
            if (auto v = flag_value(a, "--max-hits", i, args)) {
                max_hits = parse_positive_count(*v, "--max-hits");
            } else if (auto w = flag_value(a, "--max-range", i, args)) {
                max_range = parse_positive_count(*w, "--max-range");
            } else if (!a.empty() && a[0] == '-') {
                std::cerr << "error: unknown option '" << a << "'\n";
                align_usage(std::cerr, prog);
                return kUsageError;
            } else {
                if (!positional.empty()) {
                    // from the index prefix on, the rest is taken verbatim
                    positional.insert(positional.end(), args.begin() + i, args.end());
                    break;
                }
                positional.push_back(a);
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }

    if (positional.size() != 3) {
        std::cerr << "error: expected count|locate, an index prefix, and a FASTQ path\n";
        align_usage(std::cerr, prog);
        return kUsageError;
    }
    const std::string& mode = positional[0];
    const std::string& index_prefix = positional[1];
    const std::string& fastq_path = positional[2];
    if (mode != "count" && mode != "locate") {
        std::cerr << "error: unknown subcommand '" << mode << "'\n";
        align_usage(std::cerr, prog);
        return kUsageError;
    }

    try {
        auto [idx, catalog] = load_index(index_prefix);

        std::ifstream in(fastq_path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open " + fastq_path);

        std::ostream& out = std::cout;
        if (mode == "locate") write_sam_header(out, catalog, join_args(prog, args));

        fastq_reader reader(in);
        sequence_record read;
        while (reader.next(read)) {
            if (mode == "count") {
                write_count_line(out, read.name, match_longest_suffix(idx, read.bases));
            } else {
                locate_result res = locate_read(idx, read.bases, max_hits, max_range);
                std::vector<resolved_hit> hits;
                hits.reserve(res.hits.size());
                for (uint64_t off : res.hits)
                    hits.push_back(resolve(catalog, off, read.bases.size()));
                write_sam_records(out, read, res.match, hits);
            }
        }
        out.flush();
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

int dispatch_main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty()) {
        std::cerr << "usage: " << (argc > 0 ? argv[0] : "runidx") << " build|align ...\n";
        return kUsageError;
    }
    std::string sub = args.front();
    std::vector<std::string> rest(args.begin() + 1, args.end());
    std::string prog = std::string(argv[0]) + " " + sub;
    if (sub == "build") return build_main(rest, prog);
    if (sub == "align") return align_main(rest, prog);
    std::cerr << "error: unknown subcommand '" << sub << "' (expected build or align)\n";
    return kUsageError;
}

}  // namespace runidx
