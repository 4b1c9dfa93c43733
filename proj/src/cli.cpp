#include "bchsynth/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "bchsynth/bch_codec.hpp"
#include "bchsynth/detector.hpp"
#include "bchsynth/report_io.hpp"
#include "bchsynth/stream_io.hpp"

namespace bchsynth {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNoCandidate = 2;

void emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw std::runtime_error("cli: cannot open " + out_path + " for writing");
    out << text;
}

std::vector<BitVec> read_message_lines(const std::string& path, unsigned k)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cli: cannot open messages file " + path);
    std::vector<BitVec> messages;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        const BitVec bits = bits_from_ascii(line);
        if (bits.size() != k)
            throw std::runtime_error("cli: message line has " + std::to_string(bits.size()) +
                                     " bits, expected " + std::to_string(k));
        messages.push_back(bits);
    }
    return messages;
}

struct GenArgs {
    unsigned m = 0;
    unsigned t = 0;
    std::size_t count = 50;
    std::uint32_t seed = 1;
    double ber = 0.0;
    std::string out;
    std::string format = "ascii";
    std::string messages_file;
};

int cmd_gen(const GenArgs& args)
{
    const CodeSpec spec = build_generator(args.m, args.t);

    TestVectorSet set;
    if (!args.messages_file.empty()) {
        set.spec = spec;
        set.seed = args.seed;
        for (const BitVec& message : read_message_lines(args.messages_file, spec.k))
            set.codewords.push_back(encode(spec, message));
        if (set.codewords.empty())
            throw std::runtime_error("cli: messages file contains no messages");
    } else {
        if (args.count == 0)
            throw std::runtime_error("cli: count must be at least 1");
        set = generate_test_vectors(spec, args.count, args.seed);
    }
    // noise draws from its own stream so message sampling stays comparable
    // across ber settings
    if (args.ber > 0.0)
        set = inject_noise(set, args.ber, args.seed + 1);

    BitVec stream;
    stream.reserve(set.codewords.size() * spec.n);
    for (const BitVec& word : set.codewords)
        stream.insert(stream.end(), word.begin(), word.end());

    write_stream(args.out, stream, parse_stream_format(args.format));
    Sidecar sc;
    sc.g_octal = spec.g.to_octal();
    sc.m = spec.m;
    sc.n = spec.n;
    sc.k = spec.k;
    sc.t = spec.t;
    sc.seed = set.seed;
    sc.ber = set.ber;
    sc.count = set.codewords.size();
    write_sidecar(sidecar_path_for(args.out), sc);

    std::cerr << "wrote " << stream.size() << " bits (" << set.codewords.size() << " x "
              << spec.n << ") for (" << spec.n << "," << spec.k << "," << spec.t
              << ") code, g = " << spec.g.to_octal() << " (oct)\n";
    return kExitOk;
}

struct AnalyzeArgs {
    std::string in;
    std::string format = "ascii";
    std::optional<std::size_t> bits;
    unsigned n = 0;
    unsigned n_min = 0;
    unsigned n_max = 0;
    DetectorConfig cfg;
    std::string output = "human";
    std::string out;
};

BitVec load_stream(const AnalyzeArgs& args)
{
    const StreamFormat format = parse_stream_format(args.format);
    std::optional<std::size_t> bit_count = args.bits;
    if (format == StreamFormat::Packed && !bit_count) {
        if (const auto sc = read_sidecar(sidecar_path_for(args.in)))
            bit_count = sc->count * sc->n;
    }
    return read_stream(args.in, format, bit_count);
}

int cmd_analyze(const AnalyzeArgs& args)
{
    const BitVec bits = load_stream(args);
    const DetectionReport report = analyze(bits, args.n, args.cfg);

    const ReportFormat format = parse_report_format(args.output);
    if (format == ReportFormat::Csv)
        emit(report_csv(report, args.cfg.seed), args.out);
    else if (format == ReportFormat::Json)
        emit(report_json(report, args.cfg), args.out);
    else
        emit(report_human(report), args.out);
    return report.winner ? kExitOk : kExitNoCandidate;
}

int cmd_sweep(const AnalyzeArgs& args)
{
    const BitVec bits = load_stream(args);
    const SweepReport report = sweep(bits, args.n_min, args.n_max, args.cfg);

    const ReportFormat format = parse_report_format(args.output);
    if (format == ReportFormat::Csv)
        emit(sweep_csv(report, args.cfg.seed), args.out);
    else if (format == ReportFormat::Json)
        emit(sweep_json(report, args.cfg), args.out);
    else
        emit(sweep_human(report), args.out);
    return report.chosen_n ? kExitOk : kExitNoCandidate;
}

int cmd_factor(const std::string& octal)
{
    const Poly p = Poly::parse_octal(octal);
    const Factorization f = factor(p);
    std::string terms;
    std::string octals;
    for (const auto& term : f.factors) {
        if (!terms.empty()) {
            terms += ' ';
            octals += " * ";
        }
        terms += "(" + term.base.to_term_string() + ")";
        octals += term.base.to_octal();
        if (term.multiplicity > 1) {
            terms += "^" + std::to_string(term.multiplicity);
            octals += "^" + std::to_string(term.multiplicity);
        }
    }
    std::cout << "p(X) = " << p.to_octal() << " (oct) = " << p.to_term_string() << "\n"
              << "     = " << terms << "\n"
              << "     = " << octals << " (oct)\n";
    return kExitOk;
}

int cmd_gcd(const std::string& a_octal, const std::string& b_octal)
{
    const Poly g = gcd(Poly::parse_octal(a_octal), Poly::parse_octal(b_octal));
    std::cout << "gcd = " << g.to_octal() << " (oct) = " << g.to_term_string() << "\n";
    return kExitOk;
}

void add_detector_options(CLI::App* cmd, AnalyzeArgs& args)
{
    cmd->add_option("--in", args.in, "input bitstream file")->required();
    cmd->add_option("--format", args.format, "stream format: ascii | packed")
        ->default_val("ascii");
    cmd->add_option("--bits", args.bits, "bit count of a packed stream");
    cmd->add_option("--max-codewords", args.cfg.max_blocks,
                    "use only the first N usable blocks (0 = all)");
    cmd->add_option("--pair-cap", args.cfg.pair_cap, "max codeword pairs before sampling");
    cmd->add_option("--divisor-cap", args.cfg.divisor_cap, "max divisors credited per GCD");
    cmd->add_option("--seed", args.cfg.seed, "seed for pair sampling");
    cmd->add_option("--offset", args.cfg.offset, "bits to skip before segmentation");
    cmd->add_flag("--allow-non-bch-n", args.cfg.allow_non_bch_n,
                  "accept candidates at block lengths that are not 2^m-1");
    cmd->add_option("--threads", args.cfg.threads,
                    "worker threads (0 = all cores, 1 = serial)");
    cmd->add_option("--output", args.output, "report format: human | json | csv")
        ->default_val("human");
    cmd->add_option("--out", args.out, "write the report to a file instead of stdout");
}

}  // namespace

int run_cli(int argc, const char* const* argv)
{
    CLI::App app{"blind BCH parameter recovery from an eavesdropped bitstream"};
    app.require_subcommand(1);

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate a BCH-encoded test bitstream");
    gen->add_option("--m", gen_args.m, "extension degree of GF(2^m)")->required();
    gen->add_option("--t", gen_args.t, "error-correcting capability")->required();
    gen->add_option("--count", gen_args.count, "number of codewords")->default_val(50);
    gen->add_option("--seed", gen_args.seed, "message-sampling seed")->default_val(1);
    gen->add_option("--ber", gen_args.ber, "bit-error rate to inject")->default_val(0.0);
    gen->add_option("--out", gen_args.out, "output stream file")->required();
    gen->add_option("--format", gen_args.format, "stream format: ascii | packed")
        ->default_val("ascii");
    gen->add_option("--messages-file", gen_args.messages_file,
                    "encode these k-bit messages (one per line) instead of random ones");

    AnalyzeArgs analyze_args;
    auto* analyze_cmd = app.add_subcommand("analyze", "detect the generator at a known block length");
    analyze_cmd->add_option("--n", analyze_args.n, "block length")->required();
    add_detector_options(analyze_cmd, analyze_args);

    AnalyzeArgs sweep_args;
    auto* sweep_cmd = app.add_subcommand("sweep", "scan a range of block lengths");
    sweep_cmd->add_option("--n-min", sweep_args.n_min, "smallest block length")->required();
    sweep_cmd->add_option("--n-max", sweep_args.n_max, "largest block length")->required();
    add_detector_options(sweep_cmd, sweep_args);

    std::string factor_octal;
    auto* factor_cmd = app.add_subcommand("factor", "factor a polynomial given in octal");
    factor_cmd->add_option("poly", factor_octal, "polynomial (octal)")->required();

    std::string gcd_a;
    std::string gcd_b;
    auto* gcd_cmd = app.add_subcommand("gcd", "gcd of two polynomials given in octal");
    gcd_cmd->add_option("a", gcd_a, "first polynomial (octal)")->required();
    gcd_cmd->add_option("b", gcd_b, "second polynomial (octal)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(gen))
            return cmd_gen(gen_args);
        if (app.got_subcommand(analyze_cmd))
            return cmd_analyze(analyze_args);
        if (app.got_subcommand(sweep_cmd))
            return cmd_sweep(sweep_args);
        if (app.got_subcommand(factor_cmd))
            return cmd_factor(factor_octal);
        if (app.got_subcommand(gcd_cmd))
            return cmd_gcd(gcd_a, gcd_b);
    } catch (const DetectionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoCandidate;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

int run_cli(const std::vector<std::string>& args)
{
    std::vector<const char*> argv;
    argv.push_back("bchsynth");
    for (const std::string& arg : args)
        argv.push_back(arg.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace bchsynth
