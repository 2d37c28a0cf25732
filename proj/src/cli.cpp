/*------------------------------------------------------------------------
Command-line front end

Copyright 2026 fastssc contributors

Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
--------------------------------------------------------------------------*/
#include "fastssc/cli.hpp"

#include "fastssc/alteration.hpp"
#include "fastssc/construction.hpp"
#include "fastssc/engine.hpp"
#include "fastssc/latency.hpp"
#include "fastssc/program.hpp"
#include "fastssc/simulation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace fastssc {

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string &path)
{
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string &path, const std::string &text, std::ostream &out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f)
        throw std::invalid_argument("cannot write '" + path + "'");
    f << text;
}

std::string format_fixed(double v, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

struct TreeOptions {
    unsigned rep_max = 0;
    std::string node_set;

    void add(CLI::App *app)
    {
        app->add_option("--rep-max", rep_max, "Longest repetition node (16 or 32)");
        app->add_option("--node-set", node_set, "original or extended")
            ->check(CLI::IsMember({"original", "extended"}));
    }
    /// Without --node-set, rep_max 16 selects the original node set.
    TreeConstraints resolve() const
    {
        if (rep_max != 0 && rep_max != 16 && rep_max != 32)
            throw std::invalid_argument("--rep-max must be 16 or 32");
        TreeConstraints c;
        if (node_set == "original" || (node_set.empty() && rep_max == 16))
            c = TreeConstraints::original();
        else
            c = TreeConstraints::extended();
        if (rep_max != 0)
            c.rep_max = rep_max;
        return c;
    }
};

struct CostOptions {
    unsigned p_lanes = 512;
    unsigned spc_latency = 4;
    bool no_fusion = false;

    void add(CLI::App *app)
    {
        app->add_option("--p", p_lanes, "Processing lanes P");
        app->add_option("--spc-latency", spc_latency, "Pipeline depth of SPC-based nodes");
        app->add_flag("--no-fusion", no_fusion,
                      "Charge F/G/Combine separately even next to a leaf decoder");
    }
    CostModel resolve() const
    {
        CostModel m{p_lanes, spc_latency, !no_fusion};
        m.validate();
        return m;
    }
};

std::vector<Llr> parse_llrs(const std::string &text)
{
    std::vector<Llr> out;
    std::string token;
    std::stringstream ss(text);
    char c;
    auto flush = [&] {
        if (token.empty())
            return;
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(token, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != token.size())
            throw std::invalid_argument("malformed LLR value '" + token + "'");
        out.push_back(v);
        token.clear();
    };
    while (ss.get(c)) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '[' || c == ']')
            flush();
        else
            token.push_back(c);
    }
    flush();
    return out;
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Fast-SSC polar code toolkit"};
    app.require_subcommand(1);

    // construct
    auto *construct = app.add_subcommand("construct", "Build a polar code by Gaussian approximation");
    std::size_t c_n = 1024, c_k = 512;
    double c_snr = 2.5;
    std::string c_out;
    construct->add_option("--n", c_n, "Code length")->required();
    construct->add_option("--k", c_k, "Information bits")->required();
    construct->add_option("--design-snr-db", c_snr, "Design Eb/N0 in dB");
    construct->add_option("-o,--out", c_out, "Output file (default stdout)");

    // alter
    auto *alter = app.add_subcommand("alter", "Search altered constructions with lower latency");
    std::string a_code, a_out;
    AlterationConfig a_cfg;
    double a_design = NAN, a_ratio = 2.0;
    TreeOptions a_tree;
    CostOptions a_cost;
    alter->add_option("--code", a_code, "Code JSON file")->required();
    alter->add_option("--max-swaps", a_cfg.max_swaps, "Largest number of exchanged pairs");
    alter->add_option("--window-h", a_cfg.window_h, "Near-threshold positions per side");
    alter->add_option("--eval-snr-db", a_cfg.eval_snr_db, "Eb/N0 of the FER comparison");
    alter->add_option("--design-snr-db", a_design,
                      "Design SNR for the reliability order (default: --eval-snr-db)");
    alter->add_option("--seed", a_cfg.seed, "Simulation seed");
    alter->add_option("--list-size", a_cfg.list_size, "Combinations kept for FER evaluation");
    alter->add_option("--beam-width", a_cfg.beam_width, "Combinations extended per swap count");
    alter->add_option("--fer-errors", a_cfg.fer_errors, "Frame errors per search simulation");
    alter->add_option("--fer-frames", a_cfg.fer_frames, "Frame cap per search simulation");
    alter->add_option("--final-errors", a_cfg.final_fer_errors,
                      "Frame errors when re-simulating the front (0 skips)");
    alter->add_option("--final-frames", a_cfg.final_fer_frames, "Frame cap of the re-simulation");
    alter->add_option("--threads", a_cfg.threads, "Simulation workers");
    alter->add_option("--to-info", a_cfg.user_to_info, "Extra frozen positions to consider");
    alter->add_option("--to-frozen", a_cfg.user_to_frozen, "Extra information positions to consider");
    alter->add_flag("!--no-criteria", a_cfg.use_criteria, "Disable the tree-pattern criteria");
    alter->add_option("--select-ratio", a_ratio,
                      "FER ratio to the unaltered code allowed for the selected code");
    alter->add_option("-o,--out", a_out, "Write the selected code JSON here");
    a_tree.add(alter);
    a_cost.add(alter);

    // compile
    auto *compile_cmd = app.add_subcommand("compile", "Emit the decoder instruction program");
    std::string p_code, p_out;
    TreeOptions p_tree;
    compile_cmd->add_option("--code", p_code, "Code JSON file")->required();
    compile_cmd->add_option("-o,--out", p_out, "Output file (default stdout)");
    p_tree.add(compile_cmd);

    // latency
    auto *latency_cmd = app.add_subcommand("latency", "Cycle count of a code or program");
    std::string l_code, l_program;
    TreeOptions l_tree;
    CostOptions l_cost;
    latency_cmd->add_option("--code", l_code, "Code JSON file")->required();
    latency_cmd->add_option("--program", l_program, "Program text (default: compile the code)");
    l_tree.add(latency_cmd);
    l_cost.add(latency_cmd);

    // decode
    auto *decode = app.add_subcommand("decode", "Decode one frame of channel LLRs");
    std::string d_code, d_program, d_llr, d_quant = "float", d_decoder = "fastssc";
    TreeOptions d_tree;
    decode->add_option("--code", d_code, "Code JSON file")->required();
    decode->add_option("--program", d_program, "Program text (default: compile the code)");
    decode->add_option("--llr,--llr-in", d_llr, "File of LLR values, '-' for stdin")->required();
    decode->add_option("--quant", d_quant, "float or Qi.Qc.Qf, e.g. 6.5.1");
    decode->add_option("--decoder", d_decoder, "fastssc or sc")
        ->check(CLI::IsMember({"fastssc", "sc"}));
    d_tree.add(decode);

    // simulate
    auto *simulate = app.add_subcommand("simulate", "FER/BER over BPSK-AWGN");
    std::string s_code, s_out, s_quant = "float", s_decoder = "fastssc";
    double s_start = 1.0, s_stop = 3.0, s_step = 0.5;
    SimOptions s_opt;
    TreeOptions s_tree;
    simulate->add_option("--code", s_code, "Code JSON file")->required();
    simulate->add_option("--snr-start", s_start, "First Eb/N0 in dB");
    simulate->add_option("--snr-stop", s_stop, "Last Eb/N0 in dB");
    simulate->add_option("--snr-step", s_step, "Eb/N0 step in dB");
    simulate->add_option("--min-errors", s_opt.min_errors, "Frame errors per point");
    simulate->add_option("--max-frames", s_opt.max_frames, "Frame cap per point");
    simulate->add_option("--batch", s_opt.batch_frames, "Frames between stopping checks");
    simulate->add_option("--quant", s_quant, "float or Qi.Qc.Qf, e.g. 6.5.1");
    simulate->add_option("--seed", s_opt.seed, "Simulation seed");
    simulate->add_option("--threads", s_opt.threads, "Worker threads");
    simulate->add_option("--decoder", s_decoder, "fastssc or sc")
        ->check(CLI::IsMember({"fastssc", "sc"}));
    simulate->add_option("-o,--out", s_out, "CSV file (default stdout)");
    s_tree.add(simulate);

    // report
    auto *report = app.add_subcommand("report", "Latency and throughput summary");
    std::string r_code;
    std::uint64_t r_cycles = 0, r_k = 0;
    double r_clock = 0;
    TreeOptions r_tree;
    CostOptions r_cost;
    report->add_option("--code", r_code, "Code JSON file");
    report->add_option("--cycles", r_cycles, "Latency in clock cycles");
    report->add_option("--k", r_k, "Information bits");
    report->add_option("--clock-mhz", r_clock, "Clock frequency in MHz")->required();
    r_tree.add(report);
    r_cost.add(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError &e) {
        err << json{{"error", e.what()}}.dump() << '\n';
        return 2;
    }

    try {
        if (*construct) {
            const PolarCode code = construct_code(c_n, c_k, c_snr);
            write_output(c_out, code_to_json(code) + "\n", out);
        } else if (*alter) {
            const PolarCode code = code_from_json(read_file(a_code));
            a_cfg.constraints = a_tree.resolve();
            a_cfg.cost = a_cost.resolve();
            const double design = std::isnan(a_design) ? a_cfg.eval_snr_db : a_design;
            const auto profile = compute_reliabilities(code.n_bits(), design, code.rate());
            const AlterationResult r = search(code, profile, a_cfg);
            out << front_to_json(r.front) << '\n';
            if (!a_out.empty())
                save_code(select_entry(r, a_ratio).code, a_out);
            err << "alter: " << r.latency_evaluations << " latency evaluations, "
                << r.fer_evaluations << " FER simulations\n";
        } else if (*compile_cmd) {
            const PolarCode code = code_from_json(read_file(p_code));
            write_output(p_out, program_to_text(compile(build_tree(code, p_tree.resolve()))), out);
        } else if (*latency_cmd) {
            const PolarCode code = code_from_json(read_file(l_code));
            const Program prog = l_program.empty() ? compile(build_tree(code, l_tree.resolve()))
                                                   : program_from_text(read_file(l_program), code);
            out << latency(prog, l_cost.resolve()).to_json() << '\n';
        } else if (*decode) {
            const PolarCode code = code_from_json(read_file(d_code));
            const std::vector<Llr> raw = parse_llrs(read_file(d_llr));
            if (raw.size() != code.n_bits())
                throw std::invalid_argument("expected " + std::to_string(code.n_bits()) +
                                            " LLR values, got " + std::to_string(raw.size()));
            const LlrArithmetic arith = LlrArithmetic::parse(d_quant);
            std::vector<Llr> llr(raw.size());
            for (std::size_t i = 0; i < raw.size(); ++i)
                llr[i] = arith.from_channel(raw[i]);
            std::unique_ptr<FrameDecoder> dec;
            if (d_decoder == "sc") {
                dec = std::make_unique<ScReferenceDecoder>(code, arith);
            } else {
                auto prog = std::make_shared<const Program>(
                    d_program.empty() ? compile(build_tree(code, d_tree.resolve()))
                                      : program_from_text(read_file(d_program), code));
                dec = std::make_unique<FastSscDecoder>(prog, arith);
            }
            BitVec cw(code.n_bits());
            dec->decode(llr, cw);
            out << json{{"codeword", bits_to_string(cw)},
                        {"codeword_hex", bits_to_hex(cw)},
                        {"message", bits_to_string(extract_message(code, cw))}}
                       .dump()
                << '\n';
        } else if (*simulate) {
            const PolarCode code = code_from_json(read_file(s_code));
            if (!(s_step > 0) || s_stop < s_start)
                throw std::invalid_argument("need --snr-step > 0 and --snr-stop >= --snr-start");
            s_opt.arith = LlrArithmetic::parse(s_quant);
            const DecoderFactory factory =
                s_decoder == "sc" ? sc_reference_factory(code, s_opt.arith)
                                  : fastssc_factory(code, s_tree.resolve(), s_opt.arith);
            std::vector<double> snrs;
            for (int i = 0;; ++i) {
                const double v = s_start + i * s_step;
                if (v > s_stop + 1e-9)
                    break;
                snrs.push_back(v);
            }
            std::vector<SimResult> results;
            for (double snr : snrs) {
                results.push_back(run_fer(code, factory, ChannelParams{snr, code.rate()}, s_opt));
                err << "simulate: " << snr << " dB, " << results.back().frames << " frames, "
                    << results.back().elapsed_s << " s\n";
            }
            write_output(s_out, results_to_csv(results), out);
        } else if (*report) {
            std::uint64_t cycles = r_cycles, k = r_k;
            if (!r_code.empty()) {
                const PolarCode code = code_from_json(read_file(r_code));
                cycles = latency(compile(build_tree(code, r_tree.resolve())), r_cost.resolve()).cycles;
                k = code.k_info();
            } else if (r_cycles == 0 || r_k == 0) {
                throw std::invalid_argument("report needs --code or both --cycles and --k");
            }
            if (!(r_clock > 0))
                throw std::invalid_argument("--clock-mhz must be positive");
            const double bits_per_cc = static_cast<double>(k) / static_cast<double>(cycles);
            const double mbps = bits_per_cc * r_clock;
            const double latency_us = static_cast<double>(cycles) / r_clock;
            json j;
            j["k"] = k;
            j["cycles"] = cycles;
            j["clock_mhz"] = r_clock;
            j["info_bits_per_cc"] = bits_per_cc;
            j["latency_us"] = latency_us;
            j["throughput_mbps"] = mbps;
            j["table"] = {{"info_bits_per_cc", format_fixed(bits_per_cc, 2)},
                          {"latency_us", format_fixed(latency_us, 2)},
                          {"throughput_mbps", format_fixed(mbps, 0)}};
            out << j.dump() << '\n';
        }
    } catch (const std::exception &e) {
        err << json{{"error", e.what()}}.dump() << '\n';
        return 1;
    }
    return 0;
}

} // namespace fastssc
