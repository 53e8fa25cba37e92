// Copyright 2026 The hcasynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// \file cli_app.hpp
/// The hcasynth command line. Kept in a header so tests can drive run()
/// with in-memory streams.

#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hca/bits.hpp"
#include "hca/boolfunc.hpp"
#include "hca/ca.hpp"
#include "hca/gf2.hpp"
#include "hca/lfsr.hpp"
#include "hca/lhca.hpp"
#include "hca/prng_eval.hpp"

namespace hca::cli {

using Json = nlohmann::ordered_json;

inline constexpr std::uint64_t kDefaultRngSeed = 0x5eed5eedULL;

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

namespace detail {

inline std::string format_poly(const Gf2Poly& p, bool hex) { return hex ? to_hex_string(p) : to_string(p); }

inline std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

/// First whitespace-separated token made only of 0s and 1s.
inline std::string first_bit_token(const std::string& text) {
  std::istringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    if (tok.find_first_not_of("01") == std::string::npos) return tok;
  }
  throw std::invalid_argument("no rule vector found on standard input");
}

/// ASCII 0/1 (whitespace ignored) when every byte qualifies, raw bytes
/// (most significant bit first) otherwise.
inline BitSequence decode_sequence(const std::string& data, const std::string& format) {
  const bool ascii = data.find_first_not_of("01 \t\r\n") == std::string::npos;
  if (format == "bits" || (format == "auto" && ascii && !data.empty())) return parse_bits(data);
  return unpack_bytes_msb_first(std::vector<std::uint8_t>(data.begin(), data.end()));
}

inline void emit_bits(std::ostream& out, const BitSequence& bits, const std::string& format) {
  if (format == "bytes") {
    const auto bytes = pack_bytes_msb_first(bits);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  } else {
    out << to_string(bits) << '\n';
  }
}

/// A machine state of n bits: a 0/1 string of exactly n characters is read
/// cell by cell, anything else as hex (bit i = cell i).
inline BitSequence parse_state(const std::string& text, std::size_t n) {
  const bool binary = !text.empty() && text.find_first_not_of("01") == std::string::npos;
  if (binary && text.size() == n) return parse_bits(text);
  return parse_hex_bits(text, n);
}

inline BitSequence random_nonzero_state(std::size_t n, std::uint64_t rng_seed) {
  std::mt19937_64 rng(rng_seed);
  BitSequence s(n);
  do {
    for (auto& b : s) b = static_cast<std::uint8_t>(rng() & 1U);
  } while (weight(s) == 0);
  return s;
}

inline Json report_json(const TestReport& r) {
  Json j;
  j["test"] = r.test;
  j["params"] = Json::object();
  for (const auto& [k, v] : r.params) j["params"][k] = v;
  j["statistics"] = Json::object();
  for (const auto& [k, v] : r.statistics) j["statistics"][k] = v;
  j["pass"] = r.pass;
  j["length"] = r.length;
  if (r.error) j["error"] = *r.error;
  return j;
}

inline Json cycles_json(const CycleStructure& cs) {
  Json arr = Json::array();
  for (auto [len, count] : cs.cycles) arr.push_back({{"length", len}, {"count", count}});
  return arr;
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, Streams io) {
  CLI::App app{"Hybrid 90/150 cellular automata synthesis and pseudo-random sequence tools", "hcasynth"};
  app.require_subcommand(1);
  std::uint64_t rng_seed = kDefaultRngSeed;
  app.add_option("--rng-seed", rng_seed, "Seed for any randomized choice (default 0x5eed5eed)");

  // synth
  auto* synth = app.add_subcommand("synth", "Synthesize the 90/150 LHCA realizations of an irreducible polynomial");
  std::string synth_poly;
  bool synth_verify = false, synth_json = false, synth_hex = false;
  synth->add_option("--poly", synth_poly, "Irreducible polynomial, symbolic or 0x hex")->required();
  synth->add_flag("--verify", synth_verify, "Recompute the characteristic polynomial of each realization");
  synth->add_flag("--json", synth_json, "Emit JSON");
  synth->add_flag("--hex", synth_hex, "Emit polynomials as hex masks");

  // charpoly
  auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial of a rule vector");
  std::string cp_rules;
  bool cp_hex = false, cp_sub = false;
  charpoly->add_option("--rules", cp_rules, "Rule vector as 0/1 string, or - for stdin")->required();
  charpoly->add_flag("--hex", cp_hex, "Emit hex mask");
  charpoly->add_flag("--subpolys", cp_sub, "Also print the two characteristic subpolynomials");

  // evolve
  auto* evolve_cmd = app.add_subcommand("evolve", "Time-space diagram of an elementary CA");
  int ev_rule = 30;
  std::string ev_init, ev_init_hex, ev_boundary = "cyclic", ev_format = "text";
  std::size_t ev_cells = 0, ev_steps = 8;
  evolve_cmd->add_option("--rule", ev_rule, "Rule number 0..255")->required();
  auto* ev_init_opt = evolve_cmd->add_option("--init", ev_init, "Initial configuration as 0/1 string");
  evolve_cmd->add_option("--init-hex", ev_init_hex, "Initial configuration as hex (bit i = cell i)")->excludes(ev_init_opt);
  evolve_cmd->add_option("--cells", ev_cells, "Number of cells (required with --init-hex)");
  evolve_cmd->add_option("--steps", ev_steps, "Number of steps");
  evolve_cmd->add_option("--boundary", ev_boundary, "cyclic | null")->check(CLI::IsMember({"cyclic", "null"}));
  evolve_cmd->add_option("--format", ev_format, "text | pbm")->check(CLI::IsMember({"text", "pbm"}));

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a bit stream");
  std::optional<int> gen_rule;
  std::string gen_lhca, gen_lhca_poly, gen_lfsr, gen_boolfunc, gen_seed, gen_form = "fibonacci",
                                                                      gen_format = "bits", gen_boundary = "cyclic";
  std::size_t gen_bits = 64, gen_cells = 64;
  std::optional<std::size_t> gen_cell;
  unsigned gen_n = 5, gen_i = 1;
  std::string gen_a = "1", gen_b = "1", gen_modulus;
  auto* g_rule = gen->add_option("--rule", gen_rule, "Elementary CA rule; output one cell");
  auto* g_lhca = gen->add_option("--lhca", gen_lhca, "LHCA rule vector; output one cell");
  auto* g_lhcap = gen->add_option("--lhca-poly", gen_lhca_poly, "Synthesize the LHCA from this polynomial");
  auto* g_lfsr = gen->add_option("--lfsr", gen_lfsr, "LFSR connection polynomial");
  auto* g_bf = gen->add_option("--boolfunc", gen_boolfunc, "Trace-monomial family (gold|kasami|welch|niho)");
  for (auto* o : {g_rule, g_lhca, g_lhcap, g_lfsr, g_bf}) {
    for (auto* p : {g_rule, g_lhca, g_lhcap, g_lfsr, g_bf}) {
      if (o != p) o->excludes(p);
    }
  }
  gen->add_option("--seed", gen_seed, "Initial state as hex (bit i = cell/stage i) or 0/1 string with --cells");
  gen->add_option("--bits", gen_bits, "Number of output bits");
  gen->add_option("--cells", gen_cells, "Ring size for --rule");
  gen->add_option("--cell", gen_cell, "Output cell (default: middle cell)");
  gen->add_option("--boundary", gen_boundary, "cyclic | null (for --rule)")->check(CLI::IsMember({"cyclic", "null"}));
  gen->add_option("--form", gen_form, "fibonacci | galois (for --lfsr)")->check(CLI::IsMember({"fibonacci", "galois"}));
  gen->add_option("--format", gen_format, "bits (ASCII 0/1) | bytes (raw, MSB first)")
      ->check(CLI::IsMember({"bits", "bytes"}));
  gen->add_option("--n", gen_n, "Field degree for --boolfunc");
  gen->add_option("--i", gen_i, "Family parameter i for --boolfunc");
  gen->add_option("--a", gen_a, "Coefficient a (hex) for --boolfunc");
  gen->add_option("--b", gen_b, "Coefficient b (hex) for --boolfunc");
  gen->add_option("--modulus", gen_modulus, "Primitive modulus for --boolfunc");

  // cycles
  auto* cycles = app.add_subcommand("cycles", "Cycle structure of an LFSR or LHCA, as JSON");
  std::string cy_machine, cy_poly, cy_rules, cy_form = "fibonacci";
  bool cy_hex = false;
  cycles->add_option("--machine", cy_machine, "lfsr | lhca")->required()->check(CLI::IsMember({"lfsr", "lhca"}));
  auto* cy_poly_opt = cycles->add_option("--poly", cy_poly, "Connection / characteristic polynomial");
  cycles->add_option("--rules", cy_rules, "LHCA rule vector (instead of --poly)")->excludes(cy_poly_opt);
  cycles->add_option("--form", cy_form, "fibonacci | galois")->check(CLI::IsMember({"fibonacci", "galois"}));
  cycles->add_flag("--hex", cy_hex, "Emit polynomials as hex masks");

  // scan-rules
  auto* scan = app.add_subcommand("scan-rules", "Walsh linearity / correlation-immunity scan of all 256 rules");
  bool scan_json = false;
  scan->add_flag("--json", scan_json, "Emit the 256-row table as JSON");

  // test
  auto* test = app.add_subcommand("test", "Run the statistical battery on a bit sequence");
  std::string test_in, test_battery = "fips", test_format = "auto";
  bool test_json = false, test_strict = false;
  test->add_option("--in", test_in, "Input file, or - for stdin")->required();
  test->add_option("--battery", test_battery, "Comma list of fips,monobit,poker,runs,long-run,chi2,serial,entropy,montecarlo");
  test->add_option("--input-format", test_format, "auto | bits | bytes")->check(CLI::IsMember({"auto", "bits", "bytes"}));
  test->add_flag("--json", test_json, "Emit JSON reports");
  test->add_flag("--strict", test_strict, "Exit with status 2 if any test fails");

  // minpoly
  auto* minpoly = app.add_subcommand("minpoly", "Minimal polynomial of a field element");
  std::string mp_modulus, mp_element;
  std::optional<std::uint64_t> mp_power;
  bool mp_hex = false;
  minpoly->add_option("--modulus", mp_modulus, "Irreducible field modulus")->required();
  auto* mp_el = minpoly->add_option("--element", mp_element, "Element as a polynomial in x (symbolic or hex)");
  minpoly->add_option("--power", mp_power, "Use x^k mod modulus")->excludes(mp_el);
  minpoly->add_flag("--hex", mp_hex, "Emit hex mask");

  // boolfunc
  auto* bf = app.add_subcommand("boolfunc", "Trace-monomial boolean function Tr(a x + b x^s)");
  std::string bf_family, bf_a = "1", bf_b = "1", bf_modulus;
  unsigned bf_n = 5, bf_i = 1;
  bool bf_table = false, bf_parity = false, bf_lhca = false, bf_hex = false, bf_walsh = false;
  std::optional<std::size_t> bf_stream;
  bf->add_option("--family", bf_family, "gold | kasami | welch | niho")->required();
  bf->add_option("--n", bf_n, "Field degree");
  bf->add_option("--i", bf_i, "Family parameter i (gold, kasami)");
  bf->add_option("--a", bf_a, "Coefficient a as hex index");
  bf->add_option("--b", bf_b, "Coefficient b as hex index");
  bf->add_option("--modulus", bf_modulus, "Primitive modulus (default: smallest primitive of degree n)");
  bf->add_flag("--table", bf_table, "Print the truth table");
  bf->add_option("--stream", bf_stream, "Print N bits of Tr(a alpha^t + b alpha^(s t))");
  bf->add_flag("--parity", bf_parity, "Print the parity-check polynomial m_alpha m_alpha^s");
  bf->add_flag("--lhca", bf_lhca, "Print the composed LHCA realizing the parity-check polynomial");
  bf->add_flag("--walsh", bf_walsh, "Print the distinct absolute Walsh values of the truth table");
  bf->add_flag("--hex", bf_hex, "Emit polynomials as hex masks");

  std::vector<std::string> argv_storage{"hcasynth"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, io.out, io.err);
  }

  auto& out = io.out;
  try {
    if (*synth) {
      const Gf2Poly p = parse_poly(synth_poly);
      const Synthesis s = synthesize(p);
      bool ok = true;
      if (synth_json) {
        Json j;
        j["poly"] = detail::format_poly(p, synth_hex);
        j["realizations"] = Json::array();
        for (const auto& v : s.realizations) j["realizations"].push_back(to_string(v));
        j["canonical"] = to_string(s.canonical());
        if (synth_verify) {
          Json checks = Json::array();
          for (const auto& v : s.realizations) {
            const bool match = char_poly(v) == p;
            ok = ok && match;
            checks.push_back({{"rules", to_string(v)}, {"charpoly", detail::format_poly(char_poly(v), synth_hex)}, {"ok", match}});
          }
          j["verify"] = checks;
        }
        out << j.dump(2) << '\n';
      } else {
        for (const auto& v : s.realizations) out << "realization " << to_string(v) << '\n';
        out << "canonical " << to_string(s.canonical()) << '\n';
        if (synth_verify) {
          for (const auto& v : s.realizations) {
            const bool match = char_poly(v) == p;
            ok = ok && match;
            out << "verify " << to_string(v) << ' ' << detail::format_poly(char_poly(v), synth_hex) << ' '
                << (match ? "ok" : "MISMATCH") << '\n';
          }
        }
      }
      return ok ? 0 : 1;
    }

    if (*charpoly) {
      std::string text = cp_rules == "-" ? detail::first_bit_token(detail::read_all(io.in)) : cp_rules;
      const RuleVector v = RuleVector::parse(text);
      out << detail::format_poly(char_poly(v), cp_hex) << '\n';
      if (cp_sub && v.size() >= 2) {
        const auto sp = subpolynomials(v);
        out << "leading " << detail::format_poly(sp.leading, cp_hex) << '\n';
        out << "trailing " << detail::format_poly(sp.trailing, cp_hex) << '\n';
      }
      return 0;
    }

    if (*evolve_cmd) {
      Configuration c;
      c.boundary = ev_boundary == "null" ? Boundary::null : Boundary::cyclic;
      if (!ev_init_hex.empty()) {
        if (ev_cells == 0) throw std::invalid_argument("--init-hex requires --cells");
        c.cells = parse_hex_bits(ev_init_hex, ev_cells);
      } else if (!ev_init.empty()) {
        c.cells = parse_bits(ev_init);
      } else {
        if (ev_cells == 0) throw std::invalid_argument("either --init, --init-hex or --cells is required");
        c.cells.assign(ev_cells, 0);
        c.cells[ev_cells / 2] = 1;
      }
      if (c.cells.empty()) throw std::invalid_argument("configuration must have at least one cell");
      const auto rows = evolve(c, Rule::from_number(ev_rule), ev_steps);
      out << (ev_format == "pbm" ? diagram_pbm(rows) : diagram_text(rows));
      return 0;
    }

    if (*gen) {
      BitSequence bits;
      if (gen_rule) {
        Configuration c;
        c.boundary = gen_boundary == "null" ? Boundary::null : Boundary::cyclic;
        if (gen_seed.empty()) {
          c.cells.assign(gen_cells, 0);
          c.cells[gen_cells / 2] = 1;
        } else if (gen_seed.find_first_not_of("01") == std::string::npos && !gen->count("--cells")) {
          c.cells = parse_bits(gen_seed);  // the string fixes the ring size
        } else {
          c.cells = detail::parse_state(gen_seed, gen_cells);
        }
        if (c.cells.empty()) throw std::invalid_argument("configuration must have at least one cell");
        bits = cell_sequence(c, Rule::from_number(*gen_rule), gen_cell.value_or(c.cells.size() / 2), gen_bits);
      } else if (!gen_lhca.empty() || !gen_lhca_poly.empty()) {
        const RuleVector v =
            gen_lhca.empty() ? synthesize(parse_poly(gen_lhca_poly)).canonical() : RuleVector::parse(gen_lhca);
        const BitSequence state = gen_seed.empty() ? detail::random_nonzero_state(v.size(), rng_seed)
                                                   : detail::parse_state(gen_seed, v.size());
        const LhcaMachine m(v, state);
        bits = lhca_cell_sequence(m, gen_cell.value_or(v.size() / 2), gen_bits);
      } else if (!gen_lfsr.empty()) {
        const Gf2Poly p = parse_poly(gen_lfsr);
        const auto n = static_cast<std::size_t>(std::max(p.degree(), 1));
        const BitSequence state =
            gen_seed.empty() ? detail::random_nonzero_state(n, rng_seed) : detail::parse_state(gen_seed, n);
        const LfsrMachine m(p, state, gen_form == "galois" ? LfsrForm::galois : LfsrForm::fibonacci);
        bits = lfsr_sequence(m, gen_bits);
      } else if (!gen_boolfunc.empty()) {
        const ExponentFamily fam{parse_family(gen_boolfunc), gen_i, gen_n};
        const Gf2Poly modulus =
            gen_modulus.empty() ? smallest_primitive(static_cast<int>(gen_n)) : parse_poly(gen_modulus);
        if (modulus.degree() != static_cast<int>(gen_n)) throw std::invalid_argument("--modulus degree must equal --n");
        const Gf2Field field(modulus);
        const auto f = make_trace_monomial(field, std::stoull(gen_a, nullptr, 16), std::stoull(gen_b, nullptr, 16),
                                           exponent(fam));
        bits = power_sequence(f, gen_bits);
      } else {
        throw std::invalid_argument("gen needs one of --rule, --lhca, --lhca-poly, --lfsr, --boolfunc");
      }
      detail::emit_bits(out, bits, gen_format);
      return 0;
    }

    if (*cycles) {
      Json j;
      j["machine"] = cy_machine;
      CycleStructure cs;
      if (cy_machine == "lfsr") {
        if (cy_poly.empty()) throw std::invalid_argument("--machine lfsr requires --poly");
        const Gf2Poly p = parse_poly(cy_poly);
        const LfsrMachine m(p, BitSequence(static_cast<std::size_t>(std::max(p.degree(), 0)), 0),
                            cy_form == "galois" ? LfsrForm::galois : LfsrForm::fibonacci);
        j["poly"] = detail::format_poly(p, cy_hex);
        j["form"] = cy_form;
        j["state_bits"] = m.size();
        cs = cycle_structure(m);
      } else {
        RuleVector v = cy_rules.empty() ? RuleVector(BitSequence{0}) : RuleVector::parse(cy_rules);
        if (cy_rules.empty()) {
          if (cy_poly.empty()) throw std::invalid_argument("--machine lhca requires --poly or --rules");
          v = synthesize(parse_poly(cy_poly)).canonical();
        }
        const LhcaMachine m(v);
        j["poly"] = detail::format_poly(char_poly(v), cy_hex);
        j["rules"] = to_string(v);
        j["state_bits"] = m.size();
        cs = cycle_structure(m);
      }
      j["cycles"] = detail::cycles_json(cs);
      j["transient_states"] = cs.transient_states;
      out << j.dump(2) << '\n';
      return 0;
    }

    if (*scan) {
      const RuleScan s = scan_elementary_rules();
      if (scan_json) {
        Json rows = Json::array();
        for (const auto& r : s.rows) {
          rows.push_back({{"rule", r.rule},
                          {"linear", r.linear},
                          {"nonlinear", !r.linear},
                          {"ci1", r.ci1},
                          {"ci_order", r.ci_order},
                          {"balanced", r.balanced},
                          {"resilient1", r.resilient1}});
        }
        out << rows.dump(2) << '\n';
      } else {
        out << "rule linear ci1 ci_order balanced\n";
        for (const auto& r : s.rows) {
          out << r.rule << ' ' << r.linear << ' ' << r.ci1 << ' ' << r.ci_order << ' ' << r.balanced << '\n';
        }
        out << "affine rules: " << s.linear_count() << '\n';
        out << "nonlinear CI(1) rules:";
        for (int r : s.nonlinear_ci1()) out << ' ' << r;
        out << "\nnonlinear balanced CI(1) rules:";
        for (int r : s.nonlinear_resilient1()) out << ' ' << r;
        out << '\n';
      }
      return 0;
    }

    if (*test) {
      std::string data;
      if (test_in == "-") {
        data = detail::read_all(io.in);
      } else {
        std::ifstream f(test_in, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open input file '" + test_in + "'");
        data = detail::read_all(f);
      }
      const BitSequence s = detail::decode_sequence(data, test_format);
      std::vector<std::string> names;
      std::stringstream ss(test_battery);
      for (std::string tok; std::getline(ss, tok, ',');) {
        if (!tok.empty()) names.push_back(tok);
      }
      const auto reports = battery(s, names);
      bool all_pass = true;
      if (test_json) {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(detail::report_json(r));
        out << arr.dump(2) << '\n';
      }
      for (const auto& r : reports) {
        all_pass = all_pass && r.pass;
        if (test_json) continue;
        out << r.test << ' ' << (r.error ? "ERROR" : r.pass ? "PASS" : "FAIL");
        if (r.error) out << ' ' << *r.error;
        for (const auto& [k, v] : r.statistics) out << ' ' << k << '=' << v;
        out << '\n';
      }
      return test_strict && !all_pass ? 2 : 0;
    }

    if (*minpoly) {
      const Gf2Field field(parse_poly(mp_modulus));
      FieldElement a = field.zero();
      if (mp_power) {
        a = field.generator().pow(*mp_power);
      } else if (!mp_element.empty()) {
        a = field.element(parse_poly(mp_element));
      } else {
        throw std::invalid_argument("minpoly needs --element or --power");
      }
      out << detail::format_poly(minimal_polynomial(a), mp_hex) << '\n';
      return 0;
    }

    if (*bf) {
      const ExponentFamily fam{parse_family(bf_family), bf_i, bf_n};
      const std::uint64_t s = exponent(fam);
      const Gf2Poly modulus = bf_modulus.empty() ? smallest_primitive(static_cast<int>(bf_n)) : parse_poly(bf_modulus);
      if (modulus.degree() != static_cast<int>(bf_n)) throw std::invalid_argument("--modulus degree must equal --n");
      const Gf2Field field(modulus);
      const auto f = make_trace_monomial(field, std::stoull(bf_a, nullptr, 16), std::stoull(bf_b, nullptr, 16), s);
      out << "exponent " << s << '\n';
      out << "modulus " << detail::format_poly(modulus, bf_hex) << '\n';
      if (bf_table) out << "table " << to_string(truth_table(f).table()) << '\n';
      if (bf_stream) out << "stream " << to_string(power_sequence(f, *bf_stream)) << '\n';
      if (bf_parity) out << "parity " << detail::format_poly(parity_check_poly(s, modulus), bf_hex) << '\n';
      if (bf_lhca) {
        const LhcaMachine m = realize_as_lhca(s, modulus);
        out << "lhca";
        for (const auto& b : m.blocks()) out << ' ' << to_string(b);
        out << '\n';
        out << "lhca-charpoly " << detail::format_poly(char_poly(m), bf_hex) << '\n';
      }
      if (bf_walsh) {
        std::set<std::int64_t> values;
        for (auto v : walsh_spectrum(truth_table(f))) values.insert(v < 0 ? -v : v);
        out << "walsh-abs";
        for (auto v : values) out << ' ' << v;
        out << '\n';
      }
      return 0;
    }
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace hca::cli
