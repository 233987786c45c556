// Command-line front end for the two-bridge knot word library.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "twobridge/billiard.hpp"
#include "twobridge/counting.hpp"
#include "twobridge/distributions.hpp"
#include "twobridge/errors.hpp"
#include "twobridge/insertions.hpp"
#include "twobridge/io.hpp"
#include "twobridge/oracle.hpp"
#include "twobridge/sampler.hpp"
#include "twobridge/selfcheck.hpp"

using namespace twobridge;
using nlohmann::json;

namespace {

enum class Format { text, json, csv };

constexpr int kExitInvalid = 2;
constexpr int kExitGuard = 3;

std::string show(const Word& w) { return w.empty() ? "(empty)" : w.str(); }

std::string state_name(ReductionState s) {
  switch (s) {
    case ReductionState::reduced: return "reduced";
    case ReductionState::internal_reduced_only: return "internal_reduced_only";
    case ReductionState::not_internal_reduced: return "not_internal_reduced";
  }
  return "?";
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

void print_class_text(const KnotClass& k) {
  std::cout << "canonical " << show(k.canonical) << "\n"
            << "ell0 " << k.ell0 << "\nell1 " << k.ell1 << "\nr " << k.multiplicity << "\ncrossing_number "
            << k.crossing_number << "\nunknot " << (k.is_unknot ? "yes" : "no") << '\n';
}

void print_pmf_text(const CrossingPmf& pmf) {
  std::cout << "n " << pmf.n << "\n";
  std::cout << "c=0 (unknot) " << pmf.unknot.to_string() << "  " << std::setprecision(10) << pmf.unknot.to_double()
            << '\n';
  for (const auto& [c, mass] : pmf.masses) {
    std::cout << "c=" << c << ' ' << mass.to_string() << "  " << mass.to_double() << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random two-bridge knots on billiard table diagrams T(3, n+1)"};
  app.fallthrough();
  app.require_subcommand(1);

  Format format = Format::text;
  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
  app.add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  std::string word_arg;
  std::size_t n = 0;
  std::size_t m = 0;
  bool chiral = false;
  bool internal_only = false;
  std::string locations_arg;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  std::string out_path;
  bool flip = false;
  bool deep = false;
  double delta = 0.05;

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a word to its terminal form");
  reduce_cmd->add_option("word", word_arg)->required();

  auto* moves_cmd = app.add_subcommand("moves", "List the available reduction moves");
  moves_cmd->add_option("word", word_arg)->required();

  auto* class_cmd = app.add_subcommand("class", "Knot class of a word");
  class_cmd->add_option("word", word_arg)->required();
  class_cmd->add_flag("--chiral", chiral, "Distinguish mirror images");

  auto* prob_cmd = app.add_subcommand("prob", "Exact probability P[K_n = K] of the knot represented by a word");
  prob_cmd->add_option("word", word_arg)->required();
  prob_cmd->add_option("--n", n)->required();
  prob_cmd->add_flag("--chiral", chiral, "Distinguish mirror images");

  auto* pmf_cmd = app.add_subcommand("pmf", "Exact crossing number distribution");
  pmf_cmd->add_option("--n", n)->required();

  auto* rate_cmd = app.add_subcommand("rate", "Per-crossing decay rate of a knot probability");
  rate_cmd->add_option("--word", word_arg)->required();
  rate_cmd->add_option("--n", n)->required();
  rate_cmd->add_flag("--chiral", chiral, "Distinguish mirror images");

  auto* beta_cmd = app.add_subcommand("beta", "Mode and tail mass of c/n for the exact pmf");
  beta_cmd->add_option("--n", n)->required();
  beta_cmd->add_option("--delta", delta, "Tail half-width around beta");

  auto* enum_cmd = app.add_subcommand("enumerate", "Brute-force distribution over all 2^n words");
  enum_cmd->add_option("--n", n)->required();
  enum_cmd->add_flag("--chiral", chiral, "Distinguish mirror images");

  auto* ins_cmd = app.add_subcommand("insertions", "Enumerate words obtained by m triple insertions");
  ins_cmd->add_option("word", word_arg)->required();
  ins_cmd->add_option("--m", m)->required();
  ins_cmd->add_flag("--internal-only", internal_only, "Only 000/111 insertions");

  auto* trace_cmd = app.add_subcommand("trace", "Run the stack reconstruction for a location set");
  trace_cmd->add_option("word", word_arg)->required();
  trace_cmd->add_option("--m", m)->required();
  trace_cmd->add_option("--locations", locations_arg, "Comma-separated 1-based locations");

  auto* sample_cmd = app.add_subcommand("sample", "Monte Carlo crossing number histogram");
  sample_cmd->add_option("--n", n)->required();
  sample_cmd->add_option("--count", count)->required();
  sample_cmd->add_option("--seed", seed)->required();
  sample_cmd->add_option("--workers", workers, "Number of substreams");

  auto* render_cmd = app.add_subcommand("render", "Write an SVG billiard table diagram");
  render_cmd->add_option("word", word_arg)->required();
  render_cmd->add_option("--out", out_path)->required();
  render_cmd->add_flag("--flip-crossings", flip, "Put the slope -1 strand on top for bit 1");

  auto* check_cmd = app.add_subcommand("selfcheck", "Run the invariant suites");
  check_cmd->add_flag("--deep", deep, "Wider ranges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  const auto mode = chiral ? ChiralityMode::chiral : ChiralityMode::mirror_identified;

  try {
    if (*reduce_cmd) {
      const Word w(word_arg);
      const Word t = reduce(w);
      if (format == Format::json) {
        print_json({{"word", w.str()},
                    {"terminal", t.str()},
                    {"state", state_name(reduction_state(t))},
                    {"crossing_number", crossing_number(w)}});
      } else {
        std::cout << show(t) << '\n';
      }
    } else if (*moves_cmd) {
      const Word w(word_arg);
      json arr = json::array();
      for (const auto& mv : available_moves(w)) {
        arr.push_back({{"kind", to_string(mv.kind)}, {"position", mv.position}, {"deleted", mv.deleted.str()}});
        if (format != Format::json) {
          std::cout << to_string(mv.kind) << ' ' << mv.position << ' ' << mv.deleted.str() << " -> "
                    << show(apply_move(w, mv)) << '\n';
        }
      }
      if (format == Format::json) print_json(arr);
    } else if (*class_cmd) {
      const auto k = knot_class(Word(word_arg), mode);
      if (format == Format::json) {
        print_json(io::to_json(k));
      } else {
        print_class_text(k);
      }
    } else if (*prob_cmd) {
      const auto k = knot_class(Word(word_arg), mode);
      const auto p = knot_probability(k, n);
      if (format == Format::json) {
        print_json({{"n", n}, {"knot", io::to_json(k)}, {"probability", p.to_string()}, {"float", p.to_double()}});
      } else {
        std::cout << p.to_string() << '\n';
      }
    } else if (*pmf_cmd) {
      const auto pmf = crossing_pmf(n);
      if (format == Format::json) {
        print_json(io::to_json(pmf));
      } else if (format == Format::csv) {
        std::cout << io::to_csv(pmf);
      } else {
        print_pmf_text(pmf);
      }
    } else if (*rate_cmd) {
      const auto k = knot_class(Word(word_arg), mode);
      const auto r = alpha_rate(k, n);
      if (format == Format::json) {
        print_json({{"n", r.n}, {"log2_rate", r.log2_rate}, {"target", r.target}, {"gap", r.gap}});
      } else {
        std::cout << std::setprecision(12) << "log2_rate " << r.log2_rate << "\ntarget " << r.target << "\ngap "
                  << r.gap << '\n';
      }
    } else if (*beta_cmd) {
      const auto s = beta_summary(n, delta);
      if (format == Format::json) {
        print_json({{"n", s.n},
                    {"mode", s.mode},
                    {"mode_ratio", s.mode_ratio},
                    {"target", s.target},
                    {"gap", s.gap},
                    {"delta", s.delta},
                    {"tail", s.tail.to_string()},
                    {"tail_float", s.tail.to_double()}});
      } else {
        std::cout << std::setprecision(12) << "mode " << s.mode << "\nmode_ratio " << s.mode_ratio << "\ntarget "
                  << s.target << "\ntail " << s.tail.to_double() << '\n';
      }
    } else if (*enum_cmd) {
      const auto dist = oracle::exact_distribution(n, mode, oracle::Limits::from_environment());
      if (format == Format::json) {
        print_json(io::to_json(dist));
      } else if (format == Format::csv) {
        std::cout << io::to_csv(dist);
      } else {
        for (const auto& [canonical, k] : dist.counts) {
          std::cout << show(canonical) << " c=" << dist.classes.at(canonical).crossing_number << ' ' << k << '/'
                    << dist.total() << '\n';
        }
      }
    } else if (*ins_cmd) {
      const Word w(word_arg);
      const auto scope = internal_only ? oracle::InsertionScope::internal_only : oracle::InsertionScope::all;
      const auto words = oracle::enumerate_insertions(w, m, scope, oracle::Limits::from_environment());
      Count formula = internal_only ? count_internal(w.size(), m) : Count(-1);
      if (!internal_only && is_reduced(w)) formula = count_full(m, w.size());
      if (format == Format::json) {
        json arr = json::array();
        for (const auto& v : words) arr.push_back(v.str());
        json out{{"word", w.str()}, {"m", m}, {"count", words.size()}, {"words", arr}};
        if (formula >= 0) out["formula"] = formula.get_str();
        print_json(out);
      } else {
        for (const auto& v : words) std::cout << show(v) << '\n';
        std::cout << "count " << words.size();
        if (formula >= 0) std::cout << " formula " << formula.get_str();
        std::cout << '\n';
      }
    } else if (*trace_cmd) {
      const Word w(word_arg);
      const auto L = parse_locations(locations_arg);
      const auto trace = reconstruct(w, m, L);
      if (format == Format::json) {
        json out{{"word", w.str()},
                 {"m", m},
                 {"locations", io::to_json(L)},
                 {"initial_stack", trace.initial_stack},
                 {"steps", io::to_json(trace)},
                 {"success", trace.success()}};
        if (trace.output) out["output"] = trace.output->str();
        print_json(out);
      } else {
        std::cout << "i  inL  word" << std::string(3 * m + w.size(), ' ') << "stack\n";
        std::cout << "-  -    " << std::string(3 * m + w.size() + 4, ' ') << trace.initial_stack << '\n';
        std::string written;
        for (const auto& s : trace.steps) {
          written.push_back(static_cast<char>('0' + s.letter));
          std::cout << std::left << std::setw(3) << s.index << (s.in_locations ? "x    " : "     ") << std::setw(static_cast<int>(3 * m + w.size() + 4))
                    << written << s.stack << '\n';
        }
        std::cout << (trace.success() ? "success " + trace.output->str() : std::string("failure: stack not empty"))
                  << '\n';
      }
    } else if (*sample_cmd) {
      const auto report = sample_pmf(n, count, seed, workers);
      if (format == Format::json) {
        print_json(io::to_json(report));
      } else if (format == Format::csv) {
        std::cout << io::to_csv(report);
      } else {
        for (auto [c, k] : report.histogram) std::cout << "c=" << c << ' ' << k << '/' << count << '\n';
        if (report.tv_distance_to_exact) std::cout << "tv_distance_to_exact " << *report.tv_distance_to_exact << '\n';
      }
    } else if (*render_cmd) {
      RenderOptions options;
      options.flip_crossings = flip;
      const auto svg = render_svg(Word(word_arg), options);
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw InvalidInput("cannot open " + out_path);
      out << svg;
    } else if (*check_cmd) {
      bool ok = true;
      json arr = json::array();
      for (const auto& r : run_selfcheck(deep)) {
        ok = ok && r.passed;
        arr.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        if (format != Format::json) {
          std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << (r.detail.empty() ? "" : ": " + r.detail) << '\n';
        }
      }
      if (format == Format::json) print_json(arr);
      return ok ? 0 : 1;
    }
  } catch (const ResourceGuardExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitGuard;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return 0;
}
