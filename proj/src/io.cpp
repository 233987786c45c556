#include "twobridge/io.hpp"

#include <iomanip>
#include <sstream>

namespace twobridge::io {

json to_json(const KnotClass& k) {
  return json{{"canonical", k.canonical.str()}, {"ell0", k.ell0},
              {"ell1", k.ell1},                 {"r", k.multiplicity},
              {"crossing_number", k.crossing_number}, {"is_unknot", k.is_unknot}};
}

json to_json(const LocationSet& locations) { return json(locations.locations()); }

json to_json(const ReconstructionStep& step) {
  return json{{"i", step.index}, {"in_L", step.in_locations}, {"letter", step.letter}, {"stack", step.stack}};
}

json to_json(const ReconstructionTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) steps.push_back(to_json(s));
  return steps;
}

json to_json(const ExternalDecomposition& d) {
  return json{{"prefix", d.prefix.str()},
              {"i", d.prefix_count},
              {"suffix", d.suffix.str()},
              {"j", d.suffix_count},
              {"internal_count", d.internal_count}};
}

namespace {

ExactProb from_count(std::uint64_t k, std::size_t n) { return ExactProb{Count(std::to_string(k)), n}; }

std::string fraction(std::uint64_t k, std::uint64_t total) {
  return std::to_string(k) + "/" + std::to_string(total);
}

void csv_row(std::ostringstream& out, std::size_t c, const std::string& num, const std::string& den, double value) {
  out << c << ',' << num << ',' << den << ',' << std::setprecision(17) << value << '\n';
}

std::string pow2(std::size_t n) {
  Count d = 1;
  d <<= n;
  return d.get_str();
}

}  // namespace

json to_json(const CrossingPmf& pmf) {
  json masses = json::object();
  for (const auto& [c, mass] : pmf.masses) masses[std::to_string(c)] = mass.to_string();
  return json{{"n", pmf.n}, {"unknot", pmf.unknot.to_string()}, {"pmf", masses}};
}

json to_json(const oracle::ExactDist& dist) {
  json masses = json::object();
  std::string unknot = "0/" + pow2(dist.n);
  for (auto [c, k] : dist.crossing_histogram) {
    const auto text = from_count(k, dist.n).to_string();
    if (c == 0) {
      unknot = text;
    } else {
      masses[std::to_string(c)] = text;
    }
  }
  json knots = json::object();
  for (const auto& [canonical, k] : dist.counts) {
    auto entry = to_json(dist.classes.at(canonical));
    entry["probability"] = from_count(k, dist.n).to_string();
    knots[canonical.empty() ? std::string("unknot") : canonical.str()] = entry;
  }
  return json{{"n", dist.n}, {"mode", to_string(dist.mode)}, {"unknot", unknot}, {"pmf", masses}, {"knots", knots}};
}

json to_json(const SampleReport& report) {
  json masses = json::object();
  std::string unknot = fraction(0, report.sample_count);
  for (auto [c, k] : report.histogram) {
    if (c == 0) {
      unknot = fraction(k, report.sample_count);
    } else {
      masses[std::to_string(c)] = fraction(k, report.sample_count);
    }
  }
  json out{{"n", report.n},           {"seed", report.seed},  {"count", report.sample_count},
           {"workers", report.workers}, {"unknot", unknot}, {"pmf", masses}};
  if (report.tv_distance_to_exact) out["tv_distance_to_exact"] = *report.tv_distance_to_exact;
  return out;
}

std::string to_csv(const CrossingPmf& pmf) {
  std::ostringstream out;
  out << "c,numerator,denominator,float\n";
  const auto den = pow2(pmf.n);
  csv_row(out, 0, pmf.unknot.numerator.get_str(), den, pmf.unknot.to_double());
  for (const auto& [c, mass] : pmf.masses) csv_row(out, c, mass.numerator.get_str(), den, mass.to_double());
  return out.str();
}

std::string to_csv(const oracle::ExactDist& dist) {
  std::ostringstream out;
  out << "c,numerator,denominator,float\n";
  const auto den = pow2(dist.n);
  for (auto [c, k] : dist.crossing_histogram) {
    csv_row(out, c, std::to_string(k), den, from_count(k, dist.n).to_double());
  }
  return out.str();
}

std::string to_csv(const SampleReport& report) {
  std::ostringstream out;
  out << "c,numerator,denominator,float\n";
  for (auto [c, k] : report.histogram) {
    csv_row(out, c, std::to_string(k), std::to_string(report.sample_count), report.empirical.at(c));
  }
  return out.str();
}

}  // namespace twobridge::io
