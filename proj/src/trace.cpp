#include <algorithm>
#include <string>

#include <fmt/format.h>

#include "iwn/louvain.hpp"

namespace iwn {

namespace {

char gain_marker(double gain) {
  if (gain > 0.0) return '+';
  if (gain < 0.0) return '-';
  return '0';
}

std::string community_list(const IWNetwork& net) {
  std::string out;
  for (std::size_t i = 0; i < net.size(); ++i) {
    if (i > 0) out += " / ";
    out += net.label(i);
  }
  return out;
}

void append_pass(std::string& out, const Pass& pass, std::size_t number) {
  out += fmt::format("* Begin Pass number {}\n", number);
  for (std::size_t k = 0; k < pass.iterations.size(); ++k) {
    const auto& it = pass.iterations[k];
    for (const auto& visit : it.visits) {
      for (const auto& t : visit.tries) {
        out += fmt::format("\tTry {} -> {:<10} | gain={:+.3f} ({})\n", visit.vertex, t.target,
                           t.gain, gain_marker(t.gain));
      }
      if (visit.moved) {
        out += fmt::format("\tMove {} -> {}\n", visit.vertex, visit.destination);
      } else {
        out += fmt::format("\tKeep vertex {} at community {}\n", visit.vertex, visit.destination);
      }
    }
    out += fmt::format("Iteration {} Modularity={:.3f}\n", k + 1, it.modularity);
  }
  if (pass.changed) {
    out += "\nNew network: ---------------\n";
    out += format_matrix(pass.aggregated);
    out += fmt::format("* End Pass number {} Modularity={:.3f} Communities={}\n", number,
                       pass.modularity, community_list(pass.aggregated));
    out += "---------------------------\n";
  } else {
    out += fmt::format("* End Pass number {} -- no change\n", number);
  }
}

}  // namespace

std::string format_matrix(const IWNetwork& net) {
  const std::size_t n = net.size();
  std::size_t label_width = 0;
  for (const auto& l : net.labels()) label_width = std::max(label_width, l.size());
  std::vector<std::size_t> width(n);
  for (std::size_t j = 0; j < n; ++j) {
    width[j] = net.label(j).size();
    for (std::size_t i = 0; i < n; ++i) {
      width[j] = std::max(width[j], to_string(net.weight(i, j)).size());
    }
  }
  std::string out = fmt::format("{:<{}}", "", label_width);
  for (std::size_t j = 0; j < n; ++j) out += fmt::format("  {:<{}}", net.label(j), width[j]);
  out += '\n';
  for (std::size_t i = 0; i < n; ++i) {
    out += fmt::format("{:<{}}", net.label(i), label_width);
    for (std::size_t j = 0; j < n; ++j) {
      out += fmt::format("  {:<{}}", to_string(net.weight(i, j)), width[j]);
    }
    out += '\n';
  }
  return out;
}

std::string emit_trace(const LouvainRun& run) {
  std::string out = "Initial Interval-Weighted Network:\n";
  out += format_matrix(run.initial);
  out += fmt::format("\n* Initial Modularity={:.3f}\n", run.initial_modularity);

  for (std::size_t k = 0; k < run.passes.size(); ++k) {
    // A single super-vertex has nothing to move; such a pass leaves no lines.
    if (run.passes[k].network.size() > 1) append_pass(out, run.passes[k], k + 1);
  }

  out += fmt::format("\n* Final communities: {} (n={})\n", community_list(run.final_network),
                     run.final_network.size());
  out += fmt::format("* {}Before Normalized: {:.3f}\n",
                     run.method == Method::Hybrid ? "Hybrid - " : "", run.final_q);
  if (run.final_q_norm) {
    out += fmt::format("* Normalized modularity: {:.3f} (Qmax={:.6f})\n", *run.final_q_norm,
                       run.final_q_max);
  } else {
    out += fmt::format("* Normalized modularity: undefined (Qmax={:.6f})\n", run.final_q_max);
  }
  out += "---------------------------\n";
  out += "Final Interval-weighted network:\n\n";
  out += format_matrix(run.final_network);
  return out;
}

}  // namespace iwn
