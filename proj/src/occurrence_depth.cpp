#include "termdepth/occurrence_depth.hpp"

#include <algorithm>
#include <limits>

#include "termdepth/error.hpp"
#include "termdepth/measures.hpp"
#include "termdepth/traverse.hpp"

namespace termdepth {

DepthTable::DepthTable(const Hypersubstitution& sigma) : sig_(sigma.signature()) {
  rows_.reserve(sig_.size());
  for (std::size_t k = 0; k < sig_.size(); ++k) {
    const Term& img = sigma.image(k);
    const auto present = vars(img);
    std::vector<Entry> row(sig_.symbols()[k].arity);
    for (std::size_t a = 1; a <= row.size(); ++a) {
      const auto var = static_cast<VarIndex>(a);
      row[a - 1] = Entry{depth_wrt(img, var), present.contains(var)};
    }
    rows_.push_back(std::move(row));
  }
}

const DepthTable::Entry& DepthTable::at(std::string_view symbol, std::size_t position) const {
  auto k = sig_.index_of(symbol);
  if (!k) throw TermError("unknown symbol '" + std::string(symbol) + "'");
  return rows_[*k].at(position - 1);
}

OccurrencePath occurrence_path(const Term& t, std::size_t i) {
  const auto lengths = detail::fold_all<std::uint64_t>(
      t, [](const Term&) { return std::uint64_t{1}; },
      [](const Term&, const std::vector<std::uint64_t>& children) {
        std::uint64_t sum = 0;
        for (auto c : children) {
          sum = c > std::numeric_limits<std::uint64_t>::max() - sum
                    ? std::numeric_limits<std::uint64_t>::max()
                    : sum + c;
        }
        return sum;
      });
  if (i < 1 || i > lengths.at(t.id()))
    throw TermError("occurrence index " + std::to_string(i) + " out of range 1.." +
                    std::to_string(lengths.at(t.id())));

  OccurrencePath path;
  path.occurrence_index = i;
  std::uint64_t remaining = i;
  const Term* node = &t;
  std::vector<const Term*> down{node};
  while (node->is_application()) {
    auto args = node->args();
    for (std::size_t a = 0; a < args.size(); ++a) {
      const auto len = lengths.at(args[a].id());
      if (remaining <= len) {
        path.positions.push_back(a + 1);
        node = &args[a];
        break;
      }
      remaining -= len;
    }
    down.push_back(node);
  }
  for (auto it = down.rbegin(); it != down.rend(); ++it) path.chain.push_back(**it);
  std::reverse(path.positions.begin(), path.positions.end());
  return path;
}

std::size_t beta(const Term& t, std::size_t i) { return occurrence_path(t, i).beta(); }

BTrace b_trace(const Hypersubstitution& sigma, const Term& t, std::size_t i) {
  const auto path = occurrence_path(t, i);
  const DepthTable table(sigma);
  BTrace trace;
  trace.occurrence_index = i;
  trace.b_values.push_back(0);
  for (std::size_t k = 1; k <= path.beta(); ++k) {
    const auto& entry = table.at(path.chain[k].symbol(), path.positions[k - 1]);
    trace.b_values.push_back(entry.depth);
    trace.b_sum += entry.depth;
    trace.retained = trace.retained && entry.present;
  }
  trace.top_nonzero = trace.b_values.back() != 0;
  return trace;
}

namespace {

struct Scan {
  std::size_t top_filtered = 0;
  std::size_t retained = 0;
};

// One pass over the tree expansion of t carrying running sums from the root,
// so every leaf's trace total is known without materializing the trace.
Scan scan(const DepthTable& table, const Term& t) {
  struct Frame {
    const Term* node;
    std::size_t sum;
    std::size_t top;  // contribution of the step at the root
    bool retained;
  };
  Scan out;
  if (t.is_variable()) return out;  // beta = 0, the only step value is B_0 = 0
  std::vector<Frame> stack;
  {
    auto args = t.args();
    for (std::size_t a = 0; a < args.size(); ++a) {
      const auto& e = table.at(t.symbol(), a + 1);
      stack.push_back({&args[a], e.depth, e.depth, e.present});
    }
  }
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (f.node->is_variable()) {
      if (f.top != 0) out.top_filtered = std::max(out.top_filtered, f.sum);
      if (f.retained) out.retained = std::max(out.retained, f.sum);
      continue;
    }
    auto args = f.node->args();
    for (std::size_t a = 0; a < args.size(); ++a) {
      const auto& e = table.at(f.node->symbol(), a + 1);
      stack.push_back({&args[a], f.sum + e.depth, f.top, f.retained && e.present});
    }
  }
  return out;
}

}  // namespace

std::size_t b_of(const DepthTable& table, const Term& t) { return scan(table, t).top_filtered; }

std::size_t b_of(const Hypersubstitution& sigma, const Term& t) {
  return b_of(DepthTable(sigma), t);
}

std::size_t b_of_retained(const DepthTable& table, const Term& t) {
  return scan(table, t).retained;
}

std::size_t b_of_retained(const Hypersubstitution& sigma, const Term& t) {
  return b_of_retained(DepthTable(sigma), t);
}

std::size_t predict_depth_hyp(const Hypersubstitution& sigma, const Term& t) {
  return b_of(sigma, t);
}

}  // namespace termdepth
