// Minimal library walkthrough: encode two snippets, compute their FDTW
// distance, and list the matched fragments.

#include <iostream>

#include "codewarp/codewarp.hpp"

int main() {
  using namespace codewarp;

  const char* left = R"(
class Checkout
{
    static int Total(int[] prices)
    {
        int total = 0;
        for (int i = 0; i < prices.Length; i++)
        {
            total += prices[i];
        }
        return total;
    }
}
)";

  // the same routine after a student-style touch-up: renamed variables,
  // fresh comments, a different literal
  const char* right = R"(
class Basket
{
    static int GrandTotal(int[] items)
    {
        int sum = 7; // start somewhere else
        for (int k = 0; k < items.Length; k++)
        {
            sum += items[k]; /* accumulate */
        }
        return sum;
    }
}
)";

  Encoder encoder(default_table());
  auto a = encoder.encode(SourceUnit("left", left), 1);
  auto b = encoder.encode(SourceUnit("right", right), 1);

  std::cout << "sequence lengths: " << a.size() << " vs " << b.size() << '\n';
  std::cout << "FDTW distance: " << dtw_distance(a.values, b.values) << '\n';

  auto matrix = dtw_matrix(a.values, b.values);
  auto path = warp_path(matrix);
  for (const auto& m : detect_matches(path, a.values, b.values, {.min_run_length = 5})) {
    auto mapped = map_to_source(m, a.provenance, b.provenance);
    std::cout << "match: left lines " << mapped.q_lines.first << ".." << mapped.q_lines.last
              << "  right lines " << mapped.c_lines.first << ".." << mapped.c_lines.last
              << "  length " << m.length << "  mean cost " << m.mean_cost << '\n';
  }
  return 0;
}
