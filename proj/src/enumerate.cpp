#include "gpa/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gpa/errors.hpp"

namespace gpa {

namespace {

// Adjacency bitmask over the n(n-1)/2 vertex pairs in (i<j) lex order.
int pair_bit(int n, int i, int j) {
  int bit = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (a == i && b == j) return bit;
      ++bit;
    }
  return -1;
}

bool mask_connected(int n, std::uint32_t mask) {
  if (n == 1) return true;
  std::vector<int> stack{0};
  std::uint32_t seen = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < n; ++u) {
      if (u == v || (seen >> u & 1)) continue;
      int i = std::min(u, v), j = std::max(u, v);
      if (mask >> pair_bit(n, i, j) & 1) {
        seen |= std::uint32_t{1} << u;
        stack.push_back(u);
      }
    }
  }
  return seen == (std::uint32_t{1} << n) - 1;
}

std::uint32_t permute_mask(int n, std::uint32_t mask,
                           const std::vector<int>& perm) {
  std::uint32_t out = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!(mask >> pair_bit(n, i, j) & 1)) continue;
      int a = perm[i], b = perm[j];
      if (a > b) std::swap(a, b);
      out |= std::uint32_t{1} << pair_bit(n, a, b);
    }
  return out;
}

std::uint32_t canonical_mask(int n, std::uint32_t mask) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = mask;
  do {
    best = std::min(best, permute_mask(n, mask, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

int popcount32(std::uint32_t x) {
  int c = 0;
  for (; x; x &= x - 1) ++c;
  return c;
}

}  // namespace

std::vector<GraphClass> connected_graph_classes(int max_n) {
  if (max_n < 1 || max_n > 7)
    throw InputError("connected_graph_classes supports 1..7 vertices");
  std::vector<GraphClass> out;
  for (int n = 1; n <= max_n; ++n) {
    const int pairs = n * (n - 1) / 2;
    std::set<std::uint32_t> canon;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
      if (!mask_connected(n, mask)) continue;
      canon.insert(canonical_mask(n, mask));
    }
    std::vector<std::uint32_t> sorted(canon.begin(), canon.end());
    std::sort(sorted.begin(), sorted.end(),
              [](std::uint32_t a, std::uint32_t b) {
                int ca = popcount32(a), cb = popcount32(b);
                if (ca != cb) return ca < cb;
                return a < b;
              });
    for (std::uint32_t mask : sorted) {
      GraphClass gc;
      gc.n = n;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (mask >> pair_bit(n, i, j) & 1) gc.edges.emplace_back(i, j);
      out.push_back(std::move(gc));
    }
  }
  return out;
}

VertexGroupInfo make_status_vertex(std::string name, Status s) {
  VertexGroupInfo v;
  v.name = std::move(name);
  v.finitely_presented = true;
  switch (s) {
    case Status::FiniteTwo:
      v.order = GroupOrder::finite(2);
      v.ends = VertexEnds::Zero;
      v.semistable = Tri::Yes;
      break;
    case Status::InfOneSS:
      v.order = GroupOrder::infinite();
      v.ends = VertexEnds::One;
      v.semistable = Tri::Yes;
      break;
    case Status::InfManySS:
      v.order = GroupOrder::infinite();
      v.ends = VertexEnds::Many;
      v.semistable = Tri::Yes;
      break;
    case Status::InfOneNonSS:
      v.order = GroupOrder::infinite();
      v.ends = VertexEnds::One;
      v.semistable = Tri::No;
      break;
  }
  return v;
}

ProductGraph palette_graph(const GraphClass& gc,
                           const std::vector<Status>& statuses) {
  std::vector<VertexGroupInfo> vs;
  vs.reserve(gc.n);
  for (int i = 0; i < gc.n; ++i)
    vs.push_back(make_status_vertex(std::string(1, char('a' + i)), statuses[i]));
  std::vector<std::pair<std::string, std::string>> es;
  es.reserve(gc.edges.size());
  for (auto [i, j] : gc.edges)
    es.emplace_back(std::string(1, char('a' + i)), std::string(1, char('a' + j)));
  return ProductGraph(std::move(vs), es);
}

std::vector<Status> nth_assignment(int n, std::uint64_t index) {
  std::vector<Status> out(n);
  for (int i = 0; i < n; ++i) {
    out[i] = static_cast<Status>(index % kStatusCount);
    index /= kStatusCount;
  }
  return out;
}

SweepResult run_sweep(int max_n, bool parallel, const SweepBody& body) {
  const auto classes = connected_graph_classes(max_n);

  // Flatten to a global instance index so both drivers agree on identity.
  std::vector<std::uint64_t> offsets(classes.size() + 1, 0);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::uint64_t count = 1;
    for (int i = 0; i < classes[c].n; ++i) count *= kStatusCount;
    offsets[c + 1] = offsets[c] + count;
  }
  const std::uint64_t total = offsets.back();

  SweepResult result;
  result.instances = total;
  result.first_failure_index = total;

  auto run_class = [&](std::size_t c, std::uint64_t& local_failures,
                       std::uint64_t& local_first_index,
                       std::string& local_first_msg) {
    const GraphClass& gc = classes[c];
    const std::uint64_t count = offsets[c + 1] - offsets[c];
    for (std::uint64_t a = 0; a < count; ++a) {
      auto statuses = nth_assignment(gc.n, a);
      ProductGraph g = palette_graph(gc, statuses);
      auto err = body(gc, statuses, g);
      if (err) {
        ++local_failures;
        const std::uint64_t idx = offsets[c] + a;
        if (idx < local_first_index) {
          local_first_index = idx;
          local_first_msg = *err;
        }
      }
    }
  };

  if (!parallel) {
    std::uint64_t failures = 0, first = total;
    std::string msg;
    for (std::size_t c = 0; c < classes.size(); ++c)
      run_class(c, failures, first, msg);
    result.failures = failures;
    result.first_failure_index = first;
    result.first_failure = std::move(msg);
    return result;
  }

  std::uint64_t failures = 0, first = total;
  std::string msg;
#pragma omp parallel
  {
    std::uint64_t my_failures = 0, my_first = total;
    std::string my_msg;
#pragma omp for schedule(dynamic, 1) nowait
    for (long long c = 0; c < static_cast<long long>(classes.size()); ++c)
      run_class(static_cast<std::size_t>(c), my_failures, my_first, my_msg);
#pragma omp critical
    {
      failures += my_failures;
      if (my_first < first) {
        first = my_first;
        msg = std::move(my_msg);
      }
    }
  }
  result.failures = failures;
  result.first_failure_index = first;
  result.first_failure = std::move(msg);
  return result;
}

}  // namespace gpa
