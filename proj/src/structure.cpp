#include "dsim/structure.hpp"

#include <algorithm>
#include <set>

namespace dsim {

namespace {

// Strongly connected components of the functional graph i -> table[i][g],
// by Tarjan's algorithm with an explicit stack. Component ids are assigned
// in a fixed order, so equal tables give equal id vectors.
std::vector<int> scc_ids(std::vector<std::vector<int>> const& table) {
  int n = static_cast<int>(table.size());
  std::vector<int> ids(n, -1);
  std::vector<int> low(n, 0);
  std::vector<int> num(n, -1);
  std::vector<int> stack;
  std::vector<char> on_stack(n, 0);
  int next_num = 0;
  int next_id = 0;

  struct Frame {
    int v;
    std::size_t edge;
  };
  std::vector<Frame> call;

  for (int root = 0; root < n; ++root) {
    if (num[root] != -1) {
      continue;
    }
    call.push_back({root, 0});
    num[root] = low[root] = next_num++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      int v = call.back().v;
      if (call.back().edge < table[v].size()) {
        int w = table[v][call.back().edge++];
        if (num[w] == -1) {
          num[w] = low[w] = next_num++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], num[w]);
        }
      } else {
        if (low[v] == num[v]) {
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            ids[w] = next_id;
          } while (w != v);
          ++next_id;
        }
        int finished = v;
        call.pop_back();
        if (!call.empty()) {
          low[call.back().v] = std::min(low[call.back().v], low[finished]);
        }
      }
    }
  }
  return ids;
}

}  // namespace

std::vector<int> idempotents(EnumeratedMonoid const& m) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(m.size()); ++i) {
    if (m.product(i, i) == i) {
      out.push_back(i);
    }
  }
  return out;
}

std::vector<int> units(EnumeratedMonoid const& m) {
  // Reverse reachability of the identity along right Cayley edges: i is a
  // unit iff some b solves i b = 1, and in a finite monoid such a b is a
  // two-sided inverse.
  std::size_t n = m.size();
  std::vector<std::vector<int>> rev_adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (int target : m.right_cayley[i]) {
      rev_adj[target].push_back(static_cast<int>(i));
    }
  }
  std::vector<char> seen(n, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (int prev : rev_adj[queue[k]]) {
      if (!seen[prev]) {
        seen[prev] = 1;
        queue.push_back(prev);
      }
    }
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) {
      out.push_back(static_cast<int>(i));
    }
  }
  return out;
}

bool is_inverse_monoid(EnumeratedMonoid const& m) {
  std::vector<int> es = idempotents(m);
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (m.product(es[i], es[j]) != m.product(es[j], es[i])) {
        return false;
      }
    }
  }
  int n = static_cast<int>(m.size());
  for (int a = 0; a < n; ++a) {
    int flip = m.index_of(m.elements[a].inverse());
    if (flip != -1 && m.product(m.product(a, flip), a) == a) {
      continue;
    }
    bool regular = false;
    for (int b = 0; b < n && !regular; ++b) {
      regular = m.product(m.product(a, b), a) == a;
    }
    if (!regular) {
      return false;
    }
  }
  return true;
}

std::vector<int> green_r_ids(EnumeratedMonoid const& m) {
  return scc_ids(m.right_cayley);
}

std::vector<int> green_l_ids(EnumeratedMonoid const& m) {
  return scc_ids(m.left_cayley);
}

std::vector<int> green_h_class(EnumeratedMonoid const& m, int a) {
  std::vector<int> r = green_r_ids(m);
  std::vector<int> l = green_l_ids(m);
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(m.size()); ++i) {
    if (r[i] == r[a] && l[i] == l[a]) {
      out.push_back(i);
    }
  }
  return out;
}

bool is_completely_regular(EnumeratedMonoid const& m, int a) {
  for (int h : green_h_class(m, a)) {
    if (m.product(h, h) == h) {
      return true;
    }
  }
  return false;
}

std::vector<int> factorizable_part(EnumeratedMonoid const& m) {
  std::set<int> out;
  for (int e : idempotents(m)) {
    for (int g : units(m)) {
      out.insert(m.product(e, g));
    }
  }
  return std::vector<int>(out.begin(), out.end());
}

}  // namespace dsim
