#include "dsim/todd_coxeter.hpp"

#include <string>
#include <utility>

#include "dsim/errors.hpp"

// The enumeration processes classes in order of definition. At each live
// class every relation u = v is traced: the path for u is followed from the
// class and completed with fresh classes where the table is blank, then the
// path for v is followed up to its last letter and its final transition is
// either deduced (set to u's endpoint) or found to disagree, in which case
// the two endpoints are recorded as coincident. Afterwards the class's row
// is filled. Coincidences are drained immediately with a union-find in
// which the smaller class index survives; folding the dead row into the
// surviving row may reveal further coincidences. Since classes merge only
// downwards, every class below the cursor keeps a fully defined row in
// which all relations have been traced, and the loop ends with a total
// table on the live classes in which every relation holds everywhere, i.e.
// with the multiplication table of the presented monoid.

namespace dsim {

namespace {

class Enumerator {
 public:
  Enumerator(Presentation const& pres, std::size_t cap)
      : n_letters_(pres.n_letters()), cap_(cap) {
    for (auto const& [u, v] : pres.relations) {
      rels_.emplace_back(to_indices(u, pres.alphabet),
                         to_indices(v, pres.alphabet));
    }
    new_class();
  }

  CongruenceTable run() {
    for (std::size_t cursor = 0; cursor < parent_.size(); ++cursor) {
      if (parent_[cursor] != static_cast<int>(cursor)) {
        continue;
      }
      int c = static_cast<int>(cursor);
      for (auto const& [u, v] : rels_) {
        push_relation(c, u, v);
        if (find(c) != c) {
          break;  // merged into an earlier class, already complete
        }
      }
      for (int a = 0; a < n_letters_ && find(c) == c; ++a) {
        if (get(c, a) == -1) {
          int fresh = new_class();
          set(c, a, fresh);
        }
      }
    }
    return compact();
  }

 private:
  int n_letters_;
  std::size_t cap_;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> rels_;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
  std::vector<std::pair<int, int>> pending_;

  static std::vector<int> to_indices(Word const& w, Alphabet a) {
    std::vector<int> out;
    out.reserve(w.size());
    for (Letter c : w) {
      out.push_back(letter_index(c, a));
    }
    return out;
  }

  int new_class() {
    if (parent_.size() >= cap_) {
      throw CapExceededError("class count exceeded cap of " +
                             std::to_string(cap_));
    }
    parent_.push_back(static_cast<int>(parent_.size()));
    table_.emplace_back(n_letters_, -1);
    return parent_.back();
  }

  int find(int c) {
    while (parent_[c] != c) {
      parent_[c] = parent_[parent_[c]];
      c = parent_[c];
    }
    return c;
  }

  int get(int c, int a) {
    int e = table_[c][a];
    if (e == -1) {
      return -1;
    }
    e = find(e);
    table_[c][a] = e;
    return e;
  }

  void set(int c, int a, int d) { table_[c][a] = d; }

  // Follows w from c, defining fresh classes at blank transitions.
  int trace_define(int c, std::vector<int> const& w, std::size_t len) {
    for (std::size_t k = 0; k < len; ++k) {
      int next = get(c, w[k]);
      if (next == -1) {
        next = new_class();
        set(c, w[k], next);
      }
      c = next;
    }
    return c;
  }

  void push_relation(int c, std::vector<int> const& u,
                     std::vector<int> const& v) {
    std::vector<int> const* shorter = &v;
    std::vector<int> const* longer = &u;
    if (shorter->size() > longer->size()) {
      std::swap(shorter, longer);
    }
    if (longer->empty()) {
      return;
    }
    int target = trace_define(c, *longer, longer->size());
    if (shorter->empty()) {
      coincide(target, find(c));
      return;
    }
    int p = trace_define(find(c), *shorter, shorter->size() - 1);
    int a = shorter->back();
    int end = get(p, a);
    target = find(target);
    if (end == -1) {
      set(p, a, target);
    } else if (end != target) {
      coincide(end, target);
    }
  }

  void coincide(int a, int b) {
    pending_.emplace_back(a, b);
    while (!pending_.empty()) {
      auto [p, q] = pending_.back();
      pending_.pop_back();
      p = find(p);
      q = find(q);
      if (p == q) {
        continue;
      }
      if (p > q) {
        std::swap(p, q);
      }
      parent_[q] = p;
      for (int a2 = 0; a2 < n_letters_; ++a2) {
        int e = table_[q][a2];
        if (e == -1) {
          continue;
        }
        if (table_[p][a2] == -1) {
          table_[p][a2] = e;
        } else {
          pending_.emplace_back(table_[p][a2], e);
        }
      }
    }
  }

  CongruenceTable compact() {
    std::vector<int> renumber(parent_.size(), -1);
    CongruenceTable out;
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (parent_[c] == static_cast<int>(c)) {
        renumber[c] = static_cast<int>(out.n_classes++);
      }
    }
    out.table.reserve(out.n_classes);
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (renumber[c] == -1) {
        continue;
      }
      std::vector<int> row(n_letters_);
      for (int a = 0; a < n_letters_; ++a) {
        row[a] = renumber[get(static_cast<int>(c), a)];
      }
      out.table.push_back(std::move(row));
    }
    return out;
  }
};

}  // namespace

CongruenceTable todd_coxeter(Presentation const& pres, std::size_t cap) {
  Enumerator e(pres, cap);
  return e.run();
}

}  // namespace dsim
