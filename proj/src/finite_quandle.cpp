#include "quandlekit/finite_quandle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "quandlekit/errors.hpp"

namespace quandlekit {

Partition canonical_partition(Partition p) {
  for (auto& block : p) std::sort(block.begin(), block.end());
  std::erase_if(p, [](const ElementSet& b) { return b.empty(); });
  std::sort(p.begin(), p.end(), [](const ElementSet& x, const ElementSet& y) { return x.front() < y.front(); });
  return p;
}

std::vector<std::size_t> block_sizes(const Partition& p) {
  std::vector<std::size_t> sizes;
  for (const auto& b : p) sizes.push_back(b.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::string to_string(QuandleAxiom axiom) {
  switch (axiom) {
    case QuandleAxiom::Idempotency: return "idempotency";
    case QuandleAxiom::RightInvertibility: return "right-invertibility";
    case QuandleAxiom::SelfDistributivity: return "self-distributivity";
  }
  return "unknown";
}

std::string AxiomViolation::describe() const {
  std::ostringstream os;
  os << to_string(axiom) << ": ";
  switch (axiom) {
    case QuandleAxiom::Idempotency: os << a << "*" << a << " != " << a; break;
    case QuandleAxiom::RightInvertibility: os << a << "*" << b << " == " << c << "*" << b; break;
    case QuandleAxiom::SelfDistributivity:
      os << "(" << a << "*" << b << ")*" << c << " != (" << a << "*" << c << ")*(" << b << "*" << c << ")";
      break;
  }
  return os.str();
}

FiniteQuandle::FiniteQuandle(int size, std::vector<int> table, std::vector<std::string> labels)
    : size_(size), table_(std::move(table)), labels_(std::move(labels)) {
  if (size_ < 1) throw std::invalid_argument("quandle size must be positive");
  const auto n = static_cast<std::size_t>(size_);
  if (table_.size() != n * n) throw std::invalid_argument("quandle table must be size x size");
  if (!labels_.empty() && labels_.size() != n) throw std::invalid_argument("label count must equal size");
  for (int v : table_) {
    if (v < 0 || v >= size_) throw std::invalid_argument("quandle table entry out of range");
  }
  inv_table_.assign(n * n, -1);
  for (int b = 0; b < size_; ++b) {
    std::vector<int> preimage(n, -1);
    bool bijective = true;
    for (int a = 0; a < size_ && bijective; ++a) {
      int v = op(a, b);
      if (preimage[static_cast<std::size_t>(v)] != -1) bijective = false;
      preimage[static_cast<std::size_t>(v)] = a;
    }
    if (!bijective) continue;
    for (int c = 0; c < size_; ++c) inv_table_[index(c, b)] = preimage[static_cast<std::size_t>(c)];
  }
}

FiniteQuandle FiniteQuandle::from_rows(const std::vector<std::vector<int>>& rows, std::vector<std::string> labels) {
  std::vector<int> flat;
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw std::invalid_argument("quandle table must be square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return FiniteQuandle(static_cast<int>(rows.size()), std::move(flat), std::move(labels));
}

FiniteQuandle FiniteQuandle::trivial(int n) {
  std::vector<int> t(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a * n + b)] = a;
  }
  return FiniteQuandle(n, std::move(t));
}

std::vector<std::vector<int>> FiniteQuandle::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(size_));
  for (int a = 0; a < size_; ++a) {
    out[static_cast<std::size_t>(a)].assign(table_.begin() + static_cast<std::ptrdiff_t>(index(a, 0)),
                                            table_.begin() + static_cast<std::ptrdiff_t>(index(a, 0) + static_cast<std::size_t>(size_)));
  }
  return out;
}

std::string FiniteQuandle::label(int a) const {
  return labels_.empty() ? std::to_string(a) : labels_[static_cast<std::size_t>(a)];
}

FiniteQuandle FiniteQuandle::restrict_to(const ElementSet& subset) const {
  if (!is_subquandle(*this, subset)) throw NotASubquandle("subset is not closed under * and *^-1");
  std::map<int, int> position;
  for (std::size_t i = 0; i < subset.size(); ++i) position[subset[i]] = static_cast<int>(i);
  const int k = static_cast<int>(subset.size());
  std::vector<int> t;
  t.reserve(subset.size() * subset.size());
  std::vector<std::string> sub_labels;
  for (int a : subset) {
    for (int b : subset) t.push_back(position.at(op(a, b)));
    if (!labels_.empty()) sub_labels.push_back(labels_[static_cast<std::size_t>(a)]);
  }
  return FiniteQuandle(k, std::move(t), std::move(sub_labels));
}

std::optional<AxiomViolation> check_axioms(const FiniteQuandle& q) {
  const int n = q.size();
  for (int a = 0; a < n; ++a) {
    if (q.op(a, a) != a) return AxiomViolation{QuandleAxiom::Idempotency, a, a, a};
  }
  for (int b = 0; b < n; ++b) {
    std::vector<int> first(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a) {
      int& seen = first[static_cast<std::size_t>(q.op(a, b))];
      if (seen != -1) return AxiomViolation{QuandleAxiom::RightInvertibility, seen, b, a};
      seen = a;
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = q.op(a, b);
      for (int c = 0; c < n; ++c) {
        if (q.op(ab, c) != q.op(q.op(a, c), q.op(b, c))) {
          return AxiomViolation{QuandleAxiom::SelfDistributivity, a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

int op_pow(const FiniteQuandle& q, int a, std::int64_t n, int b) {
  for (; n > 0; --n) a = q.op(a, b);
  for (; n < 0; ++n) {
    a = q.inv_op(a, b);
    if (a < 0) throw std::invalid_argument("S_b is not a bijection");
  }
  return a;
}

std::int64_t type_of(const FiniteQuandle& q) {
  const int n = q.size();
  std::int64_t result = 1;
  for (int b = 0; b < n; ++b) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int a = 0; a < n; ++a) {
      if (seen[static_cast<std::size_t>(a)]) continue;
      std::int64_t len = 0;
      int x = a;
      while (!seen[static_cast<std::size_t>(x)]) {
        seen[static_cast<std::size_t>(x)] = true;
        x = q.op(x, b);
        ++len;
      }
      if (x != a) throw std::invalid_argument("S_b is not a bijection");
      result = std::lcm(result, len);
    }
  }
  return result;
}

ElementSet generated_subquandle(const FiniteQuandle& q, const ElementSet& generators) {
  std::vector<bool> in(static_cast<std::size_t>(q.size()), false);
  ElementSet members;
  auto add = [&](int x) {
    if (x >= 0 && !in[static_cast<std::size_t>(x)]) {
      in[static_cast<std::size_t>(x)] = true;
      members.push_back(x);
    }
  };
  for (int g : generators) add(g);
  // members[0..done) are closed against each other.
  for (std::size_t done = 0; done < members.size(); ++done) {
    const int x = members[done];
    for (std::size_t j = 0; j <= done; ++j) {
      const int y = members[j];
      add(q.op(x, y));
      add(q.op(y, x));
      add(q.inv_op(x, y));
      add(q.inv_op(y, x));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_subquandle(const FiniteQuandle& q, const ElementSet& subset) {
  std::vector<bool> in(static_cast<std::size_t>(q.size()), false);
  for (int x : subset) in[static_cast<std::size_t>(x)] = true;
  for (int x : subset) {
    for (int y : subset) {
      const int inv = q.inv_op(x, y);
      if (!in[static_cast<std::size_t>(q.op(x, y))] || inv < 0 || !in[static_cast<std::size_t>(inv)]) return false;
    }
  }
  return true;
}

Partition connected_components(const FiniteQuandle& q, const ElementSet& ambient) {
  if (!is_subquandle(q, ambient)) throw NotASubquandle("ambient set is not closed under * and *^-1");
  std::vector<int> block_of(static_cast<std::size_t>(q.size()), -1);
  Partition blocks;
  for (int start : ambient) {
    if (block_of[static_cast<std::size_t>(start)] != -1) continue;
    const int id = static_cast<int>(blocks.size());
    ElementSet block{start};
    block_of[static_cast<std::size_t>(start)] = id;
    for (std::size_t i = 0; i < block.size(); ++i) {
      const int x = block[i];
      for (int a : ambient) {
        for (int y : {q.op(x, a), q.inv_op(x, a)}) {
          if (block_of[static_cast<std::size_t>(y)] == -1) {
            block_of[static_cast<std::size_t>(y)] = id;
            block.push_back(y);
          }
        }
      }
    }
    blocks.push_back(std::move(block));
  }
  return canonical_partition(std::move(blocks));
}

namespace {
ElementSet all_elements(const FiniteQuandle& q) {
  ElementSet all(static_cast<std::size_t>(q.size()));
  std::iota(all.begin(), all.end(), 0);
  return all;
}
}  // namespace

Partition connected_components(const FiniteQuandle& q) { return connected_components(q, all_elements(q)); }

bool is_connected(const FiniteQuandle& q, const ElementSet& ambient) {
  return connected_components(q, ambient).size() <= 1;
}

bool is_connected(const FiniteQuandle& q) { return is_connected(q, all_elements(q)); }

bool is_isomorphism(const FiniteQuandle& q1, const FiniteQuandle& q2, const std::vector<int>& phi) {
  const int n = q1.size();
  if (q2.size() != n || static_cast<int>(phi.size()) != n) return false;
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int v : phi) {
    if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = true;
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (phi[static_cast<std::size_t>(q1.op(x, y))] != q2.op(phi[static_cast<std::size_t>(x)], phi[static_cast<std::size_t>(y)])) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// Isomorphism-invariant fingerprint of each element.
std::vector<std::vector<int>> element_signatures(const FiniteQuandle& q) {
  const int n = q.size();
  std::vector<int> component_size(static_cast<std::size_t>(n), 0);
  for (const auto& block : connected_components(q)) {
    for (int x : block) component_size[static_cast<std::size_t>(x)] = static_cast<int>(block.size());
  }
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    std::vector<int> cycles;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int x = 0; x < n; ++x) {
      if (seen[static_cast<std::size_t>(x)]) continue;
      int len = 0;
      for (int y = x; !seen[static_cast<std::size_t>(y)]; y = q.op(y, a)) {
        seen[static_cast<std::size_t>(y)] = true;
        ++len;
      }
      cycles.push_back(len);
    }
    std::sort(cycles.begin(), cycles.end());
    int stabilizers = 0;
    for (int b = 0; b < n; ++b) stabilizers += q.op(a, b) == a ? 1 : 0;
    auto& s = sig[static_cast<std::size_t>(a)];
    s.push_back(component_size[static_cast<std::size_t>(a)]);
    s.push_back(stabilizers);
    s.insert(s.end(), cycles.begin(), cycles.end());
  }
  return sig;
}

class IsoSearch {
 public:
  IsoSearch(const FiniteQuandle& q1, const FiniteQuandle& q2)
      : q1_(q1), q2_(q2), n_(q1.size()), sig1_(element_signatures(q1)), sig2_(element_signatures(q2)),
        phi_(static_cast<std::size_t>(n_), -1), used_(static_cast<std::size_t>(n_), false) {}

  bool invariants_match() const {
    auto a = sig1_, b = sig2_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  bool search() {
    int x = 0;
    while (x < n_ && phi_[static_cast<std::size_t>(x)] != -1) ++x;
    if (x == n_) return true;
    for (int y = 0; y < n_; ++y) {
      if (used_[static_cast<std::size_t>(y)] || sig1_[static_cast<std::size_t>(x)] != sig2_[static_cast<std::size_t>(y)]) continue;
      const std::size_t mark = trail_.size();
      if (assign(x, y) && search()) return true;
      undo(mark);
    }
    return false;
  }

  std::vector<int> result() const { return phi_; }

 private:
  // Assigns x -> y and propagates every forced image; false on conflict.
  bool assign(int x, int y) {
    std::vector<std::pair<int, int>> queue{{x, y}};
    if (!set(x, y)) return false;
    while (!queue.empty()) {
      auto [u, v] = queue.back();
      queue.pop_back();
      for (std::size_t i = 0; i < trail_.size(); ++i) {
        const int w = trail_[i];
        const int pw = phi_[static_cast<std::size_t>(w)];
        const std::pair<int, int> derived[] = {
            {q1_.op(u, w), q2_.op(v, pw)},         {q1_.op(w, u), q2_.op(pw, v)},
            {q1_.inv_op(u, w), q2_.inv_op(v, pw)}, {q1_.inv_op(w, u), q2_.inv_op(pw, v)},
        };
        for (auto [s, t] : derived) {
          if (s < 0 || t < 0) return false;
          const int cur = phi_[static_cast<std::size_t>(s)];
          if (cur == t) continue;
          if (cur != -1 || !set(s, t)) return false;
          queue.emplace_back(s, t);
        }
      }
    }
    return true;
  }

  bool set(int s, int t) {
    if (used_[static_cast<std::size_t>(t)] || sig1_[static_cast<std::size_t>(s)] != sig2_[static_cast<std::size_t>(t)]) return false;
    phi_[static_cast<std::size_t>(s)] = t;
    used_[static_cast<std::size_t>(t)] = true;
    trail_.push_back(s);
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const int s = trail_.back();
      trail_.pop_back();
      used_[static_cast<std::size_t>(phi_[static_cast<std::size_t>(s)])] = false;
      phi_[static_cast<std::size_t>(s)] = -1;
    }
  }

  const FiniteQuandle& q1_;
  const FiniteQuandle& q2_;
  int n_;
  std::vector<std::vector<int>> sig1_, sig2_;
  std::vector<int> phi_;
  std::vector<bool> used_;
  std::vector<int> trail_;
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteQuandle& q1, const FiniteQuandle& q2) {
  if (q1.size() != q2.size()) return std::nullopt;
  IsoSearch search(q1, q2);
  if (!search.invariants_match() || !search.search()) return std::nullopt;
  return search.result();
}

}  // namespace quandlekit
