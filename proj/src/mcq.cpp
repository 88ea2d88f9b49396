#include "quandlekit/mcq.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "quandlekit/errors.hpp"

namespace quandlekit {

MCQ::MCQ(std::vector<FiniteGroup> groups, std::vector<int> op) : groups_(std::move(groups)), op_(std::move(op)) {
  if (groups_.empty()) throw std::invalid_argument("an MCQ needs at least one group");
  for (std::size_t l = 0; l < groups_.size(); ++l) {
    offsets_.push_back(carrier_size_);
    for (int i = 0; i < groups_[l].size(); ++i) group_of_.push_back(static_cast<int>(l));
    carrier_size_ += groups_[l].size();
  }
  const auto n = static_cast<std::size_t>(carrier_size_);
  if (op_.size() != n * n) throw std::invalid_argument("MCQ op table must be carrier x carrier");
  for (int v : op_) {
    if (v < 0 || v >= carrier_size_) throw std::invalid_argument("MCQ op entry out of range");
  }
  inv_op_.assign(n * n, -1);
  for (int y = 0; y < carrier_size_; ++y) {
    std::vector<int> pre(n, -1);
    bool bijective = true;
    for (int x = 0; x < carrier_size_ && bijective; ++x) {
      int& slot = pre[static_cast<std::size_t>(this->op(x, y))];
      if (slot != -1) bijective = false;
      slot = x;
    }
    if (!bijective) continue;
    for (int z = 0; z < carrier_size_; ++z) inv_op_[static_cast<std::size_t>(z) * n + static_cast<std::size_t>(y)] = pre[static_cast<std::size_t>(z)];
  }
}

int MCQ::mul(int x, int y) const {
  const int l = group_of(x);
  if (group_of(y) != l) return -1;
  return offset(l) + groups_[static_cast<std::size_t>(l)].mul(local(x), local(y));
}

int MCQ::inv(int x) const {
  const int l = group_of(x);
  return offset(l) + groups_[static_cast<std::size_t>(l)].inv(local(x));
}

ElementSet MCQ::expand(const ElementSet& lambdas) const {
  ElementSet out;
  for (int l : lambdas) {
    for (int i = 0; i < groups_[static_cast<std::size_t>(l)].size(); ++i) out.push_back(offset(l) + i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string McqViolation::describe() const {
  std::ostringstream os;
  os << "MCQ axiom " << axiom << " fails at (";
  for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? ", " : "") << witness[i];
  os << ")";
  return os.str();
}

std::optional<McqViolation> check_mcq_axioms(const MCQ& x) {
  const int n = x.carrier_size();
  for (int l = 0; l < x.lambda_count(); ++l) {
    const ElementSet g = x.expand({l});
    for (int a : g) {
      for (int b : g) {
        if (x.op(a, b) != x.mul(x.mul(x.inv(b), a), b)) return McqViolation{1, {a, b}};
      }
    }
  }
  for (int l = 0; l < x.lambda_count(); ++l) {
    const ElementSet g = x.expand({l});
    const int e = x.identity_of(l);
    for (int v = 0; v < n; ++v) {
      if (x.op(v, e) != v) return McqViolation{2, {v, e}};
      for (int a : g) {
        for (int b : g) {
          if (x.op(v, x.mul(a, b)) != x.op(x.op(v, a), b)) return McqViolation{2, {v, a, b}};
        }
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = x.op(a, b);
      for (int c = 0; c < n; ++c) {
        if (x.op(ab, c) != x.op(x.op(a, c), x.op(b, c))) return McqViolation{3, {a, b, c}};
      }
    }
  }
  for (int l = 0; l < x.lambda_count(); ++l) {
    const ElementSet g = x.expand({l});
    for (int a : g) {
      for (int b : g) {
        const int ab = x.mul(a, b);
        for (int v = 0; v < n; ++v) {
          const int av = x.op(a, v), bv = x.op(b, v);
          if (x.group_of(av) != x.group_of(bv) || x.op(ab, v) != x.mul(av, bv)) return McqViolation{4, {a, b, v}};
        }
      }
    }
  }
  return std::nullopt;
}

MCQ associated_mcq(const FiniteQuandle& q) {
  const int m = static_cast<int>(type_of(q));
  const int size = q.size();
  const FiniteGroup zm = cyclic_group(m);
  std::vector<FiniteGroup> groups(static_cast<std::size_t>(size), zm);
  const int n = size * m;
  // powers[h][x * size + y] = x *^h y
  std::vector<std::vector<int>> powers(static_cast<std::size_t>(m));
  for (int h = 0; h < m; ++h) {
    auto& p = powers[static_cast<std::size_t>(h)];
    p.resize(static_cast<std::size_t>(size) * static_cast<std::size_t>(size));
    for (int xq = 0; xq < size; ++xq) {
      for (int yq = 0; yq < size; ++yq) p[static_cast<std::size_t>(xq * size + yq)] = op_pow(q, xq, h, yq);
    }
  }
  std::vector<int> op(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int xq = 0; xq < size; ++xq) {
    for (int g = 0; g < m; ++g) {
      for (int yq = 0; yq < size; ++yq) {
        for (int h = 0; h < m; ++h) {
          const int target = powers[static_cast<std::size_t>(h)][static_cast<std::size_t>(xq * size + yq)];
          const int conj = zm.mul(zm.mul(zm.inv(h), g), h);
          op[static_cast<std::size_t>(xq * m + g) * static_cast<std::size_t>(n) + static_cast<std::size_t>(yq * m + h)] =
              target * m + conj;
        }
      }
    }
  }
  return MCQ(std::move(groups), std::move(op));
}

Partition lambda_orbits(const MCQ& x, const ElementSet& lambdas) {
  std::vector<bool> allowed(static_cast<std::size_t>(x.lambda_count()), false);
  for (int l : lambdas) allowed[static_cast<std::size_t>(l)] = true;
  const ElementSet movers = x.expand(lambdas);
  std::vector<int> block_of(static_cast<std::size_t>(x.lambda_count()), -1);
  Partition blocks;
  for (int start : lambdas) {
    if (block_of[static_cast<std::size_t>(start)] != -1) continue;
    const int id = static_cast<int>(blocks.size());
    ElementSet block{start};
    block_of[static_cast<std::size_t>(start)] = id;
    for (std::size_t i = 0; i < block.size(); ++i) {
      const int e = x.identity_of(block[i]);
      for (int a : movers) {
        for (int moved : {x.op(e, a), x.inv_op(e, a)}) {
          if (moved < 0) throw NotASubquandle("S_a is not a bijection on the MCQ carrier");
          const int l = x.group_of(moved);
          if (!allowed[static_cast<std::size_t>(l)]) throw NotASubquandle("lambda block is not closed under the action");
          if (block_of[static_cast<std::size_t>(l)] == -1) {
            block_of[static_cast<std::size_t>(l)] = id;
            block.push_back(l);
          }
        }
      }
    }
    blocks.push_back(std::move(block));
  }
  return canonical_partition(std::move(blocks));
}

Partition lambda_orbits(const MCQ& x) {
  ElementSet all(static_cast<std::size_t>(x.lambda_count()));
  std::iota(all.begin(), all.end(), 0);
  return lambda_orbits(x, all);
}

namespace {

bool star_closed(const MCQ& x, const ElementSet& y, const std::vector<bool>& in) {
  for (int a : y) {
    for (int b : y) {
      if (!in[static_cast<std::size_t>(x.op(a, b))]) return false;
    }
  }
  return true;
}

// Y is an MCQ in its own right: its pieces Y cap G_lambda are groups under
// the inherited product and the restricted structure passes every axiom.
bool restriction_is_mcq(const MCQ& x, const ElementSet& y, const std::vector<bool>& in) {
  if (!star_closed(x, y, in)) return false;
  std::vector<ElementSet> pieces(static_cast<std::size_t>(x.lambda_count()));
  for (int v : y) pieces[static_cast<std::size_t>(x.group_of(v))].push_back(v);
  std::vector<int> position(static_cast<std::size_t>(x.carrier_size()), -1);
  std::vector<FiniteGroup> groups;
  int next = 0;
  for (const auto& piece : pieces) {
    if (piece.empty()) continue;
    for (std::size_t i = 0; i < piece.size(); ++i) position[static_cast<std::size_t>(piece[i])] = next + static_cast<int>(i);
    const auto k = static_cast<int>(piece.size());
    std::vector<int> mult;
    for (int a : piece) {
      for (int b : piece) {
        const int ab = x.mul(a, b);
        if (!in[static_cast<std::size_t>(ab)]) return false;
        mult.push_back(position[static_cast<std::size_t>(ab)] - next);
      }
    }
    int identity = -1;
    for (int e = 0; e < k && identity < 0; ++e) {
      bool ok = true;
      for (int a = 0; a < k && ok; ++a) ok = mult[static_cast<std::size_t>(e * k + a)] == a && mult[static_cast<std::size_t>(a * k + e)] == a;
      if (ok) identity = e;
    }
    if (identity < 0) return false;
    try {
      groups.emplace_back(k, std::move(mult), identity);
    } catch (const AxiomViolationError&) {
      return false;
    }
    next += k;
  }
  std::vector<int> op;
  op.reserve(y.size() * y.size());
  // Carrier order of the restriction follows group order, then local order.
  ElementSet ordered;
  for (const auto& piece : pieces) ordered.insert(ordered.end(), piece.begin(), piece.end());
  for (int a : ordered) {
    for (int b : ordered) op.push_back(position[static_cast<std::size_t>(x.op(a, b))]);
  }
  return !check_mcq_axioms(MCQ(std::move(groups), std::move(op))).has_value();
}

}  // namespace

SubMcqReport is_sub_mcq(const MCQ& x, const ElementSet& y) {
  SubMcqReport report;
  if (y.empty()) return report;
  std::vector<bool> in(static_cast<std::size_t>(x.carrier_size()), false);
  for (int v : y) in[static_cast<std::size_t>(v)] = true;
  const bool closed = star_closed(x, y, in);

  // One-step subgroup test on each nonempty intersection: a b^{-1} stays inside.
  bool subgroups = closed;
  for (int l = 0; l < x.lambda_count() && subgroups; ++l) {
    for (int a : x.expand({l})) {
      if (!in[static_cast<std::size_t>(a)]) continue;
      for (int b : x.expand({l})) {
        if (in[static_cast<std::size_t>(b)] && !in[static_cast<std::size_t>(x.mul(a, x.inv(b)))]) subgroups = false;
      }
    }
  }
  report.closed_with_subgroups = subgroups;

  // Union of subgroups over the occupied lambdas: identity, products, inverses.
  bool union_of_subgroups = closed;
  std::vector<ElementSet> pieces(static_cast<std::size_t>(x.lambda_count()));
  for (int v : y) pieces[static_cast<std::size_t>(x.group_of(v))].push_back(v);
  for (int l = 0; l < x.lambda_count() && union_of_subgroups; ++l) {
    const auto& h = pieces[static_cast<std::size_t>(l)];
    if (h.empty()) continue;
    if (!in[static_cast<std::size_t>(x.identity_of(l))]) union_of_subgroups = false;
    for (int a : h) {
      if (!in[static_cast<std::size_t>(x.inv(a))]) union_of_subgroups = false;
      for (int b : h) {
        if (!in[static_cast<std::size_t>(x.mul(a, b))]) union_of_subgroups = false;
      }
    }
  }
  report.closed_union_of_subgroups = union_of_subgroups;
  report.restriction_is_mcq = restriction_is_mcq(x, y, in);
  return report;
}

ElementSet generated_sub_mcq(const MCQ& x, const ElementSet& generators) {
  std::vector<bool> in(static_cast<std::size_t>(x.carrier_size()), false);
  ElementSet members;
  auto add = [&](int v) {
    if (v >= 0 && !in[static_cast<std::size_t>(v)]) {
      in[static_cast<std::size_t>(v)] = true;
      members.push_back(v);
    }
  };
  for (int g : generators) add(g);
  for (std::size_t done = 0; done < members.size(); ++done) {
    const int u = members[done];
    add(x.inv(u));
    for (std::size_t j = 0; j <= done; ++j) {
      const int v = members[j];
      add(x.op(u, v));
      add(x.op(v, u));
      add(x.inv_op(u, v));
      add(x.inv_op(v, u));
      add(x.mul(u, v));
      add(x.mul(v, u));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

McqDecomposition maximal_mcq_decomposition(const MCQ& x, int max_iterations) {
  ElementSet all(static_cast<std::size_t>(x.lambda_count()));
  std::iota(all.begin(), all.end(), 0);
  McqDecomposition out;
  out.lambda_levels = iterate_to_fixed_point([&x](const ElementSet& block) { return lambda_orbits(x, block); }, all,
                                             max_iterations);
  for (const auto& block : out.lambda_levels.final()) out.carrier_partition.push_back(x.expand(block));
  out.carrier_partition = canonical_partition(std::move(out.carrier_partition));
  return out;
}

}  // namespace quandlekit
