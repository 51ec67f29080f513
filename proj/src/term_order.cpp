#include "strata/term_order.hpp"

#include <algorithm>
#include <functional>

#include <gmpxx.h>

#include <json.hpp>

#include "strata/errors.hpp"

namespace strata {
namespace {

std::size_t rank_of(const TermOrder::Matrix& rows, std::size_t cols) {
  std::vector<std::vector<mpq_class>> m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::strong_ordering sign_of(std::int64_t x) { return x <=> std::int64_t{0}; }

}  // namespace

TermOrder::TermOrder(OrderKind kind, Matrix rows)
    : kind_(kind), rows_(std::move(rows)) {
  num_vars_ = rows_.empty() ? 0 : rows_.front().size();
}

TermOrder TermOrder::lex(std::size_t n) {
  Matrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  TermOrder o(OrderKind::Lex, std::move(m));
  o.num_vars_ = n;
  return o;
}

TermOrder TermOrder::revlex(std::size_t n) {
  Matrix m;
  if (n > 0) m.emplace_back(n, 1);
  for (std::size_t i = n; i-- > 1;) {
    std::vector<std::int64_t> row(n, 0);
    row[i] = -1;
    m.push_back(std::move(row));
  }
  TermOrder o(OrderKind::RevLex, std::move(m));
  o.num_vars_ = n;
  return o;
}

TermOrder TermOrder::grlex(std::size_t n) {
  Matrix m;
  if (n > 0) m.emplace_back(n, 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::vector<std::int64_t> row(n, 0);
    row[i] = 1;
    m.push_back(std::move(row));
  }
  TermOrder o(OrderKind::GrLex, std::move(m));
  o.num_vars_ = n;
  return o;
}

TermOrder TermOrder::matrix(Matrix rows) {
  if (rows.empty()) throw InvalidArgument("matrix order needs at least one row");
  const std::size_t n = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != n) throw InvalidArgument("matrix order rows differ in length");
  }
  if (rank_of(rows, n) != n) {
    throw InvalidArgument("matrix order is not total: rows do not have full rank");
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = 0;
    while (rows[r][c] == 0) ++r;  // full rank: column is nonzero
    if (rows[r][c] < 0) {
      throw InvalidArgument("matrix order is not a term order: variable " +
                            std::to_string(c) + " is smaller than 1");
    }
  }
  TermOrder o(OrderKind::Matrix, std::move(rows));
  o.num_vars_ = n;
  return o;
}

std::strong_ordering TermOrder::compare(const Monomial& a,
                                        const Monomial& b) const {
  for (const auto& row : rows_) {
    std::int64_t w = 0;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      w += row[i] * (std::int64_t{a[i]} - b[i]);
    }
    if (w != 0) return sign_of(w);
  }
  return std::strong_ordering::equal;
}

std::strong_ordering TermOrder::compare(std::span<const std::int64_t> a,
                                        std::span<const std::int64_t> b) const {
  for (const auto& row : rows_) {
    std::int64_t w = 0;
    for (std::size_t i = 0; i < num_vars_; ++i) w += row[i] * (a[i] - b[i]);
    if (w != 0) return sign_of(w);
  }
  return std::strong_ordering::equal;
}

std::strong_ordering TermOrder::sign(std::span<const std::int64_t> v) const {
  for (const auto& row : rows_) {
    std::int64_t w = 0;
    for (std::size_t i = 0; i < num_vars_; ++i) w += row[i] * v[i];
    if (w != 0) return sign_of(w);
  }
  return std::strong_ordering::equal;
}

bool TermOrder::is_reliable() const {
  if (rows_.empty()) return true;
  return std::all_of(rows_[0].begin(), rows_[0].end(),
                     [](std::int64_t a) { return a > 0; });
}

bool TermOrder::is_degree_compatible() const {
  if (rows_.empty()) return true;
  const auto& r = rows_[0];
  return r[0] > 0 &&
         std::all_of(r.begin(), r.end(), [&](std::int64_t a) { return a == r[0]; });
}

std::string TermOrder::to_string() const {
  switch (kind_) {
    case OrderKind::Lex:
      return "lex";
    case OrderKind::RevLex:
      return "revlex";
    case OrderKind::GrLex:
      return "grlex";
    case OrderKind::Matrix:
      break;
  }
  return "matrix:" + nlohmann::json(rows_).dump();
}

TermOrder TermOrder::parse(const std::string& text, std::size_t num_vars) {
  if (text == "lex") return lex(num_vars);
  if (text == "revlex") return revlex(num_vars);
  if (text == "grlex") return grlex(num_vars);
  const std::string prefix = "matrix:";
  if (text.rfind(prefix, 0) != 0) {
    throw InvalidArgument("unknown term order '" + text + "'");
  }
  Matrix rows;
  try {
    rows = nlohmann::json::parse(text.substr(prefix.size())).get<Matrix>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("malformed matrix order: " + std::string(e.what()));
  }
  TermOrder o = matrix(std::move(rows));
  if (o.num_vars() != num_vars) {
    throw InvalidArgument("matrix order has " + std::to_string(o.num_vars()) +
                          " columns for " + std::to_string(num_vars) +
                          " variables");
  }
  return o;
}

TermOrder elimination_order(const TermOrder& order,
                            const std::vector<bool>& block) {
  const std::size_t n = order.num_vars();
  if (block.size() != n) throw InvalidArgument("block mask size mismatch");
  if (std::none_of(block.begin(), block.end(), [](bool b) { return b; })) {
    return order;
  }
  TermOrder::Matrix rows;
  for (bool in_block : {true, false}) {
    for (const auto& r : order.rows()) {
      std::vector<std::int64_t> row(n, 0);
      bool nonzero = false;
      for (std::size_t i = 0; i < n; ++i) {
        if (block[i] == in_block) {
          row[i] = r[i];
          nonzero = nonzero || r[i] != 0;
        }
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  return TermOrder::matrix(std::move(rows));
}

bool TailFilter::admits(const Monomial& m) const {
  for (const Monomial& g : excluded_ideal) {
    if (g.divides(m)) return false;
  }
  if (allowed) {
    return std::find(allowed->begin(), allowed->end(), m) != allowed->end();
  }
  return true;
}

namespace {

void sort_decreasing(const TermOrder& order, std::vector<Monomial>& ms) {
  std::sort(ms.begin(), ms.end(), [&](const Monomial& a, const Monomial& b) {
    return order.compare(a, b) > 0;
  });
}

}  // namespace

std::vector<Monomial> tail(const TermOrder& order, const Monomial& m,
                           const TailFilter& filter) {
  const std::size_t n = order.num_vars();
  if (m.num_vars() != n) throw InvalidArgument("monomial/order size mismatch");
  std::vector<Monomial> out;
  if (filter.allowed) {
    for (const Monomial& b : *filter.allowed) {
      if (order.less(b, m) && filter.admits(b)) out.push_back(b);
    }
    sort_decreasing(order, out);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  if (!order.is_reliable()) {
    throw NotReliable("term order " + order.to_string() +
                      " is not reliable: tails are infinite");
  }
  // Every b below m satisfies w.b <= w.m for the strictly positive first
  // row w, which bounds each exponent.
  const auto& w = order.rows().front();
  std::int64_t budget = 0;
  for (std::size_t i = 0; i < n; ++i) budget += w[i] * m[i];
  std::vector<Exponent> e(n, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i,
                                                           std::int64_t left) {
    if (i == n) {
      Monomial b(e);
      if (order.less(b, m) && filter.admits(b)) out.push_back(std::move(b));
      return;
    }
    for (Exponent k = 0; k * w[i] <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k * w[i]);
    }
    e[i] = 0;
  };
  rec(0, budget);
  sort_decreasing(order, out);
  return out;
}

std::vector<Monomial> htail(const TermOrder& order, const Monomial& m,
                            const TailFilter& filter) {
  if (m.num_vars() != order.num_vars()) {
    throw InvalidArgument("monomial/order size mismatch");
  }
  std::vector<Monomial> out;
  for (Monomial& b : monomials_of_degree(order.num_vars(), m.degree())) {
    if (order.less(b, m) && filter.admits(b)) out.push_back(std::move(b));
  }
  sort_decreasing(order, out);
  return out;
}

std::vector<Monomial> monomials_of_degree(std::size_t n, std::int64_t degree) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<Exponent> e(n, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i,
                                                           std::int64_t left) {
    if (i + 1 == n) {
      e[i] = static_cast<Exponent>(left);
      out.emplace_back(e);
      return;
    }
    for (std::int64_t k = left; k >= 0; --k) {
      e[i] = static_cast<Exponent>(k);
      rec(i + 1, left - k);
    }
  };
  rec(0, degree);
  return out;
}

}  // namespace strata
