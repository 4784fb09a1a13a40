#include "fpg/abelian.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fpg {

namespace {

BigInt abs_value(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Position of the nonzero entry of least absolute value in D[t.., t..].
std::string format_factors(const std::vector<BigInt>& factors, std::size_t free_rank) {
  if (factors.empty() && free_rank == 0) return "1";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < factors.size();) {
    std::size_t j = i;
    while (j < factors.size() && factors[j] == factors[i]) ++j;
    out << (first ? "" : " x ") << 'C' << factors[i];
    if (j - i > 1) out << '^' << (j - i);
    first = false;
    i = j;
  }
  if (free_rank > 0) {
    out << (first ? "" : " x ") << 'Z';
    if (free_rank > 1) out << '^' << free_rank;
  }
  return out.str();
}

bool find_min_pivot(const IntMatrix& d, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  BigInt best;
  for (std::size_t r = t; r < d.rows(); ++r)
    for (std::size_t c = t; c < d.cols(); ++c) {
      if (d(r, c) == 0) continue;
      BigInt a = abs_value(d(r, c));
      if (!found || a < best) {
        best = std::move(a);
        pr = r;
        pc = c;
        found = true;
        if (best == 1) return true;
      }
    }
  return found;
}

}  // namespace

std::vector<BigInt> SmithForm::diagonal() const {
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm s{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
  IntMatrix& d = s.D;
  const std::size_t n = std::min(d.rows(), d.cols());

  auto swap_rows = [&](std::size_t x, std::size_t y) {
    d.swap_rows(x, y);
    s.U.swap_rows(x, y);
  };
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    d.swap_cols(x, y);
    s.V.swap_cols(x, y);
  };

  for (std::size_t t = 0; t < n; ++t) {
    std::size_t pr = 0, pc = 0;
    if (!find_min_pivot(d, t, pr, pc)) break;
    swap_rows(t, pr);
    swap_cols(t, pc);

    while (true) {
      bool clean = true;
      for (std::size_t r = t + 1; r < d.rows(); ++r) {
        if (d(r, t) == 0) continue;
        const BigInt q = d(r, t) / d(t, t);
        d.add_row_multiple(r, t, -q);
        s.U.add_row_multiple(r, t, -q);
        if (d(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < d.cols(); ++c) {
        if (d(t, c) == 0) continue;
        const BigInt q = d(t, c) / d(t, t);
        d.add_col_multiple(c, t, -q);
        s.V.add_col_multiple(c, t, -q);
        if (d(t, c) != 0) clean = false;
      }
      if (!clean) {
        // Remainders are smaller than the pivot; move the least one in.
        std::size_t best_r = t, best_c = t;
        BigInt best = abs_value(d(t, t));
        for (std::size_t r = t + 1; r < d.rows(); ++r)
          if (d(r, t) != 0 && abs_value(d(r, t)) < best) best = abs_value(d(r, t)), best_r = r, best_c = t;
        for (std::size_t c = t + 1; c < d.cols(); ++c)
          if (d(t, c) != 0 && abs_value(d(t, c)) < best) best = abs_value(d(t, c)), best_r = t, best_c = c;
        swap_rows(t, best_r);
        swap_cols(t, best_c);
        continue;
      }
      // Pivot must divide everything left in the trailing block.
      bool divides = true;
      for (std::size_t r = t + 1; r < d.rows() && divides; ++r)
        for (std::size_t c = t + 1; c < d.cols(); ++c) {
          if (d(r, c) % d(t, t) != 0) {
            d.add_row_multiple(t, r, 1);
            s.U.add_row_multiple(t, r, 1);
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.U.negate_row(t);
    }
  }
  return s;
}

AbelianInvariants::AbelianInvariants(std::vector<BigInt> torsion, std::size_t free_rank)
    : torsion_(std::move(torsion)), free_rank_(free_rank) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2) throw std::invalid_argument("torsion factor must be >= 2");
    if (i > 0 && torsion_[i] % torsion_[i - 1] != 0) {
      throw std::invalid_argument("torsion factors must form a divisibility chain");
    }
  }
}

AbelianInvariants AbelianInvariants::from_cyclic_factors(const std::vector<BigInt>& orders,
                                                         std::size_t extra_free_rank) {
  IntMatrix diag(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] < 0) throw std::invalid_argument("negative cyclic order");
    diag(i, i) = orders[i];
  }
  std::vector<BigInt> torsion;
  std::size_t free_rank = extra_free_rank;
  for (const BigInt& d : smith_normal_form(diag).diagonal()) {
    if (d == 0) {
      ++free_rank;
    } else if (d > 1) {
      torsion.push_back(d);
    }
  }
  return AbelianInvariants(std::move(torsion), free_rank);
}

AbelianInvariants AbelianInvariants::parse(const std::string& text) {
  std::vector<BigInt> orders;
  std::size_t free_rank = 0;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&]() -> BigInt {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("expected a number in '" + text + "'");
    return BigInt(text.substr(start, pos - start));
  };
  skip();
  if (text.substr(pos) == "1" || text.substr(pos) == "") return AbelianInvariants();
  while (true) {
    skip();
    if (pos >= text.size()) throw std::invalid_argument("unexpected end of '" + text + "'");
    const char kind = text[pos++];
    BigInt order;
    if (kind == 'C') {
      order = number();
    } else if (kind != 'Z') {
      throw std::invalid_argument("expected 'C<n>' or 'Z' in '" + text + "'");
    }
    std::size_t reps = 1;
    skip();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip();
      reps = static_cast<std::size_t>(number());
    }
    for (std::size_t i = 0; i < reps; ++i) {
      if (kind == 'Z') {
        ++free_rank;
      } else {
        orders.push_back(order);
      }
    }
    skip();
    if (pos >= text.size()) break;
    if (text[pos] != 'x') throw std::invalid_argument("expected 'x' between factors in '" + text + "'");
    ++pos;
  }
  for (const auto& o : orders)
    if (o == 0) throw std::invalid_argument("C0 is not a valid factor; write Z");
  return from_cyclic_factors(orders, free_rank);
}

BigInt AbelianInvariants::order() const {
  if (free_rank_ > 0) return 0;
  BigInt n = 1;
  for (const auto& d : torsion_) n *= d;
  return n;
}

std::string AbelianInvariants::to_string() const {
  // Split every invariant factor into prime powers; a cofactor with no prime
  // factor below the trial bound is kept whole (still a correct cyclic factor).
  std::vector<BigInt> parts;
  for (BigInt d : torsion_) {
    for (BigInt p = 2; p < 1'000'000 && p * p <= d; ++p) {
      if (d % p != 0) continue;
      BigInt q = 1;
      while (d % p == 0) {
        d /= p;
        q *= p;
      }
      parts.push_back(q);
    }
    if (d > 1) parts.push_back(d);
  }
  std::sort(parts.begin(), parts.end());
  return format_factors(parts, free_rank_);
}

std::string AbelianInvariants::invariant_factor_string() const { return format_factors(torsion_, free_rank_); }

IntMatrix exponent_sum_matrix(const Presentation& p) {
  const std::size_t k = p.generator_count();
  IntMatrix m(p.relators().size(), k);
  for (std::size_t r = 0; r < p.relators().size(); ++r) {
    const auto sums = exponent_sums(p.relators()[r], k);
    for (std::size_t c = 0; c < k; ++c) m(r, c) = sums[c];
  }
  return m;
}

AbelianInvariants abelianization(const Presentation& p) {
  const IntMatrix m = exponent_sum_matrix(p);
  std::vector<BigInt> torsion;
  std::size_t nonzero = 0;
  for (const BigInt& d : smith_normal_form(m).diagonal()) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) torsion.push_back(d);
  }
  return AbelianInvariants(std::move(torsion), p.generator_count() - nonzero);
}

const char* to_string(QuotientType t) noexcept { return t == QuotientType::C4 ? "C4" : "V4"; }

std::size_t count_order4_quotients(const AbelianInvariants& g) {
  // |Hom(G, C2)| and |Hom(G, C4)|; each surjection onto Q is counted |Aut Q| times.
  BigInt hom2 = 1, hom4 = 1;
  for (const auto& d : g.torsion()) {
    if (d % 2 == 0) hom2 *= 2;
    hom4 *= d % 4 == 0 ? 4 : (d % 2 == 0 ? 2 : 1);
  }
  for (std::size_t i = 0; i < g.free_rank(); ++i) {
    hom2 *= 2;
    hom4 *= 4;
  }
  const BigInt onto_c4 = hom4 - hom2;
  const BigInt onto_v4 = hom2 * hom2 - 3 * hom2 + 2;
  const BigInt count = onto_c4 / 2 + onto_v4 / 6;
  if (count > std::numeric_limits<std::size_t>::max()) throw std::overflow_error("quotient count overflow");
  return static_cast<std::size_t>(count);
}

namespace {

using SmallMatrix = std::vector<std::vector<long>>;

// v in the lattice spanned by the rows of an upper-triangular full-rank h.
bool lattice_contains(const SmallMatrix& h, std::vector<long> v) {
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (v[i] % h[i][i] != 0) return false;
    const long c = v[i] / h[i][i];
    if (c == 0) continue;
    for (std::size_t j = i; j < h.size(); ++j) v[j] -= c * h[i][j];
  }
  return true;
}

// Visit every upper-triangular Hermite form of determinant 4 in dimension m.
template <typename Visit>
void for_each_index4_hermite_form(std::size_t m, Visit&& visit) {
  std::vector<std::vector<long>> diagonals;
  for (std::size_t p = 0; p < m; ++p) {
    std::vector<long> d(m, 1);
    d[p] = 4;
    diagonals.push_back(d);
    for (std::size_t q = p + 1; q < m; ++q) {
      std::vector<long> e(m, 1);
      e[p] = e[q] = 2;
      diagonals.push_back(e);
    }
  }
  for (const auto& diag : diagonals) {
    // Free cells: (i, j) with i < j and diag[j] > 1, each ranging over [0, diag[j]).
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t j = 0; j < m; ++j)
      if (diag[j] > 1)
        for (std::size_t i = 0; i < j; ++i) cells.emplace_back(i, j);
    SmallMatrix h(m, std::vector<long>(m, 0));
    for (std::size_t i = 0; i < m; ++i) h[i][i] = diag[i];
    while (true) {
      visit(h);
      std::size_t k = 0;
      for (; k < cells.size(); ++k) {
        auto [i, j] = cells[k];
        if (++h[i][j] < diag[j]) break;
        h[i][j] = 0;
      }
      if (k == cells.size()) break;
    }
  }
}

}  // namespace

std::vector<QuotientDescriptor> enumerate_order4_quotients(const AbelianInvariants& g) {
  // Coordinates: torsion factors then free factors. Odd factors lie in every
  // index-4 kernel, so the search runs only over factors with gcd(d, 4) > 1.
  const std::size_t t = g.torsion().size();
  const std::size_t m = t + g.free_rank();
  std::vector<std::size_t> active;
  std::vector<long> relation;  // gcd(d, 4) for torsion, 0 for free
  for (std::size_t i = 0; i < m; ++i) {
    long r = 0;
    if (i < t) {
      const BigInt& d = g.torsion()[i];
      r = d % 4 == 0 ? 4 : (d % 2 == 0 ? 2 : 1);
      if (r == 1) continue;
    }
    active.push_back(i);
    relation.push_back(r);
  }

  std::vector<QuotientDescriptor> out;
  const std::size_t a = active.size();
  for_each_index4_hermite_form(a, [&](const SmallMatrix& h) {
    for (std::size_t i = 0; i < a; ++i) {
      if (relation[i] == 0) continue;
      std::vector<long> v(a, 0);
      v[i] = relation[i];
      if (!lattice_contains(h, v)) return;
    }
    bool contains_double = true;
    for (std::size_t i = 0; i < a && contains_double; ++i) {
      std::vector<long> v(a, 0);
      v[i] = 2;
      contains_double = lattice_contains(h, v);
    }
    IntMatrix basis = IntMatrix::identity(m);
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < a; ++j) basis(active[i], active[j]) = h[i][j];
    out.push_back({std::move(basis), contains_double ? QuotientType::V4 : QuotientType::C4});
  });
  std::sort(out.begin(), out.end(),
            [](const QuotientDescriptor& x, const QuotientDescriptor& y) { return x.kernel_basis < y.kernel_basis; });
  return out;
}

}  // namespace fpg
