// partsemi - finite transformation semigroups preserving a set partition
//
// Exact closed-form counts for Gamma(X, P), its idempotents and its regular
// elements, as functions of the shape of P. Everything is integer
// arithmetic on BigCount; nothing here touches floating point.
//
// The sums over the family F_r of r-subpartitions containing a smallest
// block are grouped by SubShape: every summand depends on a subpartition
// only through its block counts (r_1, ..., r_k), and the number of
// subpartitions with given counts is prod_i C(m_i, r_i).

#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "core.hpp"

namespace partsemi {

  using BigCount = boost::multiprecision::cpp_int;

  inline std::string to_decimal(BigCount const& c) {
    return c.str();
  }

  inline BigCount factorial(std::size_t n) {
    BigCount out = 1;
    for (std::size_t k = 2; k <= n; ++k) {
      out *= k;
    }
    return out;
  }

  //! Number of r-subsets of an n-set; 0 when r > n.
  inline BigCount binomial(std::size_t n, std::size_t r) {
    if (r > n) {
      return 0;
    }
    r = std::min(r, n - r);
    BigCount out = 1;
    for (std::size_t k = 1; k <= r; ++k) {
      out *= n - r + k;
      out /= k;
    }
    return out;
  }

  //! Stirling number of the second kind S(n, k), from the recurrence
  //! S(n, k) = k S(n-1, k) + S(n-1, k-1) with S(0, 0) = 1. The table is
  //! per-thread and grows on demand.
  inline BigCount stirling2(std::size_t n, std::size_t k) {
    thread_local std::vector<std::vector<BigCount>> table{{BigCount(1)}};
    if (k > n) {
      return 0;
    }
    while (table.size() <= n) {
      auto const&           prev = table.back();
      std::size_t const     row  = table.size();
      std::vector<BigCount> next(row + 1, 0);
      for (std::size_t j = 1; j <= row; ++j) {
        BigCount v = j < prev.size() ? prev[j] * j : BigCount(0);
        v += prev[j - 1];
        next[j] = std::move(v);
      }
      table.push_back(std::move(next));
    }
    return table[n][k];
  }

  namespace detail {

    inline BigCount power(BigCount const& base, std::size_t e) {
      return boost::multiprecision::pow(base, static_cast<unsigned>(e));
    }

    // Number of surjections from a block of size n_i onto some block of
    // size n_j, j <= upto, when there are weight[j] candidate codomain
    // blocks of size n_j:  sum_{j <= upto} weight[j] n_j! S(n_i, n_j).
    inline BigCount surjections_onto_smaller(PartitionShape const& shape,
                                             std::size_t           i,
                                             std::size_t           upto,
                                             std::vector<std::size_t> const&
                                                 weight) {
      BigCount sum = 0;
      for (std::size_t j = 0; j <= upto && j < shape.number_of_sizes(); ++j) {
        sum += BigCount(weight[j]) * factorial(shape[j].size)
               * stirling2(shape[i].size, shape[j].size);
      }
      return sum;
    }

    inline void require_subshape(PartitionShape const& shape,
                                 SubShape const&       sub,
                                 char const*           what) {
      if (!is_valid_subshape(shape, sub)) {
        throw DomainError(std::string(what) + ": invalid subshape for shape "
                          + format_shape(shape));
      }
    }

    inline void require_r(PartitionShape const& shape, std::size_t r,
                          char const* what) {
      if (r == 0 || r > shape.number_of_blocks()) {
        throw DomainError(std::string(what) + ": r = " + std::to_string(r)
                          + " outside 1.."
                          + std::to_string(shape.number_of_blocks()));
      }
    }

  }  // namespace detail

  //! |Gamma(X, P)| = prod_i ( sum_{j <= i} m_j n_j! S(n_i, n_j) )^{m_i}.
  inline BigCount count_Gamma(PartitionShape const& shape) {
    std::vector<std::size_t> mult;
    for (auto const& part : shape.parts()) {
      mult.push_back(part.multiplicity);
    }
    BigCount out = 1;
    for (std::size_t i = 0; i < shape.number_of_sizes(); ++i) {
      out *= detail::power(detail::surjections_onto_smaller(shape, i, i, mult),
                           shape[i].multiplicity);
    }
    return out;
  }

  //! A SubShape together with the number of subpartitions realising it.
  struct WeightedSubShape {
    SubShape sub;
    BigCount multiplicity;
  };

  //! Every SubShape with r_1 >= 1 and r_1 + ... + r_k = r, in lexicographic
  //! order, each weighted by prod_i C(m_i, r_i).
  inline std::vector<WeightedSubShape> sub_shapes(PartitionShape const& shape,
                                                  std::size_t           r) {
    detail::require_r(shape, r, "sub_shapes");
    std::size_t const             k = shape.number_of_sizes();
    std::vector<WeightedSubShape> out;
    std::vector<std::size_t>      counts(k, 0);
    // Depth-first over r_0, r_1, ...; `left` is what remains to place.
    auto recurse = [&](auto&& self, std::size_t i, std::size_t left) -> void {
      if (i == k) {
        if (left == 0 && counts[0] >= 1) {
          BigCount w = 1;
          for (std::size_t t = 0; t < k; ++t) {
            w *= binomial(shape[t].multiplicity, counts[t]);
          }
          out.push_back({SubShape{counts}, std::move(w)});
        }
        return;
      }
      for (std::size_t c = 0; c <= std::min(left, shape[i].multiplicity);
           ++c) {
        counts[i] = c;
        self(self, i + 1, left - c);
      }
      counts[i] = 0;
    };
    recurse(recurse, 0, r);
    return out;
  }

  //! Idempotents of A_Q for a subpartition Q with block counts `sub`:
  //! prod_i ( sum_{j <= i} r_j n_j! S(n_i, n_j) )^{m_i - r_i}.
  inline BigCount count_E_A_Q(PartitionShape const& shape,
                              SubShape const&       sub) {
    detail::require_subshape(shape, sub, "count_E_A_Q");
    BigCount out = 1;
    for (std::size_t i = 0; i < shape.number_of_sizes(); ++i) {
      out *= detail::power(
          detail::surjections_onto_smaller(shape, i, i, sub.counts),
          shape[i].multiplicity - sub.counts[i]);
    }
    return out;
  }

  //! |E(Gamma(X, P))|, summed over r and over F_r grouped by SubShape.
  inline BigCount count_E_Gamma(PartitionShape const& shape) {
    BigCount total = 0;
    for (std::size_t r = 1; r <= shape.number_of_blocks(); ++r) {
      for (auto const& w : sub_shapes(shape, r)) {
        total += w.multiplicity * count_E_A_Q(shape, w.sub);
      }
    }
    return total;
  }

  //! |E(Gamma(X, P))| for m blocks of size q:
  //! sum_{r=1}^{m} C(m, r) r^{m-r} (q!)^{m-r}.
  inline BigCount count_E_Gamma_uniform(std::size_t m, std::size_t q) {
    if (m == 0 || q == 0) {
      throw DomainError("count_E_Gamma_uniform: m and q must be positive");
    }
    BigCount const qf    = factorial(q);
    BigCount       total = 0;
    for (std::size_t r = 1; r <= m; ++r) {
      total += binomial(m, r) * detail::power(BigCount(r), m - r)
               * detail::power(qf, m - r);
    }
    return total;
  }

  //! The closed form sum_{l=1}^{min(m_1, r)} C(m_1, l) C(m - l, r - l) for
  //! the size of F_r, evaluated as written. It agrees with
  //! count_F_r_enumerated when m_1 = 1 or r = 1 and is strictly larger
  //! otherwise, since a subpartition holding several smallest blocks is
  //! counted more than once.
  inline BigCount count_F_r_formula(PartitionShape const& shape,
                                    std::size_t           r) {
    detail::require_r(shape, r, "count_F_r_formula");
    std::size_t const m  = shape.number_of_blocks();
    std::size_t const m1 = shape[0].multiplicity;
    BigCount          total = 0;
    for (std::size_t l = 1; l <= std::min(m1, r); ++l) {
      total += binomial(m1, l) * binomial(m - l, r - l);
    }
    return total;
  }

  //! |F_r| = C(m, r) - C(m - m_1, r): all r-subpartitions minus those
  //! avoiding every smallest block.
  inline BigCount count_F_r_enumerated(PartitionShape const& shape,
                                       std::size_t           r) {
    detail::require_r(shape, r, "count_F_r_enumerated");
    std::size_t const m  = shape.number_of_blocks();
    std::size_t const m1 = shape[0].multiplicity;
    return binomial(m, r) - binomial(m - m1, r);
  }

  //! Regular elements of A_Q for a subpartition Q with block counts `sub`:
  //!   r_1! S(m_1, r_1) (n_1!)^{m_1}
  //!   * prod_{i >= 2} sum_{p = r_i}^{m_i} C(m_i, p) r_i! S(p, r_i) (n_i!)^p
  //!                   * ( sum_{j < i} r_j n_j! S(n_i, n_j) )^{m_i - p}
  //! with S(0, 0) = 1, S(p, 0) = 0 for p >= 1, empty sums 0 and 0^0 = 1.
  inline BigCount count_Reg_A_Q(PartitionShape const& shape,
                                SubShape const&       sub) {
    detail::require_subshape(shape, sub, "count_Reg_A_Q");
    auto const& r   = sub.counts;
    BigCount    out = factorial(r[0]) * stirling2(shape[0].multiplicity, r[0])
                   * detail::power(factorial(shape[0].size),
                                   shape[0].multiplicity);
    for (std::size_t i = 1; i < shape.number_of_sizes(); ++i) {
      std::size_t const mi = shape[i].multiplicity;
      BigCount const    smaller
          = detail::surjections_onto_smaller(shape, i, i - 1, r);
      BigCount const nif = factorial(shape[i].size);
      BigCount       sum = 0;
      for (std::size_t p = r[i]; p <= mi; ++p) {
        sum += binomial(mi, p) * factorial(r[i]) * stirling2(p, r[i])
               * detail::power(nif, p) * detail::power(smaller, mi - p);
      }
      out *= sum;
    }
    return out;
  }

  //! |Reg(Gamma(X, P))|, summed over r and over F_r grouped by SubShape.
  inline BigCount count_Reg_Gamma(PartitionShape const& shape) {
    BigCount total = 0;
    for (std::size_t r = 1; r <= shape.number_of_blocks(); ++r) {
      for (auto const& w : sub_shapes(shape, r)) {
        total += w.multiplicity * count_Reg_A_Q(shape, w.sub);
      }
    }
    return total;
  }

}  // namespace partsemi
