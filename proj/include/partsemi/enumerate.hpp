// partsemi - finite transformation semigroups preserving a set partition
//
// Exhaustive, deterministic enumeration of T_X, T(X, P), Sigma(X, P),
// Gamma(X, P), S(X, P), the subpartition families F_r and the slices A_r and
// A_Q of Gamma(X, P).
//
// Every map preserving P is determined by its family of block maps, so the
// semigroups are produced by choosing one block map per block (block 0 is
// the most significant digit) from a per-block candidate list ordered by
// codomain block and then lexicographically by restriction table. Ranges
// are lazy and restartable: each begin() starts a fresh search.

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <iterator>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "core.hpp"

namespace partsemi {

  //! An enumeration was asked for a ground set larger than its cap.
  class CapExceeded : public Error {
   public:
    using Error::Error;
  };

  //! Default limit for ranges assembled block by block.
  inline constexpr std::size_t default_assembly_cap = 8;
  //! Default limit for oracles that filter all n^n maps.
  inline constexpr std::size_t default_filter_cap = 7;

  namespace detail {

    inline void check_cap(std::size_t n, std::size_t cap, char const* what) {
      if (n > cap) {
        throw CapExceeded(std::string(what) + ": degree " + std::to_string(n)
                          + " exceeds the enumeration cap "
                          + std::to_string(cap)
                          + " (raise it with --cap if you mean it)");
      }
    }

    enum class BlockMapKind { any, surjective, bijective };

    struct BlockChoice {
      std::size_t             codomain;
      std::vector<point_type> images;  // images of the domain block, in order
    };

    // All maps from a block of size `k` into `to`, lexicographic by table,
    // restricted to `kind`.
    inline void append_block_maps(std::vector<BlockChoice>&      out,
                                  std::size_t                    k,
                                  std::size_t                    codomain,
                                  std::vector<point_type> const& to,
                                  BlockMapKind                   kind) {
      std::size_t const        base = to.size();
      std::vector<std::size_t> digit(k, 0);
      std::vector<std::size_t> hits(base, 0);
      while (true) {
        std::fill(hits.begin(), hits.end(), 0);
        for (auto d : digit) {
          ++hits[d];
        }
        bool const onto = std::find(hits.begin(), hits.end(), std::size_t(0))
                          == hits.end();
        bool const keep = kind == BlockMapKind::any
                          || (onto && (kind == BlockMapKind::surjective
                                       || k == base));
        if (keep) {
          BlockChoice c{codomain, {}};
          for (auto d : digit) {
            c.images.push_back(to[d]);
          }
          out.push_back(std::move(c));
        }
        std::size_t pos = k;
        while (pos > 0) {
          --pos;
          if (++digit[pos] < base) {
            break;
          }
          digit[pos] = 0;
          if (pos == 0) {
            return;
          }
        }
      }
    }

  }  // namespace detail

  //! A lazy range of transformations assembled one block map per block.
  //!
  //! Block i draws from choices[i]; when `distinct_codomains` is set no two
  //! blocks may share a codomain block (used for the unit group). An
  //! optional filter drops whole maps after assembly.
  class BlockwiseMaps {
   public:
    using Filter = std::function<bool(Transformation const&)>;

    struct Spec {
      Partition                                     partition;
      std::vector<std::vector<detail::BlockChoice>> choices;
      bool                                          distinct_codomains = false;
      Filter                                        filter;
    };

    class iterator {
     public:
      using iterator_category = std::input_iterator_tag;
      using value_type        = Transformation;
      using difference_type   = std::ptrdiff_t;
      using pointer           = Transformation const*;
      using reference         = Transformation const&;

      iterator() = default;

      explicit iterator(std::shared_ptr<Spec const> spec)
          : _spec(std::move(spec)) {
        std::size_t const m = _spec->choices.size();
        _idx.assign(m, 0);
        _used.assign(m, 0);
        _images.assign(_spec->partition.degree(), 0);
        _done = !search(0, /*fresh=*/true);
      }

      reference operator*() const {
        return _current;
      }
      pointer operator->() const {
        return &_current;
      }

      iterator& operator++() {
        _done = !search(_idx.size() - 1, /*fresh=*/false);
        return *this;
      }

      void operator++(int) {
        ++*this;
      }

      friend bool operator==(iterator const& it, std::default_sentinel_t) {
        return it._done;
      }

     private:
      detail::BlockChoice const& choice(std::size_t level) const {
        return _spec->choices[level][_idx[level]];
      }

      void take(std::size_t level) {
        auto const& c = choice(level);
        auto const& b = _spec->partition.block(level);
        for (std::size_t k = 0; k < b.size(); ++k) {
          _images[b[k]] = c.images[k];
        }
        ++_used[c.codomain];
      }

      void release(std::size_t level) {
        --_used[choice(level).codomain];
      }

      // Depth-first search for the next complete assignment in lexicographic
      // order. With `fresh` the search starts at idx[level] inclusive;
      // otherwise the current leaf is released and the search resumes after
      // it.
      bool search(std::size_t level, bool fresh) {
        auto const&       choices = _spec->choices;
        std::size_t const m       = choices.size();
        if (!fresh) {
          release(level);
          ++_idx[level];
        }
        while (true) {
          if (_idx[level] == choices[level].size()) {
            if (level == 0) {
              return false;
            }
            _idx[level] = 0;
            --level;
            release(level);
            ++_idx[level];
            continue;
          }
          if (_spec->distinct_codomains && _used[choice(level).codomain] != 0) {
            ++_idx[level];
            continue;
          }
          take(level);
          if (level + 1 < m) {
            ++level;
            _idx[level] = 0;
            continue;
          }
          _current = Transformation(_images);
          if (!_spec->filter || _spec->filter(_current)) {
            return true;
          }
          release(level);
          ++_idx[level];
        }
      }

      std::shared_ptr<Spec const> _spec;
      std::vector<std::size_t>    _idx;
      std::vector<std::size_t>    _used;
      std::vector<point_type>     _images;
      Transformation              _current;
      bool                        _done = true;
    };

    explicit BlockwiseMaps(Spec spec)
        : _spec(std::make_shared<Spec const>(std::move(spec))) {}

    [[nodiscard]] iterator begin() const {
      return iterator(_spec);
    }
    [[nodiscard]] std::default_sentinel_t end() const noexcept {
      return {};
    }

    [[nodiscard]] Partition const& partition() const noexcept {
      return _spec->partition;
    }

    //! A copy of this range with an extra filter applied after the
    //! existing one.
    [[nodiscard]] BlockwiseMaps filtered(Filter extra) const {
      Spec s = *_spec;
      if (s.filter) {
        s.filter = [first = s.filter, extra = std::move(extra)](
                       Transformation const& f) {
          return first(f) && extra(f);
        };
      } else {
        s.filter = std::move(extra);
      }
      return BlockwiseMaps(std::move(s));
    }

    //! Drains the range; the count of its elements.
    [[nodiscard]] std::size_t count() const {
      std::size_t c = 0;
      for (auto it = begin(); it != end(); ++it) {
        ++c;
      }
      return c;
    }

    [[nodiscard]] std::vector<Transformation> to_vector() const {
      std::vector<Transformation> out;
      for (auto const& f : *this) {
        out.push_back(f);
      }
      return out;
    }

   private:
    std::shared_ptr<Spec const> _spec;
  };

  namespace detail {

    // For every block i, every block map of `kind` into every block j with
    // `admissible(|X_i|, |X_j|)`.
    template <typename Admissible>
    std::vector<std::vector<BlockChoice>>
    block_choices(Partition const& p, BlockMapKind kind,
                  Admissible admissible) {
      std::vector<std::vector<BlockChoice>> out(p.number_of_blocks());
      for (std::size_t i = 0; i < p.number_of_blocks(); ++i) {
        for (std::size_t j = 0; j < p.number_of_blocks(); ++j) {
          if (admissible(p.block_size(i), p.block_size(j))) {
            append_block_maps(out[i], p.block_size(i), j, p.block(j), kind);
          }
        }
      }
      return out;
    }

    inline Partition discrete_partition(std::size_t n) {
      std::vector<std::vector<point_type>> blocks(n);
      for (std::size_t x = 0; x < n; ++x) {
        blocks[x] = {static_cast<point_type>(x)};
      }
      return Partition(std::move(blocks));
    }

    inline BlockwiseMaps preserving_maps(Partition const& p) {
      return BlockwiseMaps({p,
                            block_choices(p, BlockMapKind::any,
                                          [](auto, auto) { return true; }),
                            false,
                            {}});
    }

  }  // namespace detail

  //! All n^n selfmaps of {0, ..., n - 1}, lexicographic by image table.
  inline BlockwiseMaps enum_all(std::size_t n,
                                std::size_t cap = default_assembly_cap) {
    if (n == 0) {
      throw DomainError("enum_all: degree must be positive");
    }
    detail::check_cap(n, cap, "enum_all");
    return detail::preserving_maps(detail::discrete_partition(n));
  }

  //! T(X, P): every block mapped into some block.
  inline BlockwiseMaps enum_T(Partition const& p,
                              std::size_t      cap = default_assembly_cap) {
    detail::check_cap(p.degree(), cap, "enum_T");
    return detail::preserving_maps(p);
  }

  //! Sigma(X, P): members of T(X, P) whose image meets every block.
  inline BlockwiseMaps enum_Sigma(Partition const& p,
                                  std::size_t      cap = default_assembly_cap) {
    detail::check_cap(p.degree(), cap, "enum_Sigma");
    return detail::preserving_maps(p).filtered(
        [p](Transformation const& f) { return in_Sigma(f, p); });
  }

  //! Gamma(X, P): one surjective block map per block onto a block no larger
  //! than the domain block.
  inline BlockwiseMaps enum_Gamma(Partition const& p,
                                  std::size_t      cap = default_assembly_cap) {
    detail::check_cap(p.degree(), cap, "enum_Gamma");
    return BlockwiseMaps(
        {p,
         detail::block_choices(p, detail::BlockMapKind::surjective,
                               [](std::size_t from, std::size_t to) {
                                 return to <= from;
                               }),
         false,
         {}});
  }

  //! S(X, P): bijective block maps onto equal-size blocks, with distinct
  //! codomains.
  inline BlockwiseMaps enum_S(Partition const& p,
                              std::size_t      cap = default_assembly_cap) {
    detail::check_cap(p.degree(), cap, "enum_S");
    return BlockwiseMaps(
        {p,
         detail::block_choices(p, detail::BlockMapKind::bijective,
                               [](std::size_t from, std::size_t to) {
                                 return to == from;
                               }),
         true,
         {}});
  }

  //! Elements of Gamma(X, P) whose character has rank r, 1 <= r <= m.
  inline BlockwiseMaps slice_A_r(Partition const& p, std::size_t r,
                                 std::size_t cap = default_assembly_cap) {
    if (r == 0 || r > p.number_of_blocks()) {
      throw DomainError("slice_A_r: rank " + std::to_string(r)
                        + " outside 1.." + std::to_string(p.number_of_blocks()));
    }
    return enum_Gamma(p, cap).filtered([p, r](Transformation const& f) {
      return character(f, p).rank() == r;
    });
  }

  //! Elements of Gamma(X, P) whose image is exactly the union of the blocks
  //! with indices in `q`.
  inline BlockwiseMaps slice_A_Q(Partition const&         p,
                                 std::vector<std::size_t> q,
                                 std::size_t cap = default_assembly_cap) {
    std::vector<bool> wanted(p.number_of_blocks(), false);
    for (auto i : q) {
      if (i >= p.number_of_blocks() || wanted[i]) {
        throw DomainError("slice_A_Q: invalid or repeated block index "
                          + std::to_string(i));
      }
      wanted[i] = true;
    }
    if (q.empty()) {
      throw DomainError("slice_A_Q: empty subpartition");
    }
    return enum_Gamma(p, cap).filtered([p, wanted](Transformation const& f) {
      return character(f, p).image_mask() == wanted;
    });
  }

  //! A subpartition of P given by ascending block indices, with its block
  //! counts per distinct size of P.
  struct Subpartition {
    std::vector<std::size_t> blocks;
    SubShape                 shape;
  };

  //! The r-subpartitions of P that contain at least one block of the
  //! smallest size, in lexicographic order of block-index sets.
  inline std::vector<Subpartition> enum_F_r(Partition const& p,
                                            std::size_t      r) {
    std::size_t const m = p.number_of_blocks();
    if (r == 0 || r > m) {
      throw DomainError("enum_F_r: r = " + std::to_string(r) + " outside 1.."
                        + std::to_string(m));
    }
    auto const               shape    = shape_of(p);
    std::size_t const        smallest = p.smallest_block_size();
    std::vector<std::size_t> comb(r);
    std::iota(comb.begin(), comb.end(), std::size_t(0));
    std::vector<Subpartition> out;
    while (true) {
      bool has_smallest = false;
      for (auto i : comb) {
        has_smallest = has_smallest || p.block_size(i) == smallest;
      }
      if (has_smallest) {
        Subpartition s{comb, SubShape{std::vector<std::size_t>(
                                 shape.number_of_sizes(), 0)}};
        for (auto i : comb) {
          for (std::size_t t = 0; t < shape.number_of_sizes(); ++t) {
            if (shape[t].size == p.block_size(i)) {
              ++s.shape.counts[t];
            }
          }
        }
        out.push_back(std::move(s));
      }
      // Next r-combination of {0, ..., m - 1}.
      std::size_t pos = r;
      while (pos > 0 && comb[pos - 1] == m - r + pos - 1) {
        --pos;
      }
      if (pos == 0) {
        return out;
      }
      ++comb[pos - 1];
      for (std::size_t k = pos; k < r; ++k) {
        comb[k] = comb[k - 1] + 1;
      }
    }
  }

  //! All set partitions of {0, ..., n - 1}, in lexicographic order of their
  //! restricted growth strings.
  inline std::vector<Partition> all_partitions(std::size_t n) {
    if (n == 0) {
      throw DomainError("all_partitions: degree must be positive");
    }
    std::vector<Partition>   out;
    std::vector<std::size_t> rgs(n, 0);
    std::vector<std::size_t> prefix_max(n, 0);  // max of rgs[0..x]
    while (true) {
      out.push_back(Partition::from_rgs(rgs));
      std::size_t x = n - 1;
      while (x > 0 && rgs[x] > prefix_max[x - 1]) {
        --x;
      }
      if (x == 0) {
        return out;
      }
      ++rgs[x];
      prefix_max[x] = std::max(prefix_max[x - 1], rgs[x]);
      for (std::size_t y = x + 1; y < n; ++y) {
        rgs[y]        = 0;
        prefix_max[y] = prefix_max[x];
      }
    }
  }

}  // namespace partsemi
