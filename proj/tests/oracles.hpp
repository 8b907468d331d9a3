// Brute-force oracles used only by the tests. Nothing here calls the
// enumeration or counting code it is used to check.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "partsemi/core.hpp"

namespace partsemi::oracle {

  //! Calls visit(images) for every map {0..n-1} -> {0..k-1}, odometer order.
  inline void for_each_function(
      std::size_t n, std::size_t k,
      std::function<void(std::vector<point_type> const&)> const& visit) {
    std::vector<point_type> img(n, 0);
    while (true) {
      visit(img);
      std::size_t pos = n;
      while (pos > 0) {
        --pos;
        if (++img[pos] < k) {
          break;
        }
        img[pos] = 0;
        if (pos == 0) {
          return;
        }
      }
      if (n == 0) {
        return;
      }
    }
  }

  //! Every selfmap of an n-set.
  inline std::vector<Transformation> all_maps(std::size_t n) {
    std::vector<Transformation> out;
    for_each_function(n, n, [&](auto const& img) {
      out.emplace_back(std::vector<point_type>(img));
    });
    return out;
  }

  template <typename Pred>
  std::vector<Transformation> filter_all(std::size_t n, Pred pred) {
    std::vector<Transformation> out;
    for (auto& f : all_maps(n)) {
      if (pred(f)) {
        out.push_back(std::move(f));
      }
    }
    return out;
  }

  //! Number of surjections from an m-set onto a k-set, by listing all maps.
  inline std::size_t surjections(std::size_t m, std::size_t k) {
    std::size_t count = 0;
    if (k == 0) {
      return m == 0 ? 1 : 0;
    }
    for_each_function(m, k, [&](auto const& img) {
      std::vector<bool> hit(k, false);
      for (auto y : img) {
        hit[y] = true;
      }
      bool onto = true;
      for (bool h : hit) {
        onto = onto && h;
      }
      count += onto ? 1 : 0;
    });
    return count;
  }

  //! Set partitions of an n-set, as block-label vectors, by recursion on the
  //! label of each element.
  inline std::vector<std::vector<std::size_t>> set_partitions(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t>              labels(n, 0);
    std::function<void(std::size_t, std::size_t)> rec
        = [&](std::size_t x, std::size_t used) {
            if (x == n) {
              out.push_back(labels);
              return;
            }
            for (std::size_t b = 0; b <= used; ++b) {
              labels[x] = b;
              rec(x + 1, b == used ? used + 1 : used);
            }
          };
    rec(0, 0);
    return out;
  }

  //! Number of partitions of an n-set into exactly k blocks.
  inline std::size_t stirling2(std::size_t n, std::size_t k) {
    std::size_t count = 0;
    for (auto const& labels : set_partitions(n)) {
      std::size_t blocks = 0;
      for (auto l : labels) {
        blocks = std::max(blocks, l + 1);
      }
      count += (blocks == k) ? 1 : 0;
    }
    return count;
  }

  //! f is a unit of the monoid `m`: some g in m with fg = gf = identity.
  inline bool is_unit(Transformation const&              f,
                      std::vector<Transformation> const& monoid) {
    auto const id = Transformation::identity(f.degree());
    for (auto const& g : monoid) {
      if (compose(f, g) == id && compose(g, f) == id) {
        return true;
      }
    }
    return false;
  }

  //! Image of each block as a set (mask), straight from the definition.
  inline std::vector<std::vector<bool>> block_images(Transformation const& f,
                                                     Partition const&      p) {
    std::vector<std::vector<bool>> out;
    for (auto const& b : p.blocks()) {
      std::vector<bool> mask(f.degree(), false);
      for (auto x : b) {
        mask[f[x]] = true;
      }
      out.push_back(std::move(mask));
    }
    return out;
  }

  inline std::vector<bool> block_mask(Partition const& p, std::size_t i) {
    std::vector<bool> mask(p.degree(), false);
    for (auto x : p.block(i)) {
      mask[x] = true;
    }
    return mask;
  }

  //! Every block's image equals some block, checked set-wise.
  inline bool gamma_by_definition(Transformation const& f,
                                  Partition const&      p) {
    for (auto const& img : block_images(f, p)) {
      bool found = false;
      for (std::size_t j = 0; j < p.number_of_blocks(); ++j) {
        found = found || img == block_mask(p, j);
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  //! Every block's image lies inside some block.
  inline bool t_by_definition(Transformation const& f, Partition const& p) {
    for (auto const& img : block_images(f, p)) {
      bool found = false;
      for (std::size_t j = 0; j < p.number_of_blocks(); ++j) {
        auto const b      = block_mask(p, j);
        bool       inside = true;
        for (std::size_t y = 0; y < img.size(); ++y) {
          inside = inside && (!img[y] || b[y]);
        }
        found = found || inside;
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

}  // namespace partsemi::oracle
