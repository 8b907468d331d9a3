// partsemi - finite transformation semigroups preserving a set partition
//
// Membership in the semigroups T(X, P), Sigma(X, P), Gamma(X, P) and the unit
// group S(X, P), and the two structural decompositions of a P-preserving
// map: its character (the induced map on block indices) and its family of
// block maps.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "core.hpp"

namespace partsemi {

  namespace detail {

    inline void check_degree(Transformation const& f, Partition const& p) {
      if (f.degree() != p.degree()) {
        throw SizeMismatch("map of degree " + std::to_string(f.degree())
                           + " against partition of degree "
                           + std::to_string(p.degree()));
      }
    }

    // Block index of the image of each block's least element, then checked
    // against the rest of the block. Empty iff f does not preserve p.
    inline std::optional<std::vector<std::size_t>>
    try_character(Transformation const& f, Partition const& p) {
      check_degree(f, p);
      std::vector<std::size_t> targets(p.number_of_blocks());
      for (std::size_t i = 0; i < p.number_of_blocks(); ++i) {
        auto const& b = p.block(i);
        targets[i]    = p.block_of(f[b[0]]);
        for (auto x : b) {
          if (p.block_of(f[x]) != targets[i]) {
            return std::nullopt;
          }
        }
      }
      return targets;
    }

    // hit[y] iff y lies in the image of block i.
    inline std::vector<bool> block_image_mask(Transformation const& f,
                                              Partition const&      p,
                                              std::size_t           i) {
      std::vector<bool> hit(f.degree(), false);
      for (auto x : p.block(i)) {
        hit[f[x]] = true;
      }
      return hit;
    }

  }  // namespace detail

  //! The induced map on block indices: target(i) = j whenever X_i f is
  //! contained in X_j. Only defined for maps preserving the partition.
  class Character {
   public:
    Character() = default;
    explicit Character(std::vector<std::size_t> targets)
        : _targets(std::move(targets)) {
      for (auto t : _targets) {
        if (t >= _targets.size()) {
          throw DomainError("character target out of range");
        }
      }
    }

    [[nodiscard]] std::size_t number_of_blocks() const noexcept {
      return _targets.size();
    }
    [[nodiscard]] std::size_t operator[](std::size_t i) const {
      return _targets[i];
    }
    [[nodiscard]] std::vector<std::size_t> const& targets() const noexcept {
      return _targets;
    }

    //! hit[j] iff j is in the image of the character.
    [[nodiscard]] std::vector<bool> image_mask() const {
      std::vector<bool> hit(_targets.size(), false);
      for (auto t : _targets) {
        hit[t] = true;
      }
      return hit;
    }

    [[nodiscard]] std::size_t rank() const {
      auto const hit = image_mask();
      return static_cast<std::size_t>(std::count(hit.begin(), hit.end(), true));
    }

    [[nodiscard]] bool is_bijective() const {
      return rank() == _targets.size();
    }

    friend bool operator==(Character const&, Character const&) = default;

   private:
    std::vector<std::size_t> _targets;
  };

  inline std::size_t character_rank(Character const& c) {
    return c.rank();
  }

  inline bool character_is_bijective(Character const& c) {
    return c.is_bijective();
  }

  //! f is in T(X, P): every block is mapped into a single block.
  inline bool in_T(Transformation const& f, Partition const& p) {
    return detail::try_character(f, p).has_value();
  }

  //! f is in Sigma(X, P): f is in T(X, P) and Xf meets every block.
  inline bool in_Sigma(Transformation const& f, Partition const& p) {
    if (!in_T(f, p)) {
      return false;
    }
    std::vector<bool> met(p.number_of_blocks(), false);
    for (auto y : f.images()) {
      met[p.block_of(y)] = true;
    }
    return std::find(met.begin(), met.end(), false) == met.end();
  }

  //! f is in Gamma(X, P): the image of every block is exactly a block.
  inline bool in_Gamma(Transformation const& f, Partition const& p) {
    auto const targets = detail::try_character(f, p);
    if (!targets) {
      return false;
    }
    for (std::size_t i = 0; i < p.number_of_blocks(); ++i) {
      auto const hit = detail::block_image_mask(f, p, i);
      for (auto y : p.block((*targets)[i])) {
        if (!hit[y]) {
          return false;
        }
      }
    }
    return true;
  }

  //! f is in S(X, P), the group of units of T(X, P): a permutation that
  //! preserves P and whose inverse preserves P.
  inline bool in_S(Transformation const& f, Partition const& p) {
    detail::check_degree(f, p);
    return f.is_permutation() && in_T(f, p) && in_T(f.inverse(), p);
  }

  //! Throws DomainError if f is not in T(X, P).
  inline Character character(Transformation const& f, Partition const& p) {
    auto targets = detail::try_character(f, p);
    if (!targets) {
      throw DomainError("the map " + format_transformation(f)
                        + " does not preserve the partition "
                        + format_partition(p));
    }
    return Character(std::move(*targets));
  }

  //! Restriction of f to one block, viewed as a map onto its codomain block.
  struct BlockMap {
    std::size_t             domain;    // block index i
    std::size_t             codomain;  // block index target(i)
    std::vector<point_type> images;    // images of block(i), in block order
    bool                    injective;
    bool                    surjective;  // onto the codomain block

    [[nodiscard]] bool is_identity(Partition const& p) const {
      return domain == codomain && images == p.block(domain);
    }
  };

  //! The unique family of block maps induced by f; entry i has domain X_i.
  struct BlockMapFamily {
    std::vector<BlockMap> entries;

    [[nodiscard]] std::size_t size() const noexcept {
      return entries.size();
    }
    [[nodiscard]] BlockMap const& operator[](std::size_t i) const {
      return entries[i];
    }
  };

  //! Throws DomainError if f is not in T(X, P).
  inline BlockMapFamily block_map_family(Transformation const& f,
                                         Partition const&      p) {
    auto const     chi = character(f, p);
    BlockMapFamily family;
    family.entries.reserve(p.number_of_blocks());
    for (std::size_t i = 0; i < p.number_of_blocks(); ++i) {
      BlockMap entry{i, chi[i], {}, true, true};
      auto const hit = detail::block_image_mask(f, p, i);
      for (auto x : p.block(i)) {
        entry.images.push_back(f[x]);
      }
      std::size_t distinct = 0;
      for (auto y : p.block(chi[i])) {
        if (hit[y]) {
          ++distinct;
        } else {
          entry.surjective = false;
        }
      }
      entry.injective = (distinct == p.block_size(i));
      family.entries.push_back(std::move(entry));
    }
    return family;
  }

}  // namespace partsemi
