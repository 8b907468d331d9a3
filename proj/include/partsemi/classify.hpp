// partsemi - finite transformation semigroups preserving a set partition
//
// Classification of idempotent, regular and unit-regular elements.
//
// The criteria here are the block-level characterisations: they never search
// the semigroup. Each witness builder returns an explicit g with fgf = f,
// constructed deterministically (smallest preimages, order-preserving
// bijections between sorted blocks, lowest-index blocks first). The
// regular_brute / unit_regular_brute scans are the ground-truth oracles the
// criteria are tested against.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "core.hpp"

namespace partsemi {

  inline bool is_idempotent(Transformation const& f) {
    return compose(f, f) == f;
  }

  namespace detail {

    inline void require_T(Transformation const& f, Partition const& p,
                          char const* what) {
      if (!in_T(f, p)) {
        throw DomainError(std::string(what) + ": the map "
                          + format_transformation(f)
                          + " is not in T(X, P) for P = "
                          + format_partition(p));
      }
    }

    inline void require_Sigma(Transformation const& f, Partition const& p,
                              char const* what) {
      if (!in_Sigma(f, p)) {
        throw DomainError(std::string(what) + ": the map "
                          + format_transformation(f)
                          + " is not in Sigma(X, P) for P = "
                          + format_partition(p));
      }
    }

    inline void require_Gamma(Transformation const& f, Partition const& p,
                              char const* what) {
      if (!in_Gamma(f, p)) {
        throw DomainError(std::string(what) + ": the map "
                          + format_transformation(f)
                          + " is not in Gamma(X, P) for P = "
                          + format_partition(p));
      }
    }

    // For f in T(X, P): for each block i in the image of the character, the
    // smallest block j with |X_i| = |X_j| and X_i & Xf = X_j f, or nullopt as
    // soon as some such i has no partner. Entries for blocks outside the
    // image of the character are unused.
    inline std::optional<std::vector<std::size_t>>
    unit_regular_partners(Transformation const& f, Partition const& p) {
      auto const        chi   = character(f, p);
      auto const        hit   = chi.image_mask();
      std::size_t const m     = p.number_of_blocks();
      std::vector<bool> in_im(f.degree(), false);
      for (auto y : f.images()) {
        in_im[y] = true;
      }
      std::vector<std::size_t> partner(m, m);
      for (std::size_t i = 0; i < m; ++i) {
        if (!hit[i]) {
          continue;
        }
        // X_j f lies inside X_{chi(j)}, so only j with chi(j) = i can match.
        for (std::size_t j = 0; j < m && partner[i] == m; ++j) {
          if (chi[j] != i || p.block_size(j) != p.block_size(i)) {
            continue;
          }
          auto const img = block_image_mask(f, p, j);
          bool       eq  = true;
          for (auto y : p.block(i)) {
            if (img[y] != in_im[y]) {
              eq = false;
              break;
            }
          }
          if (eq) {
            partner[i] = j;
          }
        }
        if (partner[i] == m) {
          return std::nullopt;
        }
      }
      return partner;
    }

    // For f in Gamma(X, P): for each block j in the image of the character,
    // the smallest block i with chi(i) = j whose block map is injective.
    inline std::optional<std::vector<std::size_t>>
    injective_sources(BlockMapFamily const& family, Character const& chi) {
      std::size_t const        m = chi.number_of_blocks();
      std::vector<std::size_t> source(m, m);
      for (std::size_t i = 0; i < m; ++i) {
        if (family[i].injective && source[chi[i]] == m) {
          source[chi[i]] = i;
        }
      }
      auto const hit = chi.image_mask();
      for (std::size_t j = 0; j < m; ++j) {
        if (hit[j] && source[j] == m) {
          return std::nullopt;
        }
      }
      return source;
    }

    // Writes into g an order-preserving bijection from `from` onto `to`
    // (equal sizes, both ascending), skipping points of `from` already set
    // and points of `to` already used.
    inline void fill_block_bijection(std::vector<point_type>&       g,
                                     std::vector<bool>&             set,
                                     std::vector<point_type> const& from,
                                     std::vector<point_type> const& to,
                                     std::vector<bool>&             used) {
      auto next = to.begin();
      for (auto x : from) {
        if (set[x]) {
          continue;
        }
        while (used[*next]) {
          ++next;
        }
        g[x]        = *next;
        set[x]      = true;
        used[*next] = true;
      }
    }

  }  // namespace detail

  //! For f in Gamma(X, P): f is idempotent iff the block map on every block
  //! in the image of the character is the identity.
  inline bool idempotent_in_Gamma(Transformation const& f,
                                  Partition const&      p) {
    detail::require_Gamma(f, p, "idempotent_in_Gamma");
    auto const family = block_map_family(f, p);
    auto const hit    = character(f, p).image_mask();
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (hit[i] && !family[i].is_identity(p)) {
        return false;
      }
    }
    return true;
  }

  //! For f in Gamma(X, P): f is regular in Gamma(X, P) iff every block in
  //! the image of the character is the codomain of an injective block map.
  inline bool regular_in_Gamma(Transformation const& f, Partition const& p) {
    detail::require_Gamma(f, p, "regular_in_Gamma");
    return detail::injective_sources(block_map_family(f, p), character(f, p))
        .has_value();
  }

  //! For f in T(X, P): f is unit-regular in T(X, P) iff for every block X_i
  //! in the image of the character there is a block X_j of the same size
  //! with X_i & Xf = X_j f.
  inline bool unit_regular_in_T(Transformation const& f, Partition const& p) {
    detail::require_T(f, p, "unit_regular_in_T");
    return detail::unit_regular_partners(f, p).has_value();
  }

  //! For f in Sigma(X, P): unit-regular iff the character preserves block
  //! sizes.
  inline bool unit_regular_in_Sigma(Transformation const& f,
                                    Partition const&      p) {
    detail::require_Sigma(f, p, "unit_regular_in_Sigma");
    auto const chi = character(f, p);
    for (std::size_t i = 0; i < chi.number_of_blocks(); ++i) {
      if (p.block_size(i) != p.block_size(chi[i])) {
        return false;
      }
    }
    return true;
  }

  //! A unit g of T(X, P) with fgf = f, or nullopt if f is not unit-regular.
  //!
  //! Each image block X_i of the character is sent bijectively onto its
  //! partner X_j, with every x' in X_j f going to its least preimage in X_j.
  //! A partner block that is not itself an image block is then sent onto an
  //! image block that nothing has been sent to yet (lowest index of equal
  //! size). All other blocks are fixed pointwise.
  inline std::optional<Transformation>
  witness_unit_regular_T(Transformation const& f, Partition const& p) {
    detail::require_T(f, p, "witness_unit_regular_T");
    auto const partners = detail::unit_regular_partners(f, p);
    if (!partners) {
      return std::nullopt;
    }
    std::size_t const m   = p.number_of_blocks();
    auto const        hit = character(f, p).image_mask();

    std::vector<point_type> g(f.degree());
    std::vector<bool>       set(f.degree(), false);
    std::vector<bool>       used(f.degree(), false);
    std::vector<bool>       is_codomain(m, false);

    for (std::size_t i = 0; i < m; ++i) {
      if (!hit[i]) {
        continue;
      }
      std::size_t const j = (*partners)[i];
      is_codomain[j]      = true;
      // Least preimage in X_j of each x' in X_j f; X_j is ascending so the
      // first hit wins.
      for (auto x : p.block(j)) {
        auto const y = f[x];
        if (!set[y]) {
          g[y]    = x;
          set[y]  = true;
          used[x] = true;
        }
      }
      detail::fill_block_bijection(g, set, p.block(i), p.block(j), used);
    }

    std::vector<bool> taken(m, false);  // image blocks already a codomain
    for (std::size_t i = 0; i < m; ++i) {
      taken[i] = is_codomain[i];
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (hit[i] || !is_codomain[i]) {
        continue;
      }
      std::size_t k = 0;
      while (k < m
             && (!hit[k] || taken[k] || p.block_size(k) != p.block_size(i))) {
        ++k;
      }
      // The size multisets of the displaced blocks and the free image
      // blocks agree, so k always exists.
      taken[k] = true;
      detail::fill_block_bijection(g, set, p.block(i), p.block(k), used);
    }

    for (std::size_t x = 0; x < g.size(); ++x) {
      if (!set[x]) {
        g[x] = static_cast<point_type>(x);
      }
    }
    return Transformation(std::move(g));
  }

  //! An element g of Gamma(X, P) with fgf = f, or nullopt if f is not
  //! regular in Gamma(X, P). On each image block X_j, g is the inverse of
  //! the lowest-index injective block map onto X_j; elsewhere the identity.
  inline std::optional<Transformation>
  witness_regular_Gamma(Transformation const& f, Partition const& p) {
    detail::require_Gamma(f, p, "witness_regular_Gamma");
    auto const family  = block_map_family(f, p);
    auto const chi     = character(f, p);
    auto const sources = detail::injective_sources(family, chi);
    if (!sources) {
      return std::nullopt;
    }
    auto       g   = Transformation::identity(f.degree());
    auto       img = std::vector<point_type>(g.images().begin(),
                                       g.images().end());
    auto const hit = chi.image_mask();
    for (std::size_t j = 0; j < chi.number_of_blocks(); ++j) {
      if (!hit[j]) {
        continue;
      }
      auto const& entry = family[(*sources)[j]];
      auto const& dom   = p.block(entry.domain);
      for (std::size_t k = 0; k < dom.size(); ++k) {
        img[entry.images[k]] = dom[k];
      }
    }
    return Transformation(std::move(img));
  }

  //! Is there a g in `elements` with fgf = f?
  template <typename Range>
  bool regular_brute(Transformation const& f, Range&& elements) {
    for (auto const& g : elements) {
      if (compose(compose(f, g), f) == f) {
        return true;
      }
    }
    return false;
  }

  //! Is there a u in `units` with fuf = f? Same scan as regular_brute; the
  //! caller supplies the unit group.
  template <typename Range>
  bool unit_regular_brute(Transformation const& f, Range&& units) {
    return regular_brute(f, std::forward<Range>(units));
  }

  //! Everything the library knows about a single map with respect to P.
  //! Optional fields are empty when the map lies outside the semigroup the
  //! criterion is stated for; `notes` then says why.
  struct ClassificationReport {
    bool in_T     = false;
    bool in_Sigma = false;
    bool in_Gamma = false;
    bool in_S     = false;
    bool idempotent = false;

    std::optional<bool> regular_in_Gamma;
    std::optional<bool> unit_regular_in_T;
    std::optional<bool> unit_regular_in_Sigma;

    std::optional<Transformation> witness;        // unit g with fgf = f
    std::optional<Transformation> gamma_witness;  // g in Gamma with fgf = f

    std::vector<std::string> notes;
  };

  inline ClassificationReport classify(Transformation const& f,
                                       Partition const&      p) {
    detail::check_degree(f, p);
    ClassificationReport rep;
    rep.in_T       = in_T(f, p);
    rep.in_Sigma   = in_Sigma(f, p);
    rep.in_Gamma   = in_Gamma(f, p);
    rep.in_S       = in_S(f, p);
    rep.idempotent = is_idempotent(f);

    if (rep.in_T) {
      rep.witness           = witness_unit_regular_T(f, p);
      rep.unit_regular_in_T = rep.witness.has_value();
    } else {
      rep.notes.emplace_back(
          "not in T(X,P): unit_regular_in_T and witness undefined");
    }
    if (rep.in_Sigma) {
      rep.unit_regular_in_Sigma = unit_regular_in_Sigma(f, p);
    } else {
      rep.notes.emplace_back(
          "not in Sigma(X,P): unit_regular_in_Sigma undefined");
    }
    if (rep.in_Gamma) {
      rep.gamma_witness    = witness_regular_Gamma(f, p);
      rep.regular_in_Gamma = rep.gamma_witness.has_value();
    } else {
      rep.notes.emplace_back("not in Gamma(X,P): regular_in_Gamma undefined");
    }
    return rep;
  }

}  // namespace partsemi
