// partsemi - finite transformation semigroups preserving a set partition
//
// Exhaustive self-checks: every closed form and every classifier in the
// library is compared with brute force over all set partitions of small
// ground sets. This is what `partsemi verify` runs.

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "classify.hpp"
#include "core.hpp"
#include "count.hpp"
#include "enumerate.hpp"

namespace partsemi {

  struct SuiteReport {
    std::string              name;
    std::size_t              checks   = 0;
    std::size_t              failures = 0;
    std::string              first_failure;
    std::vector<std::string> notes;  // reported, never counted as failures

    [[nodiscard]] bool passed() const noexcept {
      return failures == 0;
    }

    void check(bool ok, std::function<std::string()> const& describe) {
      ++checks;
      if (!ok) {
        if (failures == 0) {
          first_failure = describe();
        }
        ++failures;
      }
    }
  };

  struct VerifyOptions {
    std::size_t max_n = 4;
    //! Largest n for which regularity is decided by scanning Gamma(X, P)
    //! for a g with fgf = f; above it the classifier is used.
    std::size_t brute_regular_max_n = 5;
    //! Largest n for which all n^n maps are filtered.
    std::size_t filter_max_n = 6;
  };

  inline std::vector<std::string> const& verify_suite_names() {
    static std::vector<std::string> const names{
        "counts", "classifiers", "inclusions", "witnesses", "f_r"};
    return names;
  }

  namespace detail {

    inline std::string describe(Partition const& p, Transformation const& f,
                                std::string const& what) {
      return "P=" + format_partition(p) + " f=" + format_transformation(f)
             + ": " + what;
    }

    inline std::string describe(Partition const& p, std::string const& what) {
      return "P=" + format_partition(p) + ": " + what;
    }

    inline void verify_counts(Partition const& p, VerifyOptions const& opt,
                              SuiteReport& rep) {
      auto const  shape = shape_of(p);
      auto const  gamma = enum_Gamma(p, opt.max_n).to_vector();
      std::size_t idempotents = 0;
      std::size_t regular     = 0;
      bool const  brute       = p.degree() <= opt.brute_regular_max_n;
      for (auto const& f : gamma) {
        idempotents += is_idempotent(f) ? 1 : 0;
        bool const reg
            = brute ? regular_brute(f, gamma) : regular_in_Gamma(f, p);
        regular += reg ? 1 : 0;
      }
      rep.check(count_Gamma(shape) == gamma.size(), [&] {
        return describe(p, "count_Gamma " + to_decimal(count_Gamma(shape))
                               + " != enumerated "
                               + std::to_string(gamma.size()));
      });
      rep.check(count_E_Gamma(shape) == idempotents, [&] {
        return describe(p, "count_E_Gamma " + to_decimal(count_E_Gamma(shape))
                               + " != enumerated "
                               + std::to_string(idempotents));
      });
      rep.check(count_Reg_Gamma(shape) == regular, [&] {
        return describe(p, "count_Reg_Gamma "
                               + to_decimal(count_Reg_Gamma(shape))
                               + " != enumerated " + std::to_string(regular));
      });
      if (shape.is_uniform()) {
        rep.check(count_E_Gamma_uniform(shape.number_of_blocks(), shape[0].size)
                      == idempotents,
                  [&] { return describe(p, "uniform idempotent count"); });
      }
      if (p.degree() <= opt.filter_max_n) {
        std::size_t filtered = 0;
        for (auto const& f : enum_all(p.degree(), opt.filter_max_n)) {
          filtered += in_Gamma(f, p) ? 1 : 0;
        }
        rep.check(filtered == gamma.size(), [&] {
          return describe(p, "enum_Gamma yields "
                                 + std::to_string(gamma.size())
                                 + " maps, filtering gives "
                                 + std::to_string(filtered));
        });
      }
    }

    inline void verify_classifiers(Partition const& p, VerifyOptions const& opt,
                                   SuiteReport& rep) {
      auto const units = enum_S(p, opt.max_n).to_vector();
      auto const gamma = enum_Gamma(p, opt.max_n).to_vector();
      for (auto const& f : enum_T(p, opt.max_n)) {
        bool const ur = unit_regular_brute(f, units);
        rep.check(unit_regular_in_T(f, p) == ur, [&] {
          return describe(p, f, "unit_regular_in_T disagrees with brute force");
        });
        if (in_Sigma(f, p)) {
          rep.check(unit_regular_in_Sigma(f, p) == ur, [&] {
            return describe(p, f,
                            "unit_regular_in_Sigma disagrees with brute force");
          });
        }
        if (in_Gamma(f, p)) {
          rep.check(regular_in_Gamma(f, p) == regular_brute(f, gamma), [&] {
            return describe(p, f,
                            "regular_in_Gamma disagrees with brute force");
          });
          rep.check(idempotent_in_Gamma(f, p) == is_idempotent(f), [&] {
            return describe(p, f, "idempotent_in_Gamma disagrees with ff = f");
          });
        }
      }
    }

    inline void verify_inclusions(Partition const& p, VerifyOptions const& opt,
                                  SuiteReport& rep) {
      std::size_t const m        = p.number_of_blocks();
      bool const        uniform  = shape_of(p).is_uniform();
      bool const        discrete = m == p.degree();
      bool const        single   = m == 1;
      for (auto const& f : enum_T(p, opt.max_n)) {
        bool const g = in_Gamma(f, p);
        bool const s = in_S(f, p);
        bool const sg = in_Sigma(f, p);
        rep.check(!s || g, [&] { return describe(p, f, "in S but not in Gamma"); });
        rep.check((g && sg) == s,
                  [&] { return describe(p, f, "Gamma & Sigma != S"); });
        if (discrete) {
          rep.check(g, [&] {
            return describe(p, f, "discrete partition must accept every map");
          });
        }
        if (single) {
          rep.check(g == f.is_permutation(), [&] {
            return describe(p, f,
                            "one-block Gamma must be the symmetric group");
          });
        }
        if (!g) {
          continue;
        }
        auto const chi    = character(f, p);
        auto const family = block_map_family(f, p);
        if (chi.is_bijective()) {
          rep.check(s, [&] {
            return describe(p, f, "bijective character but not in S");
          });
        }
        bool some_block = false;
        for (std::size_t i = 0; i < m; ++i) {
          rep.check(family[i].surjective, [&] {
            return describe(p, f, "block map not surjective");
          });
          bool const bij = family[i].injective && family[i].surjective;
          some_block     = some_block || bij;
          if (p.block_size(i) == p.smallest_block_size()) {
            rep.check(bij, [&] {
              return describe(p, f, "smallest block not mapped bijectively");
            });
          }
        }
        rep.check(some_block, [&] {
          return describe(p, f, "no block with |X_i f| = |X_i|");
        });
        bool const reg = regular_in_Gamma(f, p);
        if (uniform || m <= 2) {
          rep.check(reg, [&] {
            return describe(p, f, "uniform or <= 2 blocks but not regular");
          });
        }
        if (reg) {
          rep.check(unit_regular_in_T(f, p), [&] {
            return describe(p, f, "regular in Gamma but not unit-regular in T");
          });
        }
        if (is_idempotent(f)) {
          rep.check(reg, [&] {
            return describe(p, f, "idempotent but not regular");
          });
        }
      }
    }

    inline void verify_witnesses(Partition const& p, VerifyOptions const& opt,
                                 SuiteReport& rep) {
      for (auto const& f : enum_T(p, opt.max_n)) {
        auto const w = witness_unit_regular_T(f, p);
        rep.check(w.has_value() == unit_regular_in_T(f, p), [&] {
          return describe(p, f, "unit witness presence mismatch");
        });
        if (w) {
          rep.check(compose(compose(f, *w), f) == f && in_S(*w, p), [&] {
            return describe(p, f,
                            "unit witness " + format_transformation(*w)
                                + " violates fgf = f or is not a unit");
          });
        }
        if (!in_Gamma(f, p)) {
          continue;
        }
        auto const g = witness_regular_Gamma(f, p);
        rep.check(g.has_value() == regular_in_Gamma(f, p), [&] {
          return describe(p, f, "Gamma witness presence mismatch");
        });
        if (g) {
          rep.check(compose(compose(f, *g), f) == f && in_Gamma(*g, p), [&] {
            return describe(p, f,
                            "Gamma witness " + format_transformation(*g)
                                + " violates fgf = f or is not in Gamma");
          });
        }
      }
    }

    inline void verify_f_r(Partition const& p, SuiteReport& rep,
                           std::set<std::string>& seen_shapes) {
      auto const shape = shape_of(p);
      auto const key   = format_shape(shape);
      bool const fresh = seen_shapes.insert(key).second;
      BigCount   e_ungrouped = 0;
      BigCount   reg_ungrouped = 0;
      for (std::size_t r = 1; r <= p.number_of_blocks(); ++r) {
        auto const family = enum_F_r(p, r);
        rep.check(count_F_r_enumerated(shape, r) == family.size(), [&] {
          return describe(p, "|F_" + std::to_string(r) + "| enumerated "
                                 + std::to_string(family.size())
                                 + " != C(m,r) - C(m-m_1,r) = "
                                 + to_decimal(count_F_r_enumerated(shape, r)));
        });
        BigCount weights = 0;
        for (auto const& w : sub_shapes(shape, r)) {
          weights += w.multiplicity;
        }
        rep.check(weights == family.size(), [&] {
          return describe(p, "subshape multiplicities do not sum to |F_"
                                 + std::to_string(r) + "|");
        });
        for (auto const& q : family) {
          e_ungrouped += count_E_A_Q(shape, q.shape);
          reg_ungrouped += count_Reg_A_Q(shape, q.shape);
        }
        auto const formula = count_F_r_formula(shape, r);
        if (fresh && formula != family.size()) {
          rep.notes.push_back("shape " + key + ", r=" + std::to_string(r)
                              + ": closed form gives " + to_decimal(formula)
                              + ", direct enumeration gives "
                              + std::to_string(family.size()));
        }
      }
      rep.check(e_ungrouped == count_E_Gamma(shape), [&] {
        return describe(p, "idempotent count over enumerated F_r differs "
                           "from grouped sum");
      });
      rep.check(reg_ungrouped == count_Reg_Gamma(shape), [&] {
        return describe(p, "regular count over enumerated F_r differs from "
                           "grouped sum");
      });
    }

  }  // namespace detail

  //! Runs the named suites over every set partition of every n <= max_n.
  //! Throws DomainError for an unknown suite name.
  inline std::vector<SuiteReport>
  verify(std::vector<std::string> const& suites, VerifyOptions const& opt) {
    std::vector<SuiteReport> reports;
    for (auto const& name : suites) {
      auto const& known = verify_suite_names();
      if (std::find(known.begin(), known.end(), name) == known.end()) {
        throw DomainError("unknown verify suite '" + name + "'");
      }
      reports.emplace_back().name = name;
    }
    std::set<std::string> seen_shapes;
    for (std::size_t n = 1; n <= opt.max_n; ++n) {
      for (auto const& p : all_partitions(n)) {
        for (auto& rep : reports) {
          if (rep.name == "counts") {
            detail::verify_counts(p, opt, rep);
          } else if (rep.name == "classifiers") {
            detail::verify_classifiers(p, opt, rep);
          } else if (rep.name == "inclusions") {
            detail::verify_inclusions(p, opt, rep);
          } else if (rep.name == "witnesses") {
            detail::verify_witnesses(p, opt, rep);
          } else {
            detail::verify_f_r(p, rep, seen_shapes);
          }
        }
      }
    }
    return reports;
  }

}  // namespace partsemi
