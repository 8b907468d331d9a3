// partsemi - finite transformation semigroups preserving a set partition
//
// Command-line front end: classify, count, enumerate, verify. Kept in a
// header so the tests can drive it in-process; tools/partsemi.cpp is a thin
// main().
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#pragma once

#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "algebra.hpp"
#include "classify.hpp"
#include "core.hpp"
#include "count.hpp"
#include "enumerate.hpp"
#include "verify.hpp"

namespace partsemi::cli {

  inline constexpr int exit_ok           = 0;
  inline constexpr int exit_verification = 1;
  inline constexpr int exit_usage        = 2;

  using json = nlohmann::ordered_json;

  namespace detail {

    inline json one_based(Transformation const& f) {
      json arr = json::array();
      for (auto y : f.images()) {
        arr.push_back(y + 1);
      }
      return arr;
    }

    inline json optional_bool(std::optional<bool> const& b) {
      return b ? json(*b) : json(nullptr);
    }

    inline json optional_map(std::optional<Transformation> const& f) {
      return f ? json(format_transformation(*f)) : json(nullptr);
    }

    inline void print_record(std::ostream& out, json const& rec,
                             std::string const& format) {
      if (format == "json") {
        out << rec.dump() << '\n';
        return;
      }
      for (auto const& [key, value] : rec.items()) {
        out << key << '=';
        if (value.is_string()) {
          out << value.get<std::string>();
        } else {
          out << value.dump();
        }
        out << '\n';
      }
    }

    inline json classify_record(Partition const& p, Transformation const& f) {
      auto const rep = classify(f, p);
      json       rec;
      rec["n"]                     = p.degree();
      rec["partition"]             = format_partition(p);
      rec["f"]                     = format_transformation(f);
      rec["in_T"]                  = rep.in_T;
      rec["in_Sigma"]              = rep.in_Sigma;
      rec["in_Gamma"]              = rep.in_Gamma;
      rec["in_S"]                  = rep.in_S;
      rec["idempotent"]            = rep.idempotent;
      rec["regular_in_Gamma"]      = optional_bool(rep.regular_in_Gamma);
      rec["unit_regular_in_T"]     = optional_bool(rep.unit_regular_in_T);
      rec["unit_regular_in_Sigma"] = optional_bool(rep.unit_regular_in_Sigma);
      rec["witness"]               = optional_map(rep.witness);
      rec["gamma_witness"]         = optional_map(rep.gamma_witness);
      rec["reason"] = rep.notes.empty() ? json(nullptr) : json(rep.notes);
      return rec;
    }

    inline json count_record(PartitionShape const& shape,
                             std::string const&    which) {
      json rec;
      rec["shape"] = format_shape(shape);
      rec["n"]     = shape.degree();
      rec["m"]     = shape.number_of_blocks();
      if (which == "gamma" || which == "all") {
        rec["gamma"] = to_decimal(count_Gamma(shape));
      }
      if (which == "idempotents" || which == "all") {
        rec["idempotents"] = to_decimal(count_E_Gamma(shape));
      }
      if (which == "regular" || which == "all") {
        rec["regular"] = to_decimal(count_Reg_Gamma(shape));
      }
      if (which == "all") {
        json fr = json::array();
        for (std::size_t r = 1; r <= shape.number_of_blocks(); ++r) {
          json row;
          row["r"]          = r;
          row["mu"]         = to_decimal(count_F_r_enumerated(shape, r));
          row["mu_formula"] = to_decimal(count_F_r_formula(shape, r));
          fr.push_back(row);
        }
        rec["f_r"] = fr;
      }
      return rec;
    }

    inline BlockwiseMaps enumeration(Partition const& p,
                                     std::string const& which,
                                     std::size_t cap) {
      if (which == "T") {
        return enum_T(p, cap);
      }
      if (which == "Sigma") {
        return enum_Sigma(p, cap);
      }
      if (which == "S") {
        return enum_S(p, cap);
      }
      auto gamma = enum_Gamma(p, cap);
      if (which == "idempotents") {
        return gamma.filtered(
            [](Transformation const& f) { return is_idempotent(f); });
      }
      if (which == "regular") {
        return gamma.filtered(
            [p](Transformation const& f) { return regular_in_Gamma(f, p); });
      }
      return gamma;
    }

    inline void print_map(std::ostream& out, Transformation const& f,
                          std::string const& format) {
      if (format == "json") {
        json rec;
        rec["f"] = one_based(f);
        out << rec.dump() << '\n';
      } else if (format == "csv") {
        for (std::size_t x = 0; x < f.degree(); ++x) {
          out << (x == 0 ? "" : ",") << f[x] + 1;
        }
        out << '\n';
      } else {
        out << format_transformation(f) << '\n';
      }
    }

  }  // namespace detail

  //! Runs the command line `args` (without the program name).
  inline int run(std::vector<std::string> args, std::ostream& out,
                 std::ostream& err) {
    CLI::App app{"Transformation semigroups preserving a set partition",
                 "partsemi"};
    app.require_subcommand(1);

    std::string partition_text;
    std::string map_text;
    std::string shape_text;
    std::string format = "json";
    std::string which;
    std::size_t cap   = default_assembly_cap;
    std::size_t max_n = 4;
    std::vector<std::string> suites;

    auto* classify_cmd
        = app.add_subcommand("classify", "classify one map against P");
    classify_cmd->add_option("-p,--partition", partition_text,
                             "partition, e.g. \"1|2,3\"")
        ->required();
    classify_cmd->add_option("-f,--map", map_text, "images, e.g. \"2 1 1\"")
        ->required();
    classify_cmd->add_option("--format", format)
        ->check(CLI::IsMember({"json", "lines"}));

    auto* count_cmd = app.add_subcommand(
        "count", "exact sizes of Gamma(X,P), its idempotents and regulars");
    count_cmd->add_option("-s,--shape", shape_text, "shape, e.g. \"1^2,2^1\"")
        ->required();
    count_cmd->add_option("which", which, "gamma|idempotents|regular|all")
        ->check(CLI::IsMember({"gamma", "idempotents", "regular", "all"}));
    count_cmd->add_option("--format", format)
        ->check(CLI::IsMember({"json", "lines"}));

    std::string enum_format = "lines";
    auto*       enum_cmd
        = app.add_subcommand("enumerate", "list the elements of a semigroup");
    enum_cmd->add_option("-p,--partition", partition_text)->required();
    enum_cmd->add_option("which", which, "T|Sigma|Gamma|S|idempotents|regular")
        ->check(CLI::IsMember(
            {"T", "Sigma", "Gamma", "S", "idempotents", "regular"}));
    enum_cmd->add_option("--format", enum_format)
        ->check(CLI::IsMember({"lines", "json", "csv"}));
    enum_cmd->add_option("--cap", cap, "largest degree to enumerate");

    std::string verify_format = "lines";
    auto*       verify_cmd    = app.add_subcommand(
        "verify", "check every formula and classifier by brute force");
    verify_cmd->add_option("--max-n", max_n, "largest ground set size");
    verify_cmd->add_option("--suite", suites, "suite(s) to run (default all)")
        ->check(CLI::IsMember(verify_suite_names()));
    verify_cmd->add_option("--format", verify_format)
        ->check(CLI::IsMember({"lines", "json"}));
    verify_cmd->add_option("--cap", cap, "largest degree to enumerate");

    try {
      std::reverse(args.begin(), args.end());
      app.parse(args);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return exit_usage;
    }

    try {
      if (classify_cmd->parsed()) {
        auto const p = parse_partition(partition_text);
        auto const f = parse_transformation(map_text, p.degree());
        detail::print_record(out, detail::classify_record(p, f), format);
        return exit_ok;
      }
      if (count_cmd->parsed()) {
        auto const shape = parse_shape(shape_text);
        detail::print_record(
            out, detail::count_record(shape, which.empty() ? "all" : which),
            format);
        return exit_ok;
      }
      if (enum_cmd->parsed()) {
        auto const p = parse_partition(partition_text);
        for (auto const& f :
             detail::enumeration(p, which.empty() ? "Gamma" : which, cap)) {
          detail::print_map(out, f, enum_format);
        }
        return exit_ok;
      }
      // verify
      if (max_n > cap) {
        throw CapExceeded("verify: --max-n " + std::to_string(max_n)
                          + " exceeds the enumeration cap "
                          + std::to_string(cap)
                          + " (raise it with --cap if you mean it)");
      }
      if (max_n == 0) {
        throw DomainError("verify: --max-n must be positive");
      }
      VerifyOptions opt;
      opt.max_n = max_n;
      auto const reports
          = verify(suites.empty() ? verify_suite_names() : suites, opt);
      bool ok = true;
      for (auto const& rep : reports) {
        ok = ok && rep.passed();
        if (verify_format == "json") {
          json rec;
          rec["suite"]         = rep.name;
          rec["max_n"]         = max_n;
          rec["passed"]        = rep.passed();
          rec["checks"]        = rep.checks;
          rec["failures"]      = rep.failures;
          rec["first_failure"] = rep.passed() ? json(nullptr)
                                              : json(rep.first_failure);
          rec["notes"]         = rep.notes;
          out << rec.dump() << '\n';
          continue;
        }
        out << rep.name << ": " << (rep.passed() ? "PASS" : "FAIL") << " ("
            << rep.checks - rep.failures << "/" << rep.checks
            << " checks, n <= " << max_n << ")\n";
        if (!rep.passed()) {
          out << "  first counterexample: " << rep.first_failure << '\n';
        }
        for (auto const& note : rep.notes) {
          out << "  note: " << note << '\n';
        }
      }
      return ok ? exit_ok : exit_verification;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return exit_usage;
    }
  }

  inline int run(int argc, char const* const* argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(std::move(args), std::cout, std::cerr);
  }

}  // namespace partsemi::cli
