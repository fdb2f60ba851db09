// Subcommand driver shared by the binary and the test suite.
//
// Exit status 0 on success, 1 on validation failure, 2 on usage error.  Every
// subcommand is deterministic: identical inputs produce byte-identical
// output, including report ordering.

#pragma once

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latfan/io.hpp"
#include "latfan/latfan.hpp"

namespace latfan {

namespace cli_detail {

inline Fan load_fan(const std::string& path) { return parse_fan(read_file(path)); }

inline int cmd_check(const std::string& path, std::ostream& out) {
  Fan f = load_fan(path);
  FanValidation v = validate_fan(f, /*require_support=*/true);
  if (!v) {
    out << "valid: false\n" << v.code << ": " << v.message << '\n';
    return 1;
  }
  FanoGrade grade = fano_grade(f);
  print_grade(out, grade);
  return grade.gorenstein && grade.weak_fano && grade.fano ? 0 : 1;
}

inline int cmd_classify(const std::string& path, std::ostream& out) {
  Fan f = load_fan(path);
  ClassLabel label = classify(f);
  out << label.to_string() << '\n';
  if (label.kind == ClassLabel::kNotLocalFano) {
    print_grade(out, label.grade);
    return 1;
  }
  out << "label=" << label.to_string() << " key=" << key_hex(label.canonical_key)
      << '\n';
  return label.kind == ClassLabel::kUnclassified ? 1 : 0;
}

}  // namespace cli_detail

/// Runs one toolkit subcommand; arguments exclude the program name.
inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
  CLI::App app{"exact toolkit for Gorenstein local toric Fano 3-folds"};
  app.name("latfan");
  app.require_subcommand(1);

  std::string fan_file, polygon_file;
  i64 param_m = 1, param_n = 0;
  int param_k = 1;
  bool gorenstein_model = false;

  CLI::App* check = app.add_subcommand("check", "grade a fan document");
  check->add_option("fan-file", fan_file, "fan document (JSON)")->required();

  CLI::App* classify_cmd = app.add_subcommand("classify", "classify a fan document");
  classify_cmd->add_option("fan-file", fan_file, "fan document (JSON)")->required();

  CLI::App* construct = app.add_subcommand("construct", "emit a named fan");
  construct->require_subcommand(1);
  CLI::App* c_family = construct->add_subcommand("family-i", "pyramid family over (m,m,1)");
  c_family->add_option("--m", param_m, "family parameter, m >= 1")->required();
  CLI::App* c_surface = construct->add_subcommand("surface", "2d weak-Fano family");
  c_surface->add_option("--n", param_n, "number of interior rays, n >= 0")->required();
  c_surface->add_flag("--gorenstein", gorenstein_model, "emit the Gorenstein model");
  CLI::App* c_polygon = construct->add_subcommand("polygon", "fan of a height-1 polygon");
  c_polygon->add_option("polygon-file", polygon_file, "vertex pairs, one per line")
      ->required();
  CLI::App* c_sporadic = construct->add_subcommand("sporadic", "one of the 13 exceptional fans");
  c_sporadic->add_option("--k", param_k, "index in 1..13")->required();

  CLI::App* resolve = app.add_subcommand("resolve2d", "2d crepant resolution");
  resolve->add_option("fan-file", fan_file, "fan document (JSON)")->required();

  CLI::App* enumerate = app.add_subcommand("enumerate", "exhaustive classification runs");
  enumerate->require_subcommand(1);
  CLI::App* e_iib = enumerate->add_subcommand("iib", "the 13 exceptional fans");
  CLI::App* e_poly = enumerate->add_subcommand("polygons", "the 23 bounding polygons");

  CLI::App* export_cmd = app.add_subcommand("export-gamma", "OFF model of the Gamma body");
  export_cmd->add_option("fan-file", fan_file, "fan document (JSON)")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    err << app.help();
    return 2;
  }

  try {
    if (check->parsed()) return cli_detail::cmd_check(fan_file, out);
    if (classify_cmd->parsed()) return cli_detail::cmd_classify(fan_file, out);

    if (construct->parsed()) {
      Fan f;
      if (c_family->parsed()) {
        f = family_i(param_m);
      } else if (c_surface->parsed()) {
        f = surface_family(param_n, gorenstein_model);
      } else if (c_polygon->parsed()) {
        std::vector<Vec> vertices =
            parse_polygon_file(cli_detail::read_file(polygon_file));
        PolygonValidation pv = validate_polygon(vertices);
        if (!pv.ok()) {
          for (const PolygonViolation& viol : pv.violations)
            err << "constructions." << viol.code << ": " << viol.message << '\n';
          return 1;
        }
        f = fan_from_polygon(*pv.polygon);
      } else {
        f = sporadic(param_k);
      }
      out << emit_fan(f);
      return 0;
    }

    if (resolve->parsed()) {
      Fan f = cli_detail::load_fan(fan_file);
      out << emit_fan(crepant_resolve_2d(f));
      return 0;
    }

    if (e_iib->parsed()) {
      IibReport report = enumerate_iib();
      out << "region lattice points (nonzero): "
          << enumerate_region(report.region).pool.size() << '\n';
      for (const IibEntry& entry : report.entries) {
        out << "label=" << entry.label.to_string() << " key=" << key_hex(entry.key)
            << " rays=";
        for (std::size_t i = 0; i < entry.fan.rays.size(); ++i)
          out << (i ? " " : "") << entry.fan.rays[i];
        out << '\n';
      }
      out << "classes found: " << report.entries.size() << '\n';
      out << "sporadic classes: " << report.sporadics.size() << '\n';
      return 0;
    }

    if (e_poly->parsed()) {
      PolygonEnumeration pe = enumerate_polygons_iib();
      for (std::size_t i = 0; i < pe.polygons.size(); ++i) {
        out << "polygon " << (i + 1) << ':';
        for (const Vec& v : pe.polygons[i]) out << ' ' << v;
        out << '\n';
      }
      if (pe.count_all != pe.count_dedup)
        out << "polygons before swap dedup: " << pe.count_all << '\n';
      out << "polygons: " << pe.count_dedup << '\n';
      return 0;
    }

    if (export_cmd->parsed()) {
      Fan f = cli_detail::load_fan(fan_file);
      out << export_gamma_off(f);
      return 0;
    }
  } catch (const Error& e) {
    err << e.code() << ": " << e.what() << '\n';
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace latfan
