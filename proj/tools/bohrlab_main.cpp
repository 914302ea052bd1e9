// bohrlab command-line tool. Talks to the shared library exclusively through
// the C interface in bohrlab.h.

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "bohrlab.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssertionFailure = 1;
constexpr int kExitUsage = 2;

int map_status(bohrlab_status status) {
  if (status == BOHRLAB_OK) {
    return kExitOk;
  }
  std::cerr << "error: " << bohrlab_status_name(status);
  const char* detail = bohrlab_last_error();
  if (detail && *detail) {
    std::cerr << ": " << detail;
  }
  std::cerr << "\n";
  return status == BOHRLAB_ERR_INTERNAL ? kExitAssertionFailure : kExitUsage;
}

bool parse_family(const std::string& name, bohrlab_family* out) {
  static const std::pair<const char*, bohrlab_family> table[] = {
      {"th1", BOHRLAB_FAMILY_TH1},
      {"th2", BOHRLAB_FAMILY_TH2},
      {"th6", BOHRLAB_FAMILY_TH6},
      {"th3", BOHRLAB_FAMILY_TH3},
      {"th5", BOHRLAB_FAMILY_TH5},
      {"th4", BOHRLAB_FAMILY_TH4},
      {"aux-rmp", BOHRLAB_FAMILY_AUX_RMP},
      {"aux-r2mp", BOHRLAB_FAMILY_AUX_R2MP},
      {"aux-rk", BOHRLAB_FAMILY_AUX_RK},
      {"thmb-quartic", BOHRLAB_FAMILY_THMB_QUARTIC},
  };
  for (const auto& [key, value] : table) {
    if (name == key) {
      *out = value;
      return true;
    }
  }
  return false;
}

bool parse_format(const std::string& name, bohrlab_format* out) {
  if (name == "csv") {
    *out = BOHRLAB_FORMAT_CSV;
  } else if (name == "md" || name == "markdown") {
    *out = BOHRLAB_FORMAT_MARKDOWN;
  } else if (name == "json") {
    *out = BOHRLAB_FORMAT_JSON;
  } else {
    return false;
  }
  return true;
}

int emit(const char* text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    const std::size_t len = std::strlen(text);
    if (len > 0 && text[len - 1] != '\n') {
      std::cout << "\n";
    }
    return kExitOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open output file: " << out_path << "\n";
    return kExitUsage;
  }
  file << text;
  return file.good() ? kExitOk : kExitUsage;
}

struct CommonFlags {
  std::string theorem;
  int m = 1;
  int p = 1;
  int k = 1;
  int n = 1;
  int precision = 6;
  std::string format;
};

void add_common(CLI::App* cmd, CommonFlags* flags, const char* default_format) {
  cmd->add_option("--theorem", flags->theorem, "family name (th1..th6, aux-*, thmb-quartic)")
      ->required();
  cmd->add_option("--m", flags->m, "vanishing order m");
  cmd->add_option("--p", flags->p, "vanishing order p");
  cmd->add_option("--k", flags->k, "vanishing order k");
  cmd->add_option("--N", flags->n, "derivative count for th5");
  cmd->add_option("--precision", flags->precision, "significant digits (default 6)");
  flags->format = default_format;
  cmd->add_option("--format", flags->format, "output format: csv, md, json");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sharp Bohr-type radii for bounded analytic functions: solve the "
               "radius equations, reproduce the published tables, verify the "
               "inequalities on sampled unit-ball functions and demonstrate "
               "sharpness of every radius."};
  app.require_subcommand(1);

  CommonFlags radius_flags;
  double radius_tol = 1e-12;
  CLI::App* radius_cmd = app.add_subcommand("radius", "solve a radius equation");
  add_common(radius_cmd, &radius_flags, "md");
  radius_cmd->add_option("--tol", radius_tol, "bracket width tolerance (>= 1e-14)");

  std::string table_id = "1";
  int table_precision = 6;
  std::string table_format = "md";
  std::string table_out;
  CLI::App* table_cmd = app.add_subcommand("table", "reproduce a published table");
  table_cmd->add_option("--id", table_id, "table id: 1, 2, 3, 3p, 5")->required();
  table_cmd->add_option("--precision", table_precision, "significant digits");
  table_cmd->add_option("--format", table_format, "output format: csv, md, json");
  table_cmd->add_option("--out", table_out, "write to file instead of stdout");

  CommonFlags verify_flags;
  int verify_samples = 500;
  std::uint64_t verify_seed = 20240814;
  double verify_margin = 0.01;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "sampled inequality check below the radius");
  add_common(verify_cmd, &verify_flags, "md");
  verify_cmd->add_option("--samples", verify_samples, "unit-ball samples (default 500)");
  verify_cmd->add_option("--seed", verify_seed, "sampling seed");
  verify_cmd->add_option("--r-margin", verify_margin,
                         "relative margin below the radius (default 0.01)");

  CommonFlags sharp_flags;
  double sharp_a = 1.0 - 1e-4;
  double sharp_delta = 1e-2;
  CLI::App* sharp_cmd =
      app.add_subcommand("sharpness", "extremal family just below/above the radius");
  add_common(sharp_cmd, &sharp_flags, "md");
  sharp_cmd->add_option("--a", sharp_a, "extremal parameter (default 1-1e-4)");
  sharp_cmd->add_option("--delta", sharp_delta, "radius offset (default 0.01)");

  CommonFlags sweep_flags;
  double sweep_start = 0.0;
  double sweep_end = 0.0;
  double sweep_step = 1e-3;
  std::string sweep_out;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "residual-vs-r rows for plotting");
  add_common(sweep_cmd, &sweep_flags, "csv");
  sweep_cmd->add_option("--r-start", sweep_start, "sweep start")->required();
  sweep_cmd->add_option("--r-end", sweep_end, "sweep end")->required();
  sweep_cmd->add_option("--step", sweep_step, "sweep step (default 1e-3)");
  sweep_cmd->add_option("--out", sweep_out, "write CSV to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto run = [&](const CommonFlags& flags,
                 auto&& action) -> int {
    bohrlab_family family;
    if (!parse_family(flags.theorem, &family)) {
      std::cerr << "error: unknown theorem family: " << flags.theorem << "\n";
      return kExitUsage;
    }
    bohrlab_format format;
    if (!parse_format(flags.format, &format)) {
      std::cerr << "error: unknown format: " << flags.format << "\n";
      return kExitUsage;
    }
    const bohrlab_params params{flags.m, flags.p, flags.k, flags.n};
    return action(family, params, format);
  };

  if (radius_cmd->parsed()) {
    return run(radius_flags, [&](bohrlab_family family, bohrlab_params params,
                                 bohrlab_format format) {
      char* text = nullptr;
      const bohrlab_status status = bohrlab_render_radius(
          family, params, radius_tol, format, radius_flags.precision, &text);
      if (status != BOHRLAB_OK) {
        return map_status(status);
      }
      const int code = emit(text, "");
      bohrlab_string_free(text);
      return code;
    });
  }

  if (table_cmd->parsed()) {
    int id = 0;
    if (table_id == "1") {
      id = 1;
    } else if (table_id == "2") {
      id = 2;
    } else if (table_id == "3") {
      id = 3;
    } else if (table_id == "3p") {
      id = 4;
    } else if (table_id == "5") {
      id = 5;
    } else {
      std::cerr << "error: unknown table id: " << table_id
                << " (valid: 1, 2, 3, 3p, 5)\n";
      return kExitUsage;
    }
    bohrlab_format format;
    if (!parse_format(table_format, &format)) {
      std::cerr << "error: unknown format: " << table_format << "\n";
      return kExitUsage;
    }
    char* text = nullptr;
    const bohrlab_status status =
        bohrlab_render_table(id, format, table_precision, &text);
    if (status != BOHRLAB_OK) {
      return map_status(status);
    }
    const int code = emit(text, table_out);
    bohrlab_string_free(text);
    return code;
  }

  if (verify_cmd->parsed()) {
    return run(verify_flags, [&](bohrlab_family family, bohrlab_params params,
                                 bohrlab_format format) {
      char* text = nullptr;
      int passed = 0;
      const bohrlab_status status = bohrlab_render_verify(
          family, params, verify_samples, verify_seed, verify_margin, format,
          verify_flags.precision, &text, &passed);
      if (status != BOHRLAB_OK) {
        return map_status(status);
      }
      const int code = emit(text, "");
      bohrlab_string_free(text);
      if (code != kExitOk) {
        return code;
      }
      if (!passed) {
        std::cerr << "verify: inequality violated by at least one sample\n";
        return kExitAssertionFailure;
      }
      return kExitOk;
    });
  }

  if (sharp_cmd->parsed()) {
    return run(sharp_flags, [&](bohrlab_family family, bohrlab_params params,
                                bohrlab_format format) {
      char* text = nullptr;
      int exceeds = 0;
      const bohrlab_status status =
          bohrlab_render_sharpness(family, params, sharp_a, sharp_delta, format,
                                   sharp_flags.precision, &text, &exceeds);
      if (status != BOHRLAB_OK) {
        return map_status(status);
      }
      const int code = emit(text, "");
      bohrlab_string_free(text);
      if (code != kExitOk) {
        return code;
      }
      if (!exceeds) {
        std::cerr << "sharpness: extremal family did not exceed 1 above the radius\n";
        return kExitAssertionFailure;
      }
      return kExitOk;
    });
  }

  if (sweep_cmd->parsed()) {
    return run(sweep_flags, [&](bohrlab_family family, bohrlab_params params,
                                bohrlab_format format) {
      char* text = nullptr;
      const bohrlab_status status =
          bohrlab_render_sweep(family, params, sweep_start, sweep_end, sweep_step,
                               format, sweep_flags.precision, &text);
      if (status != BOHRLAB_OK) {
        return map_status(status);
      }
      const int code = emit(text, sweep_out);
      bohrlab_string_free(text);
      return code;
    });
  }

  std::cerr << "error: no subcommand given\n";
  return kExitUsage;
}
