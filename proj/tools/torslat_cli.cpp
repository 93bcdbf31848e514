#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "torslat/torslat.h"

namespace {

constexpr int kFailure = 1;
constexpr int kUsage = 2;

int report(torslat_status status) {
  std::cerr << "error: " << torslat_status_name(status) << ": " << torslat_last_error() << "\n";
  switch (status) {
    case TORSLAT_INVALID_ARGUMENT:
    case TORSLAT_INVALID_RANK:
    case TORSLAT_RANK_MISMATCH:
    case TORSLAT_OUT_OF_SUPPORT:
      return kUsage;
    default:
      return kFailure;
  }
}

// Takes ownership of *s.
int emit(torslat_status status, char** s) {
  if (status != TORSLAT_OK) return report(status);
  std::cout << *s;
  torslat_free_string(*s);
  return 0;
}

int write_file(const std::string& path, torslat_status status, char** s) {
  if (status != TORSLAT_OK) return report(status);
  std::ofstream out(path, std::ios::binary);
  out << *s;
  torslat_free_string(*s);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return kFailure;
  }
  std::cerr << "wrote " << path << "\n";
  return 0;
}

torslat_format format_of(const std::string& f) { return f == "dot" ? TORSLAT_FORMAT_DOT : TORSLAT_FORMAT_JSON; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torsion classes of RA_n, the weak order, and noncrossing arc diagrams"};
  app.require_subcommand(1);

  int n = 0;
  auto* ind = app.add_subcommand("ind", "List indecomposable modules as JSON lines");
  ind->add_option("n", n, "Rank")->required();

  std::string from, to;
  auto* hom = app.add_subcommand("hom", "Hom dimension by formula and by linear algebra");
  hom->add_option("n", n, "Rank")->required();
  hom->add_option("M", from, "Source module: i, p-q:WORD or JSON")->required();
  hom->add_option("M2", to, "Target module")->required();

  std::string format = "json";
  bool labels = false;
  auto* lattice = app.add_subcommand("lattice", "Hasse diagram of the lattice of torsion classes");
  lattice->add_option("n", n, "Rank")->required();
  lattice->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  lattice->add_flag("--labels", labels, "Label covers by their bricks");

  auto* weak = app.add_subcommand("weak", "Hasse diagram of the weak order");
  weak->add_option("n", n, "Rank")->required();
  weak->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  auto* cjc = app.add_subcommand("cjc", "Faces of the canonical join complex of tors RA_n");
  cjc->add_option("n", n, "Rank")->required();

  bool complex = false;
  std::string render;
  auto* arcs = app.add_subcommand("arcs", "Arcs, the arc complex, or a gallery of all arc diagrams");
  arcs->add_option("n", n, "Rank")->required();
  arcs->add_flag("--complex", complex, "Print faces of the arc complex");
  arcs->add_option("--render", render, "Write every noncrossing arc diagram to an SVG file");

  std::string perm;
  auto* delta = app.add_subcommand("delta", "Arc diagram of a permutation");
  delta->add_option("perm", perm, "One-line notation, e.g. 210")->required();
  delta->add_option("--render", render, "Write the diagram to an SVG file");

  int class_id = -1;
  auto* phi = app.add_subcommand("phi", "Permutation of a torsion class");
  phi->add_option("n", n, "Rank")->required();
  phi->add_option("--class", class_id, "Class id as numbered by the lattice export")->required();

  auto* verify = app.add_subcommand("verify", "Check tors RA_n against the weak order");
  verify->add_option("n", n, "Rank")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  char* out = nullptr;
  if (*ind) return emit(torslat_indecomposables(n, &out), &out);

  if (*hom) {
    int h = 0, oracle = 0;
    const auto status = torslat_hom(n, from.c_str(), to.c_str(), &h, &oracle);
    if (status != TORSLAT_OK) return report(status);
    std::cout << "{\"hom_dim\":" << h << ",\"oracle\":" << oracle << "}\n";
    return 0;
  }

  if (*lattice) {
    torslat_tors_lattice* t = nullptr;
    if (auto s = torslat_tors_build(n, &t); s != TORSLAT_OK) return report(s);
    const int rc = emit(torslat_tors_export(t, format_of(format), labels ? 1 : 0, &out), &out);
    torslat_tors_free(t);
    return rc;
  }

  if (*weak) {
    torslat_weak_order* w = nullptr;
    if (auto s = torslat_weak_build(n, &w); s != TORSLAT_OK) return report(s);
    const int rc = emit(torslat_weak_export(w, format_of(format), &out), &out);
    torslat_weak_free(w);
    return rc;
  }

  if (*cjc || *phi) {
    torslat_tors_lattice* t = nullptr;
    if (auto s = torslat_tors_build(n, &t); s != TORSLAT_OK) return report(s);
    const int rc = *cjc ? emit(torslat_tors_cjc(t, &out), &out) : emit(torslat_tors_phi(t, class_id, &out), &out);
    torslat_tors_free(t);
    return rc;
  }

  if (*arcs) {
    if (!render.empty()) return write_file(render, torslat_arc_gallery_svg(n, &out), &out);
    if (complex) return emit(torslat_arc_complex(n, &out), &out);
    return emit(torslat_arcs(n, &out), &out);
  }

  if (*delta) {
    if (!render.empty()) return write_file(render, torslat_delta_svg(perm.c_str(), &out), &out);
    return emit(torslat_delta_json(perm.c_str(), &out), &out);
  }

  if (*verify) {
    int ok = 0;
    const auto status = torslat_verify(n, &out, &ok);
    if (status != TORSLAT_OK) return report(status);
    std::cout << out;
    torslat_free_string(out);
    if (!ok) std::cerr << "verification failed\n";
    return ok ? 0 : kFailure;
  }
  return kUsage;
}
