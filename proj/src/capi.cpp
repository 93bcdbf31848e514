#include "torslat/torslat.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <sstream>
#include <string>

#include "json.hpp"

#include "torslat/arc.hpp"
#include "torslat/error.hpp"
#include "torslat/iso.hpp"
#include "torslat/torsion.hpp"
#include "torslat/weak_order.hpp"

struct torslat_tors_lattice {
  torslat::TorsLattice tors;
};

struct torslat_weak_order {
  torslat::WeakOrder weak;
};

namespace {

thread_local std::string last_error;

torslat_status status_of(torslat::ErrorCode code) {
  using torslat::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return TORSLAT_INVALID_ARGUMENT;
    case ErrorCode::InvalidRank: return TORSLAT_INVALID_RANK;
    case ErrorCode::RankMismatch: return TORSLAT_RANK_MISMATCH;
    case ErrorCode::RankTooLarge: return TORSLAT_RANK_TOO_LARGE;
    case ErrorCode::OutOfSupport: return TORSLAT_OUT_OF_SUPPORT;
    case ErrorCode::OverlappingSupports: return TORSLAT_OVERLAPPING_SUPPORTS;
    case ErrorCode::CycleDetected: return TORSLAT_CYCLE_DETECTED;
    case ErrorCode::NotALattice: return TORSLAT_NOT_A_LATTICE;
    case ErrorCode::NonHasseEdge: return TORSLAT_NON_HASSE_EDGE;
    case ErrorCode::MissingCJR: return TORSLAT_MISSING_CJR;
    case ErrorCode::SameArc: return TORSLAT_SAME_ARC;
    case ErrorCode::NotOverlapping: return TORSLAT_NOT_OVERLAPPING;
    case ErrorCode::NotInImage: return TORSLAT_NOT_IN_IMAGE;
    case ErrorCode::BudgetExceeded: return TORSLAT_BUDGET_EXCEEDED;
    case ErrorCode::Internal: return TORSLAT_INTERNAL;
  }
  return TORSLAT_INTERNAL;
}

template <class F>
torslat_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return TORSLAT_OK;
  } catch (const torslat::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return TORSLAT_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void need(const void* p, const char* what) {
  if (!p) throw torslat::Error(torslat::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

std::string faces_text(const std::vector<std::vector<int>>& faces) {
  std::string out;
  for (const auto& f : faces) out += nlohmann::json(f).dump() + "\n";
  return out;
}

std::string weak_json(const torslat::WeakOrder& weak) {
  nlohmann::ordered_json j;
  j["n"] = weak.n;
  j["elements"] = nlohmann::json::array();
  for (const auto& w : weak.perms) j["elements"].push_back(w.word);
  j["covers"] = nlohmann::json::array();
  for (const auto& [lo, hi] : weak.lattice.covers()) j["covers"].push_back({lo, hi});
  return j.dump();
}

}  // namespace

extern "C" {

const char* torslat_last_error(void) { return last_error.c_str(); }

const char* torslat_status_name(torslat_status status) {
  if (status == TORSLAT_OK) return "Ok";
  if (status < TORSLAT_OK || status > TORSLAT_INTERNAL) return "Unknown";
  return torslat::to_string(static_cast<torslat::ErrorCode>(status - 1));
}

size_t torslat_budget(void) {
  if (const char* env = std::getenv("TORSLAT_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<size_t>(v);
  }
  return torslat::kDefaultElementBudget;
}

void torslat_free_string(char* s) { std::free(s); }

torslat_status torslat_indecomposables(int n, char** out) {
  return guarded([&] {
    need(out, "out");
    std::string text;
    for (const auto& m : torslat::enumerate_indecomposables(n)) text += torslat::to_json(m) + "\n";
    *out = dup(text);
  });
}

torslat_status torslat_hom(int n, const char* from, const char* to, int* hom, int* oracle) {
  return guarded([&] {
    need(from, "from");
    need(to, "to");
    need(hom, "hom");
    const auto m = torslat::parse_module(n, from);
    const auto m2 = torslat::parse_module(n, to);
    *hom = torslat::hom_dim(m, m2);
    if (oracle) *oracle = torslat::hom_dim_oracle(m, m2);
  });
}

torslat_status torslat_tors_build(int n, torslat_tors_lattice** out) {
  return guarded([&] {
    need(out, "out");
    *out = new torslat_tors_lattice{torslat::build_tors_lattice(n, torslat_budget())};
  });
}

void torslat_tors_free(torslat_tors_lattice* tors) { delete tors; }

size_t torslat_tors_size(const torslat_tors_lattice* tors) { return tors ? tors->tors.classes.size() : 0; }

torslat_status torslat_tors_export(const torslat_tors_lattice* tors, torslat_format format, int with_labels,
                                   char** out) {
  return guarded([&] {
    need(tors, "lattice");
    need(out, "out");
    if (format == TORSLAT_FORMAT_DOT)
      *out = dup(torslat::to_dot(tors->tors, with_labels != 0));
    else
      *out = dup(torslat::to_json(tors->tors, with_labels != 0) + "\n");
  });
}

torslat_status torslat_tors_cjc(const torslat_tors_lattice* tors, char** out) {
  return guarded([&] {
    need(tors, "lattice");
    need(out, "out");
    *out = dup(faces_text(torslat::canonical_join_complex(tors->tors.lattice)));
  });
}

torslat_status torslat_tors_phi(const torslat_tors_lattice* tors, int class_id, char** out) {
  return guarded([&] {
    need(tors, "lattice");
    need(out, "out");
    if (class_id < 0 || static_cast<size_t>(class_id) >= tors->tors.classes.size())
      throw torslat::Error(torslat::ErrorCode::InvalidArgument, "no class with id " + std::to_string(class_id));
    const auto& t = tors->tors;
    *out = dup(torslat::to_json(torslat::phi(t.catalog, t.classes[static_cast<size_t>(class_id)])) + "\n");
  });
}

torslat_status torslat_weak_build(int n, torslat_weak_order** out) {
  return guarded([&] {
    need(out, "out");
    *out = new torslat_weak_order{torslat::build_weak_order(n, torslat_budget())};
  });
}

void torslat_weak_free(torslat_weak_order* weak) { delete weak; }

size_t torslat_weak_size(const torslat_weak_order* weak) { return weak ? weak->weak.perms.size() : 0; }

torslat_status torslat_weak_export(const torslat_weak_order* weak, torslat_format format, char** out) {
  return guarded([&] {
    need(weak, "weak order");
    need(out, "out");
    if (format == TORSLAT_FORMAT_DOT)
      *out = dup(torslat::to_dot(weak->weak.lattice, false));
    else
      *out = dup(weak_json(weak->weak) + "\n");
  });
}

torslat_status torslat_arcs(int n, char** out) {
  return guarded([&] {
    need(out, "out");
    std::string text;
    for (const auto& a : torslat::enumerate_arcs(n)) text += torslat::to_json(a) + "\n";
    *out = dup(text);
  });
}

torslat_status torslat_arc_complex(int n, char** out) {
  return guarded([&] {
    need(out, "out");
    *out = dup(faces_text(torslat::arc_complex(n, torslat::kDefaultFaceBudget)));
  });
}

torslat_status torslat_arc_gallery_svg(int n, char** out) {
  return guarded([&] {
    need(out, "out");
    const auto arcs = torslat::enumerate_arcs(n);
    std::vector<torslat::ArcDiagram> diagrams;
    for (const auto& face : torslat::arc_complex(n, torslat::kDefaultFaceBudget)) {
      torslat::ArcDiagram d{n, {}};
      for (int i : face) d.arcs.push_back(arcs[static_cast<size_t>(i)]);
      diagrams.push_back(std::move(d));
    }
    *out = dup(torslat::render_svg_gallery(diagrams));
  });
}

torslat_status torslat_delta_json(const char* perm, char** out) {
  return guarded([&] {
    need(perm, "permutation");
    need(out, "out");
    *out = dup(torslat::to_json(torslat::delta(torslat::Permutation::parse(perm))) + "\n");
  });
}

torslat_status torslat_delta_svg(const char* perm, char** out) {
  return guarded([&] {
    need(perm, "permutation");
    need(out, "out");
    *out = dup(torslat::render_svg(torslat::delta(torslat::Permutation::parse(perm))));
  });
}

torslat_status torslat_verify(int n, char** out, int* ok) {
  return guarded([&] {
    need(out, "out");
    if (n < 1 || n > 5) throw torslat::Error(torslat::ErrorCode::InvalidRank, "verify supports 1 <= n <= 5");
    const auto report = torslat::verify_isomorphism(n, torslat_budget());
    *out = dup(torslat::to_json(report) + "\n");
    if (ok) *ok = report.ok() ? 1 : 0;
  });
}

}  // extern "C"
