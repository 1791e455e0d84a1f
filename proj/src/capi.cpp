#define FFL_BUILDING_LIBRARY
#include "fiberfull/fiberfull.h"

#include <cstring>
#include <sstream>

#include "fiberfull/error.hpp"
#include "fiberfull/ext.hpp"
#include "fiberfull/program.hpp"

struct ffl_ring {
  ffl::RingPtr ring;
};
struct ffl_ideal {
  ffl::Ideal ideal;
};
struct ffl_report {
  ffl::Report report;
  std::string json;
};

namespace {

thread_local std::string g_last_error;

template <class F>
ffl_status guarded(F&& f) {
  g_last_error.clear();
  try {
    f();
    return FFL_OK;
  } catch (const ffl::InputError& e) {
    g_last_error = e.what();
    return FFL_INPUT_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FFL_INTERNAL_ERROR;
  } catch (...) {
    g_last_error = "unknown error";
    return FFL_INTERNAL_ERROR;
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void need(const void* p, const char* what) {
  if (!p) ffl::fail_input(std::string("null ") + what);
}

}  // namespace

extern "C" {

const char* ffl_version(void) {
  static const std::string v = ffl::version_string();
  return v.c_str();
}

const char* ffl_last_error(void) { return g_last_error.c_str(); }

void ffl_string_free(char* s) { std::free(s); }

ffl_status ffl_ring_create(const char* const* vars, size_t nvars, const long* degrees, const char* order,
                           const char* field, ffl_ring** out) {
  return guarded([&] {
    need(out, "output pointer");
    need(vars, "variable list");
    ffl::RingDecl decl;
    decl.name = "R";
    for (size_t i = 0; i < nvars; ++i) {
      need(vars[i], "variable name");
      decl.vars.push_back(vars[i]);
    }
    if (degrees) decl.degrees.assign(degrees, degrees + nvars);
    if (order) {
      // Borrow the program parser for the order grammar.
      std::string text = "ring R = Q[";
      for (size_t i = 0; i < nvars; ++i) text += (i ? "," : "") + decl.vars[i];
      text += "]; order = " + std::string(order) + ";";
      decl.order = ffl::parse_program(text).rings.at(0).order;
    }
    std::optional<std::string> f;
    if (field) f = field;
    auto R = ffl::build_ring(decl, f);
    *out = new ffl_ring{R};
  });
}

void ffl_ring_free(ffl_ring* ring) { delete ring; }

size_t ffl_ring_nvars(const ffl_ring* ring) { return ring ? ring->ring->nvars() : 0; }

ffl_status ffl_ideal_create(const ffl_ring* ring, const char* const* generators, size_t ngens, ffl_ideal** out) {
  return guarded([&] {
    need(ring, "ring");
    need(out, "output pointer");
    std::vector<std::string> gens;
    for (size_t i = 0; i < ngens; ++i) {
      need(generators[i], "generator");
      gens.push_back(generators[i]);
    }
    *out = new ffl_ideal{ffl::Ideal::parse(ring->ring, gens)};
  });
}

void ffl_ideal_free(ffl_ideal* ideal) { delete ideal; }

size_t ffl_ideal_ngens(const ffl_ideal* ideal) { return ideal ? ideal->ideal.generators().size() : 0; }

ffl_status ffl_ideal_generator(const ffl_ideal* ideal, size_t k, char** out) {
  return guarded([&] {
    need(ideal, "ideal");
    need(out, "output pointer");
    if (k >= ideal->ideal.generators().size()) ffl::fail_input("generator index out of range");
    *out = dup(ffl::to_string(ideal->ideal.generators()[k]));
  });
}

ffl_status ffl_groebner(const ffl_ideal* ideal, ffl_ideal** out) {
  return guarded([&] {
    need(ideal, "ideal");
    need(out, "output pointer");
    *out = new ffl_ideal{ffl::buchberger(ideal->ideal).ideal()};
  });
}

ffl_status ffl_initial_ideal(const ffl_ideal* ideal, ffl_ideal** out) {
  return guarded([&] {
    need(ideal, "ideal");
    need(out, "output pointer");
    *out = new ffl_ideal{ffl::initial_ideal(ideal->ideal, ideal->ideal.ring()->order())};
  });
}

ffl_status ffl_betti(const ffl_ideal* ideal, size_t i, long j, long* out) {
  return guarded([&] {
    need(ideal, "ideal");
    need(out, "output pointer");
    if (ideal->ideal.ring()->grading_rank() != 1) ffl::fail_input("rank-one grading required");
    *out = ffl::betti_table(ideal->ideal).at(i, ffl::Degree{j});
  });
}

ffl_status ffl_local_cohomology(const ffl_ideal* ideal, size_t i, long jlo, long jhi, long* out) {
  return guarded([&] {
    need(ideal, "ideal");
    need(out, "output pointer");
    if (jlo > jhi) ffl::fail_input("empty degree window");
    auto dims = ffl::local_cohomology_dims(ideal->ideal, i, ffl::GradedDims::range(jlo, jhi));
    for (long j = jlo; j <= jhi; ++j) out[j - jlo] = dims.at(j);
  });
}

ffl_status ffl_run(const char* source, const char* command, ffl_report** out) {
  ffl_status st = guarded([&] {
    need(source, "source");
    need(out, "output pointer");
    std::vector<std::string> words;
    if (command) {
      std::istringstream ss(command);
      for (std::string w; ss >> w;) words.push_back(w);
    }
    ffl::Report r = ffl::run_source(source, words);
    *out = new ffl_report{r, r.json.dump(2)};
  });
  if (st != FFL_OK) return st;
  int code = (*out)->report.exit_code;
  if (code != 0) g_last_error = (*out)->report.text;
  return static_cast<ffl_status>(code);
}

int ffl_report_exit_code(const ffl_report* report) { return report ? report->report.exit_code : FFL_INPUT_ERROR; }
const char* ffl_report_text(const ffl_report* report) { return report ? report->report.text.c_str() : ""; }
const char* ffl_report_json(const ffl_report* report) { return report ? report->json.c_str() : ""; }
void ffl_report_free(ffl_report* report) { delete report; }

}  // extern "C"
