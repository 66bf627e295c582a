// Command-line surface for the free-group splitting toolkit: word
// arithmetic, Whitehead graphs, i-length bounds, the Nielsen engine, index
// changes, and the lattice construction.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "esgraph/es_graph.hpp"
#include "esgraph/ilength.hpp"
#include "esgraph/nielsen.hpp"
#include "esgraph/oracles.hpp"
#include "esgraph/quasiflat.hpp"
#include "esgraph/whitehead.hpp"
#include "esgraph/word.hpp"

namespace {

using esgraph::CrConfig;
using esgraph::Rank;
using esgraph::Word;
using nlohmann::ordered_json;

esgraph::LatticePoint parse_point(const std::string& text) {
  esgraph::LatticePoint out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    out.push_back(std::stol(text.substr(pos, next - pos)));
    pos = next + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty lattice point");
  return out;
}

CrConfig config_from_env() {
  CrConfig cfg;
  if (const char* env = std::getenv("ILENGTH_BUDGET")) {
    cfg.upper_insert_budget = std::stol(env);
  }
  return cfg;
}

ordered_json bound_json(const esgraph::CrBound& b) {
  ordered_json j;
  j["lower"] = b.lower;
  j["upper"] = b.upper;
  j["lower_certified"] = b.lower_certified;
  if (b.upper_witness) {
    auto factors = ordered_json::array();
    for (const auto& f : b.upper_witness->factors) {
      factors.push_back({{"base", to_text(f.base)}, {"conjugator", to_text(f.conjugator)}});
    }
    j["witness"] = {{"factors", factors}, {"associated", b.upper_witness->associated}};
  }
  if (b.family_witness) {
    auto pairs = ordered_json::array();
    for (const auto& p : b.family_witness->pairs) {
      pairs.push_back({p.first_begin, p.first_end, p.second_begin, p.second_end});
    }
    j["family"] = pairs;
  }
  return j;
}

struct Options {
  int rank = 3;
  int index = 0;
  bool json = false;
};

int run(int argc, char** argv) {
  CLI::App app{"computations with words, bases and splittings of free groups"};
  app.require_subcommand(1);
  CrConfig cfg = config_from_env();

  // ---- reduce ----
  auto* reduce = app.add_subcommand("reduce", "freely reduce a word");
  Options ropt;
  std::string rtext;
  bool rcyclic = false;
  reduce->add_option("--rank", ropt.rank, "rank of the free group")->required();
  reduce->add_flag("--cyclic", rcyclic, "also print the cyclic reduction");
  reduce->add_option("word", rtext, "word to reduce")->required();
  reduce->callback([&] {
    Word w = esgraph::parse_word(rtext, Rank(ropt.rank));
    std::cout << to_text(w) << "\n";
    if (rcyclic) {
      auto cr = esgraph::cyclic_reduce(w);
      std::cout << "core: " << to_text(cr.core) << "\nconjugator: " << to_text(cr.conjugator)
                << "\n";
    }
  });

  // ---- whitehead ----
  auto* wh = app.add_subcommand("whitehead", "build a Whitehead graph");
  Options wopt;
  bool waug = false, wdot = false;
  int wexclude = 0;
  std::vector<std::string> wwords;
  wh->add_option("--rank", wopt.rank, "rank of the free group")->required();
  wh->add_flag("--augmented", waug, "add the wraparound edge per word");
  wh->add_option("--exclude", wexclude, "omit this generator's vertices");
  wh->add_flag("--dot", wdot, "emit DOT text");
  wh->add_flag("--json", wopt.json, "emit JSON");
  wh->add_option("words", wwords, "input words")->required();
  wh->callback([&] {
    Rank rank(wopt.rank);
    std::vector<Word> words;
    for (const auto& t : wwords) words.push_back(esgraph::parse_word(t, rank));
    std::optional<int> excl;
    if (wexclude > 0) excl = wexclude;
    auto g = esgraph::build_whitehead(words, rank, excl, waug);
    if (wdot) {
      std::cout << esgraph::to_dot(g);
    } else if (wopt.json) {
      std::cout << esgraph::to_json(g) << "\n";
    } else {
      for (const auto& [a, b] : g.edges) {
        std::cout << esgraph::vertex_name(a) << " -- " << esgraph::vertex_name(b) << "\n";
      }
      std::cout << "cut_vertex: " << (esgraph::has_cut_vertex(g) ? "true" : "false") << "\n";
    }
  });

  // ---- ilength ----
  auto* il = app.add_subcommand("ilength", "i-length computations");
  il->require_subcommand(1);
  Options iopt;
  std::vector<std::string> itexts;

  auto* isimple = il->add_subcommand("simple", "exact simple i-length");
  isimple->add_option("--rank", iopt.rank)->required();
  isimple->add_option("--index", iopt.index)->required();
  isimple->add_flag("--json", iopt.json);
  isimple->add_option("word", itexts)->required();
  isimple->callback([&] {
    Word w = esgraph::parse_word(itexts.at(0), Rank(iopt.rank));
    auto res = esgraph::simple_ilength(w, iopt.index);
    if (iopt.json) {
      ordered_json j;
      j["value"] = res.value;
      auto pieces = ordered_json::array();
      for (const Word& p : res.pieces) pieces.push_back(to_text(p));
      j["pieces"] = pieces;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << res.value << "\n";
    }
  });

  auto* icr = il->add_subcommand("cr", "conjugate-reduced i-length interval");
  icr->add_option("--rank", iopt.rank)->required();
  icr->add_option("--index", iopt.index)->required();
  icr->add_option("word", itexts)->required();
  icr->callback([&] {
    Word w = esgraph::parse_word(itexts.at(0), Rank(iopt.rank));
    std::cout << bound_json(esgraph::cr_bounds(w, iopt.index, cfg)).dump() << "\n";
  });

  auto* ifull = il->add_subcommand("full", "full i-length interval of a word set");
  ifull->add_option("--rank", iopt.rank)->required();
  ifull->add_option("--index", iopt.index)->required();
  ifull->add_option("words", itexts)->required();
  ifull->callback([&] {
    Rank rank(iopt.rank);
    std::vector<Word> ys;
    for (const auto& t : itexts) ys.push_back(esgraph::parse_word(t, rank));
    auto full = esgraph::full_ilength(ys, iopt.index, cfg);
    ordered_json j = bound_json(full.bound);
    j["wL"] = to_text(full.alignment.wL);
    j["wR"] = to_text(full.alignment.wR);
    j["wC"] = to_text(full.alignment.wC);
    j["alpha_image"] = to_text(full.alignment.alpha_image);
    j["tail"] = to_text(full.tail);
    std::cout << j.dump() << "\n";
  });

  // ---- nielsen ----
  auto* ni = app.add_subcommand("nielsen", "Nielsen transformation engine");
  ni->require_subcommand(1);
  Options nopt;
  std::vector<std::string> ntexts;
  int nsteps = 0;
  std::uint64_t nseed = 0;
  bool nseed_set = false;

  auto* nreduce = ni->add_subcommand("reduce", "Nielsen-reduce a tuple");
  nreduce->add_option("--rank", nopt.rank)->required();
  nreduce->add_option("words", ntexts)->required();
  nreduce->callback([&] {
    Rank rank(nopt.rank);
    esgraph::BasisTuple t{rank.n, {}};
    for (const auto& s : ntexts) t.entries.push_back(esgraph::parse_word(s, rank));
    auto res = esgraph::nielsen_reduce(t);
    for (const Word& w : res.reduced.entries) std::cout << to_text(w) << "\n";
    std::cout << "moves: " << esgraph::format_moves(res.moves) << "\n";
  });

  auto* nbasis = ni->add_subcommand("is-basis", "test whether a tuple is a basis");
  nbasis->add_option("--rank", nopt.rank)->required();
  nbasis->add_option("words", ntexts)->required();
  nbasis->callback([&] {
    Rank rank(nopt.rank);
    esgraph::BasisTuple t{rank.n, {}};
    for (const auto& s : ntexts) t.entries.push_back(esgraph::parse_word(s, rank));
    std::cout << (esgraph::is_basis(t) ? "true" : "false") << "\n";
  });

  auto* nrandom = ni->add_subcommand("random", "random basis walk");
  nrandom->add_option("--rank", nopt.rank)->required();
  nrandom->add_option("--steps", nsteps)->required();
  nrandom->add_option("--seed", nseed)->required()->each([&](const std::string&) {
    nseed_set = true;
  });
  nrandom->callback([&] {
    auto [tuple, moves] = esgraph::random_basis(Rank(nopt.rank), nsteps, nseed);
    for (const Word& w : tuple.entries) std::cout << to_text(w) << "\n";
    std::cout << "moves: " << esgraph::format_moves(moves) << "\n";
  });

  // ---- es ----
  auto* es = app.add_subcommand("es", "edge-splitting computations");
  es->require_subcommand(1);
  Options eopt;
  std::string emoves;
  std::vector<std::string> ewords;

  auto* echanges = es->add_subcommand("index-changes", "minimal index changes");
  echanges->add_option("--rank", eopt.rank)->required();
  echanges->add_option("moves", emoves, "semicolon-separated move list")->required();
  echanges->callback([&] {
    auto m = esgraph::parse_moves(emoves, Rank(eopt.rank));
    auto res = esgraph::min_index_changes(m);
    ordered_json j;
    j["index_changes"] = res.k;
    // Geodesic window: a geodesic of length k needs between k-4 and k
    // changes, so the distance realized by this decomposition lies in
    // [max(0, k-4)... k] up to that slack.
    j["distance_window"] = {std::max(0, res.k - 4), res.k};
    auto blocks = ordered_json::array();
    for (const auto& b : res.decomposition.blocks) {
      esgraph::TransformationWord bw{eopt.rank, b.moves};
      blocks.push_back({{"side", esgraph::side_to_string(b.side)},
                        {"moves", esgraph::format_moves(bw)}});
    }
    j["blocks"] = blocks;
    std::cout << j.dump() << "\n";
  });

  auto* elower = es->add_subcommand("lower-bound", "distance lower bound from i-length");
  elower->add_option("--rank", eopt.rank)->required();
  elower->add_option("--index", eopt.index)->required();
  elower->add_option("words", ewords, "basis entries")->required();
  elower->callback([&] {
    Rank rank(eopt.rank);
    esgraph::BasisTuple t{rank.n, {}};
    for (const auto& s : ewords) t.entries.push_back(esgraph::parse_word(s, rank));
    auto res = esgraph::distance_lower_bound(t, eopt.index, cfg);
    ordered_json j;
    j["ilength_lower"] = res.ilength_lower;
    j["lower_certified"] = res.certified;
    j["distance_lower"] = res.bound;
    std::cout << j.dump() << "\n";
  });

  // ---- flat ----
  auto* flat = app.add_subcommand("flat", "lattice (quasiflat) constructions");
  flat->require_subcommand(1);
  Options fopt;
  std::string ffrom, fto, fpoint;

  auto* fpsi = flat->add_subcommand("psi", "lattice point to vertex");
  fpsi->add_option("--rank", fopt.rank)->required();
  fpsi->add_option("--point", fpoint)->required();
  fpsi->callback([&] {
    auto v = esgraph::psi(parse_point(fpoint), Rank(fopt.rank));
    for (const Word& w : v.tuple.entries) std::cout << to_text(w) << "\n";
    std::cout << "side: " << esgraph::side_to_string(v.side) << "\n";
  });

  auto* fomega = flat->add_subcommand("omega", "difference word");
  fomega->add_option("--rank", fopt.rank)->required();
  fomega->add_option("--from", ffrom)->required();
  fomega->add_option("--to", fto)->required();
  fomega->callback([&] {
    std::cout << to_text(esgraph::omega(parse_point(ffrom), parse_point(fto), Rank(fopt.rank)))
              << "\n";
  });

  auto* flower = flat->add_subcommand("lower", "certified lower bounds");
  flower->add_option("--rank", fopt.rank)->required();
  flower->add_option("--from", ffrom)->required();
  flower->add_option("--to", fto)->required();
  flower->callback([&] {
    auto res =
        esgraph::flat_lower_bound(parse_point(ffrom), parse_point(fto), Rank(fopt.rank), cfg);
    ordered_json j;
    j["d"] = res.d;
    j["ilength_lower"] = res.ilength_lower;
    j["lower_certified"] = res.certified;
    j["distance_lower"] = res.distance_lower;
    std::cout << j.dump() << "\n";
  });

  auto* fupper = flat->add_subcommand("upper-path", "witnessed upper path");
  fupper->add_option("--rank", fopt.rank)->required();
  fupper->add_option("--from", ffrom)->required();
  fupper->add_option("--to", fto)->required();
  fupper->callback([&] {
    auto path =
        esgraph::flat_upper_path(parse_point(ffrom), parse_point(fto), Rank(fopt.rank));
    std::cout << esgraph::to_json(path) << "\n";
  });

  auto* freport = flat->add_subcommand("report", "full lattice report");
  freport->add_option("--rank", fopt.rank)->required();
  freport->add_option("--from", ffrom)->required();
  freport->add_option("--to", fto)->required();
  freport->callback([&] {
    std::cout << esgraph::flat_report(parse_point(ffrom), parse_point(fto), Rank(fopt.rank), cfg)
              << "\n";
  });

  // ---- hidden oracle surface ----
  auto* oracle = app.add_subcommand("oracle", "brute-force reference computations");
  oracle->group("");  // hidden from help
  oracle->require_subcommand(1);
  Options oopt;
  std::vector<std::string> otexts;
  std::string omoves;

  auto* osimple = oracle->add_subcommand("simple", "partition enumeration");
  osimple->add_option("--rank", oopt.rank)->required();
  osimple->add_option("--index", oopt.index)->required();
  osimple->add_option("word", otexts)->required();
  osimple->callback([&] {
    Word w = esgraph::parse_word(otexts.at(0), Rank(oopt.rank));
    std::cout << esgraph::brute_simple(w, oopt.index) << "\n";
  });

  auto* ocr = oracle->add_subcommand("cr", "budget-bounded decomposition search");
  ocr->add_option("--rank", oopt.rank)->required();
  ocr->add_option("--index", oopt.index)->required();
  ocr->add_option("word", otexts)->required();
  ocr->callback([&] {
    Word w = esgraph::parse_word(otexts.at(0), Rank(oopt.rank));
    std::cout << esgraph::cr_oracle(w, oopt.index, cfg) << "\n";
  });

  auto* ofam = oracle->add_subcommand("families", "nested family enumeration");
  ofam->add_option("--rank", oopt.rank)->required();
  ofam->add_option("--index", oopt.index)->required();
  ofam->add_option("word", otexts)->required();
  ofam->callback([&] {
    Word w = esgraph::parse_word(otexts.at(0), Rank(oopt.rank));
    auto res = esgraph::brute_families(w, oopt.index);
    std::cout << res.value << " (raw/10 " << res.raw_times_10 << ")\n";
  });

  auto* ochanges = oracle->add_subcommand("index-changes", "block enumeration");
  ochanges->add_option("--rank", oopt.rank)->required();
  ochanges->add_option("moves", omoves)->required();
  ochanges->callback([&] {
    auto m = esgraph::parse_moves(omoves, Rank(oopt.rank));
    std::cout << esgraph::brute_index_changes(m) << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
