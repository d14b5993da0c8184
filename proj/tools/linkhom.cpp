// linkhom: command-line front end for the link-homotopy toolkit.
//
// Exit codes: 0 ok, 1 domain error (or failed verification), 2 parse error,
// 3 search budget exhausted, 4 internal error.

#include "linkhom/extremal.hpp"
#include "linkhom/io.hpp"
#include "linkhom/nh.hpp"
#include "linkhom/parse.hpp"
#include "linkhom/synthesis.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

using namespace linkhom;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInternal = 4;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string word;
  std::string input;
  int n = 0;
  int max_rank = kDefaultRankCap;
};

/// Word text or a JSON object, read from --word, --input or stdin.
struct Source {
  std::optional<Json> json;
  std::string text;
};

Source read_source(const Options& o) {
  Source s;
  if (!o.word.empty()) {
    s.text = o.word;
  } else if (!o.input.empty()) {
    std::ifstream in(o.input);
    if (!in) throw DomainError("cannot open " + o.input);
    s.text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    s.text.assign(std::istreambuf_iterator<char>(std::cin), {});
  }
  auto b = s.text.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) throw InputError("empty input");
  if (s.text[b] == '{') {
    s.json = Json::parse(s.text);
    if (s.json->contains("word")) s.text = s.json->at("word").get<std::string>();
    else s.text.clear();
  }
  return s;
}

int resolve_n(const Options& o, const Source& s) {
  int n = o.n;
  if (n == 0 && s.json && s.json->contains("n")) n = s.json->at("n").get<int>();
  if (n == 0) throw InputError("number of components not given (use --n or an \"n\" field)");
  if (n < 1 || n > o.max_rank)
    throw DomainError("n = " + std::to_string(n) + " outside 1.." + std::to_string(o.max_rank) + " (raise --max-rank)");
  return n;
}

LongitudeTuple tuple_from(const Source& s, int n) {
  if (!s.text.empty()) return sl_evaluate(parse(s.text, ParseContext::hlink(n)), n);
  if (s.json && s.json->contains("nf")) {
    if (n != 4) throw DomainError("a normal form describes a 4-component element");
    return h4_realize(nf_from_json(s.json->at("nf")));
  }
  throw InputError("input has neither a word nor a normal form");
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

/// "30s", "1.5s", "250ms" are wall-clock; "100000" or "100000n" are node counts; "0" is unlimited.
SearchBudget parse_budget(const std::string& text) {
  SearchBudget b;
  if (text.empty() || text == "0" || text == "unlimited") return b;
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InputError("bad budget: " + text);
  }
  std::string unit = text.substr(used);
  if (v < 0) throw InputError("bad budget: " + text);
  if (unit == "s")
    b.max_seconds = v;
  else if (unit == "ms")
    b.max_seconds = v / 1000;
  else if (unit.empty() || unit == "n")
    b.max_nodes = static_cast<std::int64_t>(v);
  else
    throw InputError("bad budget unit: " + unit);
  return b;
}

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    return std::stoi(v);
  } catch (const std::exception&) {
    throw InputError(std::string("bad value for ") + name);
  }
}

Json nh_result(int n, const BoundReport& r) {
  Json j;
  j["n"] = n;
  j["nh"] = r.exact ? int_to_json(*r.exact) : Json(nullptr);
  if (!r.exact) j["bounds"] = to_json(r);
  return j;
}

GroupExpr example_expr(const std::string& family, int n) {
  std::vector<GroupExpr> xs;
  if (family == "borromean") {
    if (n < 3) throw DomainError("borromean needs n >= 3");
    return h_triple(1, 2, 3);
  }
  if (family == "four-six" && n != 4) throw DomainError("four-six is a 4-component element");
  if (family != "four-six" && family != "quadratic") throw InputError("unknown family: " + family);
  if (n < 4) throw DomainError("quadratic needs n >= 4");
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) xs.push_back(GroupExpr::power(h_triple(i, j, k), 3));
  for (int pass = 0; pass < 2; ++pass)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
          for (int l = k + 1; l <= n; ++l) xs.push_back(pass == 0 ? h_quad(i, j, k, l) : h_quad(i, k, j, l));
  return GroupExpr::product(std::move(xs));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Link homotopy toolkit: reduced free groups, H(n), n_h bounds, move synthesis, extremal search"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--max-rank", o.max_rank, "largest accepted rank / component count")->check(CLI::Range(1, kMaxRank));

  auto word_opts = [&](CLI::App* c) {
    c->add_option("--word,-w", o.word, "word text (otherwise --input or stdin)");
    c->add_option("--input,-i", o.input, "file with a word or a JSON object");
  };

  auto* expand_cmd = app.add_subcommand("expand", "print the reduced expansion of an RF(m) word");
  word_opts(expand_cmd);
  int m = 0;
  expand_cmd->add_option("--m", m, "rank")->required();

  auto* norm_cmd = app.add_subcommand("normalize4", "normal form of an H(4) word");
  word_opts(norm_cmd);

  auto* nh_cmd = app.add_subcommand("nh", "exact n_h, or a bound report when no exact value is known");
  word_opts(nh_cmd);
  nh_cmd->add_option("--n", o.n, "components");

  auto* bounds_cmd = app.add_subcommand("bounds", "n_h bound report");
  word_opts(bounds_cmd);
  bounds_cmd->add_option("--n", o.n, "components");

  auto* syn_cmd = app.add_subcommand("synthesize", "factor an element into crossing or Delta moves");
  word_opts(syn_cmd);
  syn_cmd->add_option("--n", o.n, "components");
  std::string move_kind = "crossing";
  syn_cmd->add_option("--moves", move_kind, "crossing|delta")->check(CLI::IsMember({"crossing", "delta"}));

  auto* verify_cmd = app.add_subcommand("verify", "check a move sequence against its word (JSON input)");
  word_opts(verify_cmd);
  verify_cmd->add_option("--n", o.n, "components");

  auto* phi_cmd = app.add_subcommand("phi", "minimum total weight with every k-subgraph weighing at least w");
  int pn = 0, pk = 4, pw = 3;
  std::string budget_text;
  int threads = 0;
  phi_cmd->add_option("--n", pn, "vertices")->required();
  phi_cmd->add_option("--k", pk, "subgraph size");
  phi_cmd->add_option("--w", pw, "required subgraph weight");
  phi_cmd->add_option("--budget", budget_text, "seconds (30s, 250ms) or nodes (100000); 0 = unlimited");
  phi_cmd->add_option("--threads", threads, "worker count (default LINKHOM_THREADS or 1)");

  auto* wit_cmd = app.add_subcommand("witness", "extremal (4,3) graph");
  int wn = 0;
  bool dot = false;
  wit_cmd->add_option("--n", wn, "vertices")->required();
  wit_cmd->add_flag("--dot", dot, "emit Graphviz DOT instead of JSON");

  auto* ex_cmd = app.add_subcommand("examples", "named example elements");
  std::string family;
  int en = 0;
  ex_cmd->add_option("--family", family, "borromean|four-six|quadratic")
      ->required()
      ->check(CLI::IsMember({"borromean", "four-six", "quadratic"}));
  ex_cmd->add_option("--n", en, "components");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*expand_cmd) {
      if (m < 1 || m > o.max_rank) throw DomainError("rank outside 1.." + std::to_string(o.max_rank));
      Source s = read_source(o);
      std::cout << expand(parse(s.text, ParseContext::rf(m)), m).to_string() << '\n';
    } else if (*norm_cmd) {
      Source s = read_source(o);
      if (s.text.empty()) throw InputError("normalize4 needs a word");
      H4NormalForm nf = h4_normalize(sl_evaluate(parse(s.text, ParseContext::hlink(4)), 4));
      emit(Json{{"n", 4}, {"nf", to_json(nf)}});
    } else if (*nh_cmd) {
      Source s = read_source(o);
      int n = resolve_n(o, s);
      if (s.text.empty() && s.json && s.json->contains("nf") && n == 4) {
        emit(Json{{"n", 4}, {"nh", int_to_json(nh_exact_4(nf_from_json(s.json->at("nf"))))}});
      } else if (s.text.empty() && s.json && s.json->contains("mu")) {
        if (n > 3) throw DomainError("Milnor input is supported for n <= 3");
        MilnorVector v;
        v.n = n;
        for (auto it = s.json->at("mu").begin(); it != s.json->at("mu").end(); ++it) {
          std::vector<int> idx;
          std::istringstream is(it.key());
          for (std::string part; std::getline(is, part, ',');) idx.push_back(std::stoi(part));
          for (int i : idx)
            if (i < 1 || i > n) throw DomainError("Milnor index out of range: " + it.key());
          v.mu[idx] = int_from_json(it.value());
        }
        Int value = n == 3 ? nh_exact_3(v) : (n == 2 ? Int(boost::multiprecision::abs(v.get({1, 2}))) : Int(0));
        emit(Json{{"n", n}, {"nh", int_to_json(value)}});
      } else {
        emit(nh_result(n, nh_bounds(tuple_from(s, n))));
      }
    } else if (*bounds_cmd) {
      Source s = read_source(o);
      int n = resolve_n(o, s);
      Json j = to_json(nh_bounds(tuple_from(s, n)));
      j["n"] = n;
      emit(j);
    } else if (*syn_cmd) {
      Source s = read_source(o);
      int n = resolve_n(o, s);
      LongitudeTuple t = tuple_from(s, n);
      MoveSequence seq = move_kind == "delta" ? synthesize_delta(t) : synthesize_crossings(t);
      bool ok = verify_moves(t, seq);
      Json j;
      j["n"] = n;
      if (!s.text.empty()) j["word"] = s.text;
      j["kind"] = move_kind;
      j["length"] = seq.moves.size();
      j["moves"] = to_json(seq);
      j["verified"] = ok;
      emit(j);
      if (!ok) throw InternalError("synthesized sequence failed verification");
    } else if (*verify_cmd) {
      Source s = read_source(o);
      if (!s.json || !s.json->contains("moves")) throw InputError("verify needs a JSON object with \"moves\"");
      int n = resolve_n(o, s);
      LongitudeTuple t = tuple_from(s, n);
      bool ok = verify_moves(t, moves_from_json(s.json->at("moves"), n));
      emit(Json{{"n", n}, {"verified", ok}});
      return ok ? 0 : kExitDomain;
    } else if (*phi_cmd) {
      if (budget_text.empty()) {
        const char* env = std::getenv("LINKHOM_BUDGET_DEFAULT");
        budget_text = env && *env ? env : "600s";
      }
      SearchBudget budget = parse_budget(budget_text);
      if (threads <= 0) threads = env_int("LINKHOM_THREADS", 1);
      SearchResult r = phi_exact(pn, pk, pw, budget, std::max(1, threads));
      Json j;
      j["n"] = pn;
      j["k"] = pk;
      j["w"] = pw;
      j["value"] = r.value;
      j["lower_bound"] = r.lower_bound;
      j["status"] = r.status == SearchStatus::ProvenOptimal ? "proven_optimal" : "budget_exhausted";
      j["nodes"] = r.nodes;
      j["witness"] = to_json(r.witness);
      emit(j);
      if (r.status == SearchStatus::BudgetExhausted) return kExitBudget;
    } else if (*wit_cmd) {
      WeightedGraph g = phi4_witness(wn);
      if (dot) {
        std::cout << to_dot(g);
      } else {
        Json j = to_json(g);
        j["total_weight"] = total_weight(g);
        emit(j);
      }
    } else if (*ex_cmd) {
      int n = en != 0 ? en : (family == "borromean" ? 3 : (family == "four-six" ? 4 : 5));
      if (n > o.max_rank) throw DomainError("n above --max-rank");
      GroupExpr e = example_expr(family, n);
      Json j;
      j["family"] = family;
      j["n"] = n;
      j["word"] = print(e, ParseContext::hlink(n));
      if (n == 4) j["nf"] = to_json(h4_normalize(sl_evaluate(e, 4)));
      emit(j);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitParse;
  } catch (const Json::exception& e) {
    std::cerr << "JSON error: " << e.what() << '\n';
    return kExitParse;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return 0;
}
