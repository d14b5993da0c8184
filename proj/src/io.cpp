#include "linkhom/io.hpp"

#include "linkhom/parse.hpp"

#include <limits>
#include <sstream>

namespace linkhom {

Json int_to_json(const Int& a) {
  if (a >= std::numeric_limits<std::int64_t>::min() && a <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(a));
  return Json(a.str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t p = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (p == s.size() || s.find_first_not_of("0123456789", p) != std::string::npos)
      throw DomainError("not an integer: " + s);
    return Int(s);
  }
  throw DomainError("expected an integer, got " + j.dump());
}

Json to_json(const H4NormalForm& nf) {
  Json j = Json::object();
  for (int i = 0; i < H4NormalForm::kSize; ++i) j[H4NormalForm::labels()[i]] = int_to_json(nf[i]);
  return j;
}

H4NormalForm nf_from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("normal form must be a JSON object");
  H4NormalForm nf;
  for (auto it = j.begin(); it != j.end(); ++it) nf.at(it.key()) = int_from_json(it.value());
  return nf;
}

Json to_json(const MilnorVector& v) {
  Json mu = Json::object();
  for (const auto& [idx, val] : v.mu) {
    std::string key;
    for (int i : idx) key += (key.empty() ? "" : ",") + std::to_string(i);
    mu[key] = int_to_json(val);
  }
  return Json{{"n", v.n}, {"mu", mu}};
}

Json to_json(const BoundReport& r) {
  Json j;
  j["lower"] = int_to_json(r.lower);
  j["upper"] = r.upper ? int_to_json(*r.upper) : Json("infinity");
  j["exact"] = r.exact ? int_to_json(*r.exact) : Json(nullptr);
  j["notes"] = r.notes;
  return j;
}

Json to_json(const HWord& w) { return Json(w.to_string()); }

HWord hword_from_json(const Json& j, int n) {
  const std::string s = j.get<std::string>();
  HWord w;
  if (s.find_first_not_of(" \t") == std::string::npos) return w;
  GroupExpr e = parse(s, ParseContext::hlink(n));
  auto add = [&](const GroupExpr& g) {
    if (g.kind != GroupExpr::Kind::GenPower) throw DomainError("conjugator must be a plain product of generator powers");
    w = w * HWord::gen(g.gen.i, g.gen.j, g.exponent);
  };
  if (e.kind == GroupExpr::Kind::Product)
    for (const auto& c : e.children) add(c);
  else
    add(e);
  return w;
}

Json to_json(const MoveSequence& seq) {
  Json list = Json::array();
  for (const auto& m : seq.moves) {
    Json j;
    if (m.kind == MoveKind::Crossing) {
      j["kind"] = "crossing";
      j["pair"] = {m.i, m.j};
    } else {
      j["kind"] = "delta";
      j["triple"] = {m.i, m.j, m.k};
      j["inner_sign"] = m.inner_sign;
      j["inner"] = to_json(m.inner);
    }
    j["sign"] = m.sign;
    j["conjugator"] = to_json(m.conj);
    list.push_back(j);
  }
  return list;
}

MoveSequence moves_from_json(const Json& j, int n) {
  if (!j.is_array()) throw DomainError("moves must be a JSON array");
  MoveSequence seq;
  seq.n = n;
  auto check_sign = [](int s) {
    if (s != 1 && s != -1) throw DomainError("move signs must be +1 or -1");
    return s;
  };
  for (const auto& x : j) {
    Move m;
    const std::string kind = x.at("kind").get<std::string>();
    if (kind == "crossing") {
      m.kind = MoveKind::Crossing;
      m.i = x.at("pair").at(0).get<int>();
      m.j = x.at("pair").at(1).get<int>();
      if (m.i < 1 || m.j <= m.i || m.j > n) throw DomainError("crossing pair out of range");
    } else if (kind == "delta") {
      m.kind = MoveKind::Delta;
      m.i = x.at("triple").at(0).get<int>();
      m.j = x.at("triple").at(1).get<int>();
      m.k = x.at("triple").at(2).get<int>();
      if (m.i < 1 || m.j < 1 || m.k > n || m.i >= m.k || m.j >= m.k || m.i == m.j)
        throw DomainError("delta triple out of range");
      m.inner_sign = check_sign(x.value("inner_sign", 1));
      if (x.contains("inner")) m.inner = hword_from_json(x.at("inner"), n);
    } else {
      throw DomainError("unknown move kind: " + kind);
    }
    m.sign = check_sign(x.at("sign").get<int>());
    if (x.contains("conjugator")) m.conj = hword_from_json(x.at("conjugator"), n);
    seq.moves.push_back(std::move(m));
  }
  return seq;
}

Json to_json(const WeightedGraph& g) {
  Json edges = Json::object();
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (g.weight(u, v) != 0) edges[std::to_string(u + 1) + "-" + std::to_string(v + 1)] = g.weight(u, v);
  return Json{{"n", g.n()}, {"edges", edges}};
}

WeightedGraph graph_from_json(const Json& j) {
  WeightedGraph g(j.at("n").get<int>());
  for (auto it = j.at("edges").begin(); it != j.at("edges").end(); ++it) {
    int u = 0, v = 0;
    char dash = 0;
    std::istringstream is(it.key());
    if (!(is >> u >> dash >> v) || dash != '-') throw DomainError("bad edge key: " + it.key());
    g.set_weight(u - 1, v - 1, it.value().get<int>());
  }
  return g;
}

}  // namespace linkhom
