#include "tlab/json_io.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tlab {

namespace {

std::vector<long long> int_array(const Json& j, const std::string& field) {
  if (!j.is_array()) throw std::invalid_argument("field '" + field + "' must be an array");
  std::vector<long long> out;
  for (auto& v : j) {
    if (!v.is_number_integer())
      throw std::invalid_argument("field '" + field + "' must contain integers");
    out.push_back(v.get<long long>());
  }
  return out;
}

} // namespace

GameDocument parse_game_document(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("game document must be a JSON object");
  GameDocument doc;

  if (j.contains("minimal_winning")) {
    if (!j.contains("n") || !j["n"].is_number_integer())
      throw std::invalid_argument("explicit form needs integer field 'n'");
    int n = j["n"].get<int>();
    if (n < 1 || n > 64) throw std::invalid_argument("'n' must be in 1..64");
    std::vector<Coalition> rows;
    for (auto& arr : j["minimal_winning"]) {
      uint64_t bits = 0;
      for (long long p : int_array(arr, "minimal_winning")) {
        if (p < 0 || p >= n)
          throw std::invalid_argument("player index " + std::to_string(p) + " out of 0..n-1");
        bits |= uint64_t{1} << p;
      }
      rows.emplace_back(bits);
    }
    doc.form = GameDocument::Form::Explicit;
    doc.game = SimpleGame(n, std::move(rows));
    return doc;
  }

  if (j.contains("shift_minimal")) {
    doc.form = GameDocument::Form::Invariants;
    doc.invariants = invariants_from_json(j);
    return doc;
  }

  if (j.contains("quota")) {
    if (!j["quota"].is_number_integer())
      throw std::invalid_argument("field 'quota' must be an integer");
    doc.form = GameDocument::Form::Weighted;
    doc.quota = j["quota"].get<long long>();
    if (doc.quota < 1) throw std::invalid_argument("'quota' must be positive");
    if (j.contains("weights")) {
      doc.player_weights = int_array(j["weights"], "weights");
    } else if (j.contains("class_weights") && j.contains("classes")) {
      auto cw = int_array(j["class_weights"], "class_weights");
      auto cls = int_array(j["classes"], "classes");
      if (cw.size() != cls.size())
        throw std::invalid_argument("'class_weights' and 'classes' must have equal length");
      for (size_t k = 0; k < cls.size(); ++k) {
        if (cls[k] < 1) throw std::invalid_argument("'classes' entries must be positive");
        for (long long i = 0; i < cls[k]; ++i) doc.player_weights.push_back(cw[k]);
      }
    } else {
      throw std::invalid_argument("weighted form needs 'weights' or 'class_weights'+'classes'");
    }
    for (long long w : doc.player_weights)
      if (w < 0) throw std::invalid_argument("weights must be non-negative");
    if (doc.player_weights.empty() || (int)doc.player_weights.size() > 64)
      throw std::invalid_argument("weighted form needs 1..64 players");
    return doc;
  }

  throw std::invalid_argument(
      "unrecognized game document: expected 'minimal_winning', 'shift_minimal' or 'quota'");
}

SimpleGame weighted_to_game(long long quota, const std::vector<long long>& weights) {
  const int n = (int)weights.size();
  long long total = std::accumulate(weights.begin(), weights.end(), 0LL);
  if (total < quota) throw std::invalid_argument("weighted form: no winning coalition");

  // Players in descending weight; prefixes of a minimal winning coalition
  // stay below quota, so stopping at the first winning set is exhaustive.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return weights[a] > weights[b]; });
  std::vector<long long> suffix(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + weights[order[i]];

  std::vector<Coalition> rows;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int idx, long long w, long long wmin) -> void {
    if (w >= quota) {
      if (w - wmin < quota) {
        uint64_t bits = 0;
        for (int p : cur) bits |= uint64_t{1} << p;
        rows.emplace_back(bits);
        if (rows.size() > 2'000'000)
          throw std::invalid_argument("weighted form: minimal winning family too large");
      }
      return;
    }
    if (idx == n || w + suffix[idx] < quota) return;
    cur.push_back(order[idx]);
    self(self, idx + 1, w + weights[order[idx]], std::min(wmin, weights[order[idx]]));
    cur.pop_back();
    self(self, idx + 1, w, wmin);
  };
  rec(rec, 0, 0, INT64_MAX);
  if (rows.empty()) throw std::invalid_argument("weighted form: no winning coalition");
  return SimpleGame(n, std::move(rows));
}

SimpleGame document_to_game(const GameDocument& doc) {
  switch (doc.form) {
    case GameDocument::Form::Explicit: return *doc.game;
    case GameDocument::Form::Invariants: return reconstruct(*doc.invariants);
    case GameDocument::Form::Weighted: return weighted_to_game(doc.quota, doc.player_weights);
  }
  throw std::logic_error("unreachable");
}

Json coalition_to_json(const Coalition& c) {
  Json arr = Json::array();
  for (int p : c.members()) arr.push_back(p);
  return arr;
}

Json game_to_json(const SimpleGame& g) {
  Json j;
  j["n"] = g.n();
  Json rows = Json::array();
  for (const Coalition& m : g.minimal_winning()) rows.push_back(coalition_to_json(m));
  j["minimal_winning"] = std::move(rows);
  return j;
}

Json invariants_to_json(const CharacteristicInvariants& ci) {
  Json j;
  j["classes"] = ci.nbar;
  j["shift_minimal"] = ci.rows;
  return j;
}

CharacteristicInvariants invariants_from_json(const Json& j) {
  CharacteristicInvariants ci;
  for (long long v : int_array(j.at("classes"), "classes")) ci.nbar.push_back((int)v);
  if (!j.contains("shift_minimal"))
    throw std::invalid_argument("invariants form needs 'shift_minimal'");
  for (auto& row : j["shift_minimal"]) {
    TypeVec r;
    for (long long v : int_array(row, "shift_minimal")) r.push_back((int)v);
    ci.rows.push_back(std::move(r));
  }
  InvariantsValidation v = validate_invariants(ci);
  if (!v.valid)
    throw std::invalid_argument("invalid invariants: " + v.violations.front());
  return ci;
}

Json representation_to_json(const WeightedRepresentation& rep) {
  Json j;
  j["quota"] = rep.quota;
  j["class_weights"] = rep.class_weights;
  j["classes"] = rep.nbar;
  return j;
}

Json vectorial_to_json(const VectorialTrade& v, TradeMode mode, int k) {
  Json j;
  j["mode"] = (mode == TradeMode::InvariantTrade) ? "invariant-trade" : "trade";
  j["k"] = k;
  auto side = [](const std::vector<std::pair<TypeVec, int>>& s) {
    Json arr = Json::array();
    for (auto& [type, mult] : s) arr.push_back(Json{{"type", type}, {"mult", mult}});
    return arr;
  };
  j["pre"] = side(v.pre);
  j["post"] = side(v.post);
  return j;
}

VectorialTrade vectorial_from_json(const Json& j) {
  VectorialTrade v;
  auto side = [](const Json& arr, const char* field) {
    std::vector<std::pair<TypeVec, int>> out;
    for (auto& e : arr) {
      TypeVec type;
      for (long long x : int_array(e.at("type"), field)) type.push_back((int)x);
      out.emplace_back(std::move(type), e.at("mult").get<int>());
    }
    return out;
  };
  v.pre = side(j.at("pre"), "pre");
  v.post = side(j.at("post"), "post");
  return v;
}

Json transform_to_json(const TradingTransform& t) {
  Json j;
  Json pre = Json::array(), post = Json::array();
  for (const Coalition& c : t.pre) pre.push_back(coalition_to_json(c));
  for (const Coalition& c : t.post) post.push_back(coalition_to_json(c));
  j["pre"] = std::move(pre);
  j["post"] = std::move(post);
  return j;
}

} // namespace tlab
