#include "tlab/cli_commands.hpp"

#include "tlab/enumeration.hpp"
#include "tlab/families.hpp"

#include <fstream>
#include <stdexcept>

namespace tlab::cli {

namespace {

PlayerPartition consecutive_partition(const CharacteristicInvariants& ci) {
  PlayerPartition part;
  part.totally_ordered = true;
  int p = 0;
  for (int k = 0; k < ci.t(); ++k) {
    std::vector<int> cls;
    for (int i = 0; i < ci.nbar[k]; ++i) cls.push_back(p++);
    part.classes.push_back(std::move(cls));
  }
  return part;
}

Json players_json(const std::vector<int>& players) {
  Json arr = Json::array();
  for (int p : players) arr.push_back(p);
  return arr;
}

void fill_complete_analysis(Json& out, const CharacteristicInvariants& ci,
                            const PlayerPartition& part) {
  out["complete"] = true;
  out["t"] = ci.t();
  out["r"] = ci.r();
  Json classes = Json::array();
  for (auto& c : part.classes) classes.push_back(players_json(c));
  out["player_classes"] = std::move(classes);
  out["invariants"] = invariants_to_json(ci);
  out["shift_maximal_losing"] = shift_maximal_losing_types(ci);

  bool veto_class = true, null_class = true;
  for (const TypeVec& row : ci.rows) {
    if (row[0] != ci.nbar[0]) veto_class = false;
    if (row[ci.t() - 1] != 0) null_class = false;
  }
  Json trivial;
  trivial["vetoers"] = veto_class ? players_json(part.classes.front()) : Json::array();
  trivial["nulls"] =
      (null_class && ci.t() > 1) ? players_json(part.classes.back()) : Json::array();
  out["trivial_players"] = std::move(trivial);

  auto rep = decide_weighted(ci);
  out["weighted"] = rep.has_value();
  if (rep) out["representation"] = representation_to_json(*rep);

  if (ci.t() == 2) {
    MPParameters mp = mp_parameters(ci);
    Json mpj;
    mpj["M"] = mp.M.str();
    mpj["P"] = mp.P.str();
    mpj["MP"] = mp.product().str();
    if (!mp.m_winning.empty()) {
      mpj["m_witness"] = Json{{"winning", mp.m_winning}, {"losing", mp.m_losing}};
    }
    mpj["p_witness"] = Json{{"winning", mp.p_winning}, {"losing", mp.p_losing}};
    out["mp"] = std::move(mpj);
  }
}

Json swap_certificate_json(const SwapCertificate& sc) {
  Json j;
  j["x1"] = coalition_to_json(sc.x1);
  j["x2"] = coalition_to_json(sc.x2);
  j["i"] = sc.i;
  j["j"] = sc.j;
  return j;
}

} // namespace

CmdResult cmd_analyze(const Json& doc) {
  GameDocument d = parse_game_document(doc);
  CmdResult res;
  Json& out = res.output;

  if (d.form == GameDocument::Form::Invariants) {
    out["n"] = d.invariants->n();
    fill_complete_analysis(out, *d.invariants, consecutive_partition(*d.invariants));
    return res;
  }

  SimpleGame g = document_to_game(d);
  out["n"] = g.n();
  if (!is_complete(g)) {
    out["complete"] = false;
    out["weighted"] = false;
    PlayerPartition part = partition_players(g);
    Json classes = Json::array();
    for (auto& c : part.classes) classes.push_back(players_json(c));
    out["player_classes"] = std::move(classes);
    out["totally_ordered"] = false;
    auto sc = swap_certificate(g);
    if (sc) out["swap_certificate"] = swap_certificate_json(*sc);
    return res;
  }
  ExtractedInvariants ex = extract_invariants(g);
  fill_complete_analysis(out, ex.ci, ex.partition);
  return res;
}

CmdResult cmd_certify(const Json& doc, const std::string& mode_str, int max_k, bool expand) {
  if (mode_str != "invariant" && mode_str != "trade")
    throw std::invalid_argument("certify: --mode must be 'invariant' or 'trade'");
  if (max_k < 2) throw std::invalid_argument("certify: --max-k must be >= 2");
  TradeMode mode = mode_str == "trade" ? TradeMode::Trade : TradeMode::InvariantTrade;

  GameDocument d = parse_game_document(doc);
  CmdResult res;
  Json& out = res.output;

  CharacteristicInvariants ci;
  PlayerPartition part;
  std::optional<SimpleGame> explicit_game;

  if (d.form == GameDocument::Form::Invariants) {
    ci = *d.invariants;
    part = consecutive_partition(ci);
  } else {
    explicit_game = document_to_game(d);
    if (!is_complete(*explicit_game)) {
      auto sc = swap_certificate(*explicit_game);
      out["verdict"] = "not-weighted";
      out["swap_certificate"] = swap_certificate_json(*sc);
      return res;
    }
    ExtractedInvariants ex = extract_invariants(*explicit_game);
    ci = std::move(ex.ci);
    part = std::move(ex.partition);
  }

  auto rep = decide_weighted(ci);
  if (rep) {
    out["verdict"] = "weighted";
    out["representation"] = representation_to_json(*rep);
    return res;
  }

  RobustnessReport rob = find_failure(ci, mode, max_k);
  if (!rob.fails_at) {
    out["verdict"] = "inconclusive-at-cap";
    out["max_k"] = max_k;
    out["weighted"] = false;
    res.exit_code = 2;
    return res;
  }
  out["verdict"] = "not-weighted";
  out["certificate"] = vectorial_to_json(*rob.certificate, mode, *rob.fails_at);
  if (expand) {
    TradingTransform tt = expand_vectorial(*rob.certificate, part);
    if (explicit_game &&
        verify_transform(*explicit_game, tt) != TransformVerdict::ValidCertificate)
      throw std::logic_error("certify: expanded transform failed verification");
    out["expanded"] = transform_to_json(tt);
  }
  return res;
}

CmdResult cmd_enumerate(const EnumerateArgs& args) {
  if (args.n < 1) throw std::invalid_argument("enumerate: --n must be >= 1");
  ClassifyOptions opts;
  opts.filter.t = args.t;
  opts.filter.r = args.r;
  opts.cap_k = args.cap_k;
  opts.threads = args.threads;
  if (args.mode == "trade") {
    opts.trade_mode = true;
    opts.invariant_mode = false;
  } else if (args.mode == "invariant") {
    opts.trade_mode = false;
    opts.invariant_mode = true;
  } else if (args.mode == "both") {
    opts.trade_mode = opts.invariant_mode = true;
  } else {
    throw std::invalid_argument("enumerate: --mode must be trade, invariant or both");
  }

  std::ofstream records;
  if (!args.records_path.empty()) {
    records.open(args.records_path);
    if (!records) throw std::invalid_argument("enumerate: cannot open records file");
    opts.record_sink = [&records](const ClassificationRecord& rec) {
      Json j = invariants_to_json(rec.ci);
      j["t"] = rec.t;
      j["r"] = rec.r;
      j["weighted"] = rec.weighted;
      if (rec.k_trade_fail) j["k_trade_fail"] = *rec.k_trade_fail;
      if (rec.k_invariant_fail) j["k_invariant_fail"] = *rec.k_invariant_fail;
      if (rec.certificate) {
        int k = rec.k_trade_fail ? *rec.k_trade_fail : *rec.k_invariant_fail;
        TradeMode mode = rec.k_trade_fail ? TradeMode::Trade : TradeMode::InvariantTrade;
        j["certificate"] = vectorial_to_json(*rec.certificate, mode, k);
      }
      records << j.dump() << "\n";
    };
  }

  CountReport rep = classify_all(args.n, opts);

  CmdResult res;
  std::string csv = count_report_csv_header(rep) + "\n" + count_report_csv_row(rep) + "\n";
  if (args.csv_path == "-") {
    res.csv = csv;
    return res;
  }
  if (!args.csv_path.empty()) {
    std::ofstream f(args.csv_path);
    if (!f) throw std::invalid_argument("enumerate: cannot open csv file");
    f << csv;
  }

  Json& out = res.output;
  out["n"] = rep.n;
  if (rep.filter.t) out["t"] = *rep.filter.t;
  if (rep.filter.r) out["r"] = *rep.filter.r;
  out["cap_k"] = rep.cap_k;
  out["cg"] = rep.total;
  out["wg"] = rep.weighted;
  Json tf = Json::object(), invf = Json::object();
  for (auto& [k, v] : rep.trade_fails) tf[std::to_string(k)] = v;
  for (auto& [k, v] : rep.invariant_fails) invf[std::to_string(k)] = v;
  if (opts.trade_mode) out["trade_fails"] = std::move(tf);
  if (opts.invariant_mode) out["invariant_fails"] = std::move(invf);
  out["inconclusive"] = rep.inconclusive;
  return res;
}

CmdResult cmd_formulas(const std::string& which, int n_max) {
  FormulaCheck check;
  if (which == "cg_r1") check = FormulaCheck::CgR1;
  else if (which == "wg_r1") check = FormulaCheck::WgR1;
  else if (which == "cg_t2") check = FormulaCheck::CgT2;
  else if (which == "cg_t1") check = FormulaCheck::CgT1;
  else throw std::invalid_argument("formulas: --check must be cg_r1, wg_r1, cg_t2 or cg_t1");

  FormulaReport rep = formula_check(check, n_max);
  CmdResult res;
  res.output["check"] = which;
  res.output["n_max"] = n_max;
  Json lines = Json::array();
  for (auto& l : rep.lines)
    lines.push_back(Json{{"n", l.n},
                         {"formula", l.formula_value},
                         {"enumerated", l.enumerated_value},
                         {"match", l.match}});
  res.output["lines"] = std::move(lines);
  res.output["all_match"] = rep.all_match;
  return res;
}

CmdResult cmd_family(const std::string& name,
                     const std::map<std::string, std::string>& params) {
  auto numeric_params = [&](const std::map<std::string, std::string>& src) {
    std::map<std::string, long long> out;
    for (auto& [k, v] : src) {
      try {
        out[k] = std::stoll(v);
      } catch (const std::exception&) {
        throw std::invalid_argument("family: parameter '" + k + "' must be an integer");
      }
    }
    return out;
  };

  CharacteristicInvariants ci;
  if (name == "lift_t") {
    auto p = params;
    auto base_it = p.find("base");
    if (base_it == p.end())
      throw std::invalid_argument("family lift_t: needs base=<family name>");
    std::string base_name = base_it->second;
    p.erase(base_it);
    TradeMode mode = TradeMode::InvariantTrade;
    auto mode_it = p.find("mode");
    if (mode_it != p.end()) {
      if (mode_it->second == "trade") mode = TradeMode::Trade;
      else if (mode_it->second != "invariant")
        throw std::invalid_argument("family lift_t: mode must be invariant or trade");
      p.erase(mode_it);
    }
    ci = lift_types(generate(FamilySpec{base_name, numeric_params(p)}), mode);
  } else {
    ci = generate(FamilySpec{name, numeric_params(params)});
  }

  CmdResult res;
  res.output = invariants_to_json(ci);
  return res;
}

CmdResult cmd_convert(const Json& doc, const std::string& to) {
  GameDocument d = parse_game_document(doc);
  CmdResult res;

  if (to == "explicit") {
    res.output = game_to_json(document_to_game(d));
    return res;
  }

  CharacteristicInvariants ci;
  if (d.form == GameDocument::Form::Invariants) {
    ci = *d.invariants;
  } else {
    SimpleGame g = document_to_game(d);
    if (!is_complete(g))
      throw std::invalid_argument(
          "convert: game is not complete; invariants and weighted forms do not exist");
    ci = extract_invariants(g).ci;
  }

  if (to == "invariants") {
    res.output = invariants_to_json(ci);
    return res;
  }
  if (to == "weighted") {
    auto rep = decide_weighted(ci);
    if (!rep) throw std::invalid_argument("convert: game is not weighted");
    res.output = representation_to_json(*rep);
    return res;
  }
  throw std::invalid_argument("convert: --to must be explicit, invariants or weighted");
}

} // namespace tlab::cli
