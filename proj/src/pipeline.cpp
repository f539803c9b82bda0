#include "pipeline.hpp"

#include <json.hpp>

#include "debase.hpp"
#include "errors.hpp"
#include "oracle.hpp"
#include "ruledcover.hpp"

namespace ruledcov {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json components_json(const std::array<RatFn, 3>& c) {
  return ordered_json::array({c[0].str(), c[1].str(), c[2].str()});
}

ordered_json log_json(const std::vector<Subst>& log) {
  ordered_json arr = ordered_json::array();
  for (const auto& e : log) {
    arr.push_back({{"kind", e.kind},
                   {"s", e.s_map.str()},
                   {"t", e.t_map.str()},
                   {"s_inv", e.s_inv.str()},
                   {"t_inv", e.t_inv.str()}});
  }
  return arr;
}

ordered_json line_json(const Line3& line) {
  ordered_json implicit = ordered_json::array();
  for (const auto& f : line.forms) implicit.push_back(f.str());
  ordered_json point = ordered_json::array();
  ordered_json dir = ordered_json::array();
  for (int i = 0; i < 3; ++i) {
    point.push_back(scalar_str(line.point[i]));
    dir.push_back(scalar_str(line.dir[i]));
  }
  return {{"implicit", implicit},
          {"parametric", {{"point", point}, {"direction", dir}}}};
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

// Shared exception-to-status boundary for all commands.
template <typename Fn>
CmdResult guarded(Fn&& fn) {
  CmdResult res;
  try {
    res = fn();
  } catch (const Error& e) {
    res.status = e.code();
    res.json.clear();
    res.error = e.what();
  } catch (const std::exception& e) {
    res.status = kError;
    res.json.clear();
    res.error = e.what();
  }
  return res;
}

}  // namespace

CmdResult cmd_cover(const InputDoc& doc) {
  return guarded([&] {
    CoverReport report =
        cover(doc.parsed_components(), static_cast<unsigned long>(doc.seed),
              doc.max_attempts);
    ordered_json j;
    j["primary"] = components_json(report.primary.components());
    j["secondary"] =
        report.secondary ? components_json(*report.secondary) : ordered_json();
    j["line"] = report.line ? line_json(*report.line) : ordered_json();
    j["normal"] = report.normal;
    j["cylinder"] = report.cylinder;
    j["log"] = log_json(report.log);
    return CmdResult{kOk, dump(j), ""};
  });
}

CmdResult cmd_debase(const InputDoc& doc) {
  return guarded([&] {
    SurfaceParam P = SurfaceParam::from_components(doc.parsed_components());
    DebaseResult r = remove_base_points_general(
        P, static_cast<unsigned long>(doc.seed), doc.max_attempts);
    ordered_json j;
    j["result"] = components_json(r.out.components());
    j["interpolant"] =
        r.interpolant ? ordered_json(r.interpolant->str()) : ordered_json();
    j["shears"] = r.shears;
    j["base_points_before"] = r.base_points_before.printed();
    return CmdResult{kOk, dump(j), ""};
  });
}

CmdResult cmd_check(const InputDoc& doc) {
  return guarded([&] {
    if (!doc.implicit)
      throw Error(kError, "check requires an implicit equation (F = ...)");
    MPoly F = *doc.parsed_implicit();
    std::array<RatFn, 3> comps = doc.parsed_components();
    bool member = implicit_check(comps, F);

    ordered_json j;
    j["implicit_check"] = member;
    bool pass = member;
    ordered_json cc;
    if (member) {
      try {
        CoverReport report =
            cover(comps, static_cast<unsigned long>(doc.seed), doc.max_attempts);
        Verdict v = cover_crosscheck(report, F,
                                     static_cast<unsigned long>(doc.seed));
        cc = ordered_json::object();
        cc["pass"] = v.pass;
        ordered_json items = ordered_json::array();
        for (const auto& item : v.items) {
          ordered_json entry = {{"name", item.name}, {"pass", item.pass}};
          if (!item.pass) entry["witness"] = item.witness;
          items.push_back(entry);
        }
        cc["items"] = items;
        pass = pass && v.pass;
      } catch (const NotRuledFormError&) {
        // not a ruled-form input: membership is the only applicable check
      }
    }
    j["crosscheck"] = cc;
    j["pass"] = pass;
    return CmdResult{pass ? kOk : kCheckFailed, dump(j), ""};
  });
}

CmdResult cmd_standardize(const InputDoc& doc) {
  return guarded([&] {
    RuledParam P = detect_ruled_form(doc.parsed_components());
    std::vector<Subst> log;
    P = standardize(std::move(P), static_cast<unsigned long>(doc.seed), log,
                    doc.max_attempts);
    ordered_json j;
    j["result"] = components_json(P.components());
    j["log"] = log_json(log);
    return CmdResult{kOk, dump(j), ""};
  });
}

CmdResult run_command(const std::string& command, const std::string& input_text) {
  return guarded([&]() -> CmdResult {
    InputDoc doc = parse_input_doc(input_text);
    if (command == "cover") return cmd_cover(doc);
    if (command == "debase") return cmd_debase(doc);
    if (command == "check") return cmd_check(doc);
    if (command == "standardize") return cmd_standardize(doc);
    throw Error(kError, "unknown command: " + command);
  });
}

}  // namespace ruledcov
