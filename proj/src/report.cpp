#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "fivevec/cli.hpp"

namespace fv {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Flagged: return "flagged";
  }
  return "fail";
}

namespace {

std::string emit_json(const Report& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["tolerances"] = {{"transport", r.tol}, {"holonomy", r.holonomy_tol}};
  j["checks"] = nlohmann::ordered_json::array();
  for (const Check& c : r.checks)
    j["checks"].push_back(
        {{"id", c.id}, {"status", to_string(c.status)}, {"max_residual", c.max_residual}, {"details", c.details}});
  return j.dump(2) + "\n";
}

// Long exact residuals are cut in the table; the JSON form keeps them whole.
std::string clip(const std::string& s, std::size_t n) { return s.size() <= n ? s : s.substr(0, n - 3) + "..."; }

std::string emit_text(const Report& r) {
  std::ostringstream out;
  out << "suite " << r.suite << "  seed " << r.seed << "  tol " << r.tol << "  holonomy tol " << r.holonomy_tol << "\n";
  std::size_t wid = 2, wres = 12;
  for (const Check& c : r.checks) {
    wid = std::max(wid, c.id.size());
    wres = std::max(wres, std::min<std::size_t>(clip(c.max_residual, 24).size(), 24));
  }
  auto row = [&](const std::string& id, const std::string& st, const std::string& res, const std::string& det) {
    out << id << std::string(wid - id.size() + 2, ' ') << st << std::string(9 - st.size(), ' ') << res
        << std::string(wres - res.size() + 2, ' ') << det << "\n";
  };
  row("id", "status", "max_residual", "details");
  for (const Check& c : r.checks) row(c.id, to_string(c.status), clip(c.max_residual, 24), c.details);
  std::size_t pass = 0, fail = 0, flag = 0;
  for (const Check& c : r.checks) (c.status == CheckStatus::Pass ? pass : c.status == CheckStatus::Fail ? fail : flag)++;
  out << pass << " pass, " << fail << " fail, " << flag << " flagged\n";
  return out.str();
}

}  // namespace

std::string emit_report(const Report& r, const std::string& format) {
  if (format == "json") return emit_json(r);
  if (format == "text") return emit_text(r);
  throw std::invalid_argument("unknown report format '" + format + "'");
}

}  // namespace fv
