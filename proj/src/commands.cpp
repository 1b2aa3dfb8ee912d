#include "bicross/commands.hpp"

#include <algorithm>
#include <sstream>

#include "bicross/fusion.hpp"
#include "bicross/verification.hpp"

namespace bicross {

int exit_code_for(ErrorKind k) {
    switch (k) {
    case ErrorKind::InvalidInput:
    case ErrorKind::ProviderUnavailable:
    case ErrorKind::BallTooSmall:
        return kExitInvalid;
    case ErrorKind::NonUnitary:
        return kExitVerificationFailed;
    case ErrorKind::DivisionByZero:
    case ErrorKind::InternalInconsistency:
        return kExitInternal;
    }
    return kExitInternal;
}

std::string to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::InvalidInput: return "invalid_input";
    case ErrorKind::DivisionByZero: return "division_by_zero";
    case ErrorKind::InternalInconsistency: return "internal_inconsistency";
    case ErrorKind::NonUnitary: return "non_unitary";
    case ErrorKind::ProviderUnavailable: return "provider_unavailable";
    case ErrorKind::BallTooSmall: return "ball_too_small";
    }
    return "unknown";
}

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"verify", "simples", "character", "fuse", "dual",
                                                "indicators", "fusion-table", "cqg-check"};
    return names;
}

Json Report::to_json() const {
    return Json{{"schema_version", kSchemaVersion},
                {"tool_version", kToolVersion},
                {"command", command},
                {"config", {{"name", config_name}, {"hash", config_hash}}},
                {"status", status},
                {"exit_code", exit_code},
                {"payload", payload}};
}

namespace {

void render(std::ostringstream& out, const Json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const Json& v = it.value();
            if (v.is_structured() && !v.empty()) {
                out << pad << it.key() << ":\n";
                render(out, v, indent + 2);
            } else {
                out << pad << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_structured() && !v.empty()) {
                out << pad << "-\n";
                render(out, v, indent + 2);
            } else {
                out << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else {
        out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

Report make_report(const Config& cfg, const std::string& command) {
    Report r;
    r.command = command;
    r.config_name = cfg.name;
    r.config_hash = cfg.hash;
    r.status = "pass";
    return r;
}

void set_verdict(Report& r, bool ok) {
    r.status = ok ? "pass" : "fail";
    r.exit_code = ok ? kExitOk : kExitVerificationFailed;
}

Json ball_note(const Config& cfg, int radius) {
    const FGroup& F = cfg.pair->F();
    if (F.is_finite()) return Json{{"radius", radius}, {"complete", true}, {"note", "F is finite; every orbit is listed"}};
    return Json{{"radius", radius},
                {"complete", false},
                {"note", "orbits meeting the sup-norm ball of radius " + std::to_string(radius) + " in Z^" +
                             std::to_string(F.rank()) + "; nothing is claimed beyond it"}};
}

const std::string& single_arg(const CommandRequest& req, std::size_t count, const char* usage) {
    if (req.args.size() != count) throw InvalidInput(std::string("usage: ") + usage);
    return req.args.front();
}

Report cmd_verify(const Config& cfg, int radius) {
    Report r = make_report(cfg, "verify");
    const HopfAlgebra& h = *cfg.hopf;
    const auto mp = cfg.pair->verify(radius);
    const auto co = verify_cocycles(*cfg.pair, h.sigma(), h.tau(), radius);
    const auto hv = verify_hopf(h, radius);
    r.payload = Json{{"ball", ball_note(cfg, radius)},
                     {"matched_pair", mp.to_json()},
                     {"cocycles", co.to_json()},
                     {"hopf", hv.to_json()}};
    set_verdict(r, mp.passed() && co.passed() && hv.passed());
    return r;
}

Report cmd_simples(const Config& cfg, int radius) {
    Report r = make_report(cfg, "simples");
    ComoduleEngine e(cfg.hopf, cfg.user_char_tables);
    Json list = Json::array();
    for (const auto& d : e.enumerate(radius)) list.push_back(e.to_json(d));
    const auto audit = dimension_audit(e, radius);
    const auto sum = direct_sum_check(e, radius);
    r.payload = Json{{"ball", ball_note(cfg, radius)},
                     {"count", list.size()},
                     {"simples", list},
                     {"dimension_audit", audit.to_json(e)},
                     {"direct_sum", sum.to_json()}};
    set_verdict(r, audit.passed() && sum.passed);
    return r;
}

Report cmd_character(const Config& cfg, const CommandRequest& req) {
    Report r = make_report(cfg, "character");
    if (req.args.size() != 2 && req.args.size() != 1) throw InvalidInput("usage: character <f> <chi-index> (or <f>:<i>)");
    ComoduleEngine e(cfg.hopf, cfg.user_char_tables);
    const SimpleDesc& d = req.args.size() == 2 ? e.find(req.args[0] + ":" + req.args[1]) : e.find(req.args[0]);
    const HElem& chi = e.character(d);
    const bool agrees = e.character_inverse_form(d) == chi;
    const CycNum counit = cfg.hopf->counit(chi);
    r.payload = Json{{"simple", e.to_json(d)},
                     {"character", chi.to_json(cfg.hopf->G())},
                     {"counit", counit.to_string()},
                     {"inverse_form_agrees", agrees}};
    set_verdict(r, agrees && counit == CycNum(d.dim_total));
    return r;
}

Report cmd_fuse(const Config& cfg, const CommandRequest& req) {
    Report r = make_report(cfg, "fuse");
    if (req.args.size() != 2) throw InvalidInput("usage: fuse <f1>:<i1> <f2>:<i2>");
    ComoduleEngine e(cfg.hopf, cfg.user_char_tables);
    FusionEngine fe(e);
    const SimpleDesc& a = e.find(req.args[0]);
    const SimpleDesc& b = e.find(req.args[1]);
    const FusionRow& row = fe.decompose(a, b);
    r.payload = Json{{"left", e.to_json(a)}, {"right", e.to_json(b)}, {"row", row.to_json()}};
    if (auto sc = fe.smash_shortcut(a, b)) {
        if (sc->summands != row.summands) {
            throw InternalInconsistency("closed-form smash product row disagrees with the linear solve for " + a.id +
                                        " * " + b.id);
        }
        r.payload["smash_closed_form_agrees"] = true;
    }
    return r;
}

Report cmd_dual(const Config& cfg, const CommandRequest& req) {
    Report r = make_report(cfg, "dual");
    const std::string& id = single_arg(req, 1, "dual <f>:<i>");
    ComoduleEngine e(cfg.hopf, cfg.user_char_tables);
    FusionEngine fe(e);
    const SimpleDesc& d = e.find(id);
    const SimpleDesc& dd = fe.dual_of(d);
    const bool involution = fe.dual_of(dd).id == d.id;
    r.payload = Json{{"simple", d.id}, {"dual", dd.id}, {"self_dual", dd.id == d.id}, {"involution", involution}};
    if (auto crit = fe.smash_self_dual(d)) {
        r.payload["smash_criterion"] = *crit;
        if (*crit != (dd.id == d.id)) throw InternalInconsistency("self-duality criterion disagrees for " + d.id);
    }
    set_verdict(r, involution);
    return r;
}

Report cmd_indicators(const Config& cfg, int radius) {
    Report r = make_report(cfg, "indicators");
    ComoduleEngine e(cfg.hopf, cfg.user_char_tables);
    FusionEngine fe(e);
    Json list = Json::array();
    for (const auto& d : e.enumerate(radius)) {
        const SimpleDesc& dd = fe.dual_of(d);
        list.push_back({{"id", d.id},
                        {"dim", d.dim_total},
                        {"dual", dd.id},
                        {"self_dual", dd.id == d.id},
                        {"fs_indicator", fe.fs_indicator(d)}});
    }
    r.payload = Json{{"ball", ball_note(cfg, radius)}, {"simples", list}};
    return r;
}

Report cmd_fusion_table(const Config& cfg, int radius, int max_simples) {
    Report r = make_report(cfg, "fusion-table");
    ComoduleEngine e(cfg.hopf, cfg.user_char_tables);
    FusionEngine fe(e);
    const auto simples = e.enumerate(radius);
    if (static_cast<int>(simples.size()) > max_simples) {
        throw InvalidInput("fusion-table: " + std::to_string(simples.size()) + " simples at radius " +
                           std::to_string(radius) + " exceed --max-simples " + std::to_string(max_simples) +
                           "; lower the radius or raise the limit");
    }
    const auto table = fusion_table(fe, simples, radius);
    const auto ring = verify_based_ring(table, &fe);
    r.payload = table.to_json(e);
    r.payload["ball"] = ball_note(cfg, radius);
    r.payload["based_ring"] = ring.to_json();
    set_verdict(r, ring.passed());
    return r;
}

Report cmd_cqg(const Config& cfg, int radius) {
    Report r = make_report(cfg, "cqg-check");
    const HopfAlgebra& h = *cfg.hopf;
    const auto u = is_unitary(*cfg.pair, h.sigma(), h.tau(), radius);
    r.payload = Json{{"ball", ball_note(cfg, radius)}, {"unitarity", u.to_json()}};
    if (!u.unitary) {
        r.payload["witness"] = u.witness;
        set_verdict(r, false);
        return r;
    }
    const auto star = verify_star(h, radius);
    r.payload["star"] = star.to_json();
    // Haar positivity on the irreducible characters in the ball
    ComoduleEngine e(cfg.hopf, cfg.user_char_tables);
    Json pos = Json::array();
    bool positive = true;
    for (const auto& d : e.enumerate(radius)) {
        const auto p = haar_positivity(h, e.character(d));
        const bool ok = p.certified || p.numerically_positive;
        positive = positive && ok;
        pos.push_back({{"id", d.id}, {"value", p.value.to_string()}, {"certified", p.certified}, {"positive", ok}});
    }
    r.payload["haar_positivity"] = pos;
    set_verdict(r, star.passed() && positive);
    return r;
}

} // namespace

std::string Report::to_text() const {
    std::ostringstream out;
    out << "command: " << command << "\n"
        << "config: " << config_name << " (" << config_hash << ")\n"
        << "status: " << status << " (exit " << exit_code << ")\n";
    render(out, payload, 0);
    return out.str();
}

Report error_report(const std::string& command, const Config* cfg, const Error& e) {
    Report r;
    r.command = command;
    if (cfg) {
        r.config_name = cfg->name;
        r.config_hash = cfg->hash;
    }
    r.status = "error";
    r.exit_code = exit_code_for(e.kind());
    r.payload = Json{{"error_kind", to_string(e.kind())}, {"message", e.what()}};
    return r;
}

Report run_command(const Config& cfg, const CommandRequest& req) {
    const int radius = req.radius.value_or(cfg.radius);
    try {
        if (radius < 0) throw InvalidInput("--radius must be nonnegative");
        const auto& c = req.command;
        if (c == "verify") return cmd_verify(cfg, radius);
        if (c == "simples") return cmd_simples(cfg, radius);
        if (c == "character") return cmd_character(cfg, req);
        if (c == "fuse") return cmd_fuse(cfg, req);
        if (c == "dual") return cmd_dual(cfg, req);
        if (c == "indicators") return cmd_indicators(cfg, radius);
        if (c == "fusion-table") return cmd_fusion_table(cfg, radius, req.max_simples);
        if (c == "cqg-check") return cmd_cqg(cfg, radius);
        throw InvalidInput("unknown command '" + c + "'");
    } catch (const Error& e) {
        return error_report(req.command, &cfg, e);
    }
}

} // namespace bicross
